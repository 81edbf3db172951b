#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "fockalg/virasoro.hpp"

namespace fockalg {

enum class BlockSide { minus_boson, full_tensor };

struct RMatrixBlock {
    int degree = 0;
    Matrix<RatFunc> matrix;
    BlockSide side = BlockSide::minus_boson;
};

enum class SolveMethod { bareiss, interpolation };

// Columns: L_{-mu_1} ... L_{-mu_l} vac (rightmost applied first) in the monomial basis, mu over partitions_of(n).
Matrix<Poly> verma_matrix(int n, const BosonSpec<Poly>& spec);

// R_n with R_n B(kappa) = B(-kappa).
RMatrixBlock reflection_block(int n, const BosonSpec<Poly>& spec, SolveMethod method = SolveMethod::bareiss);

// The geometric minus boson in u: tau1 doubled, eta = u/2, kappa = hbar/2.
BosonSpec<Poly> geometric_minus_boson(const Q& t1, const Q& t2);

// R on degree n of F (x) F in the pair-of-partitions basis; u = a_1 - a_2.
RMatrixBlock full_r_block(int n, const Q& t1, const Q& t2, SolveMethod method = SolveMethod::bareiss);

// Factor swap on degree n of F (x) F, and the checked variant R^vee = swap R.
Matrix<Q> swap_matrix(int n);
Matrix<RatFunc> r_vee(const RMatrixBlock& full);

// R = U^{-1} S, U block-lower with identity diagonal blocks, S block-upper, grading by first-factor
// degree in ascending order. Matrices are returned in the permuted basis given by `order`.
struct GaussFactors {
    std::vector<int> order;       // pair-basis indices sorted by first-factor degree
    std::vector<int> block_start;  // start of grade k inside `order`, plus a final sentinel
    Matrix<RatFunc> L, U, S, R;  // R permuted, R = L S, U = L^{-1}
};
GaussFactors gauss_factorize(const RMatrixBlock& full);

// Roots and poles of a rational function at lattice points m t1 + n t2, |m|, |n| <= bound.
struct LatticeFactor {
    int m, n, mult;
};
struct DeterminantFactorization {
    std::vector<LatticeFactor> zeros, poles;
    Q constant;       // leading coefficient ratio
    bool complete = false;  // every factor accounted for
};
DeterminantFactorization factor_on_lattice(const RatFunc& f, const Q& t1, const Q& t2, int bound = 16);
RatFunc minus_determinant(int n, const Q& t1, const Q& t2);
RatFunc full_determinant(int n, const Q& t1, const Q& t2);

// Cache of blocks for fixed (t1, t2); thread-safe.
class RMatrix {
public:
    RMatrix(const Q& t1, const Q& t2, SolveMethod method = SolveMethod::bareiss);
    const Q& t1() const { return t1_; }
    const Q& t2() const { return t2_; }
    const Matrix<RatFunc>& minus_block(int n);
    const Matrix<RatFunc>& full_block(int n);
    Matrix<Q> full_at(int n, const Q& u);
    // R_{ij}(u) on degree n of F^{(x) 3}, factors i < j (0-indexed).
    Matrix<Q> on_triple(int n, int i, int j, const Q& u);

private:
    Q t1_, t2_;
    SolveMethod method_;
    std::recursive_mutex mu_;
    std::map<int, std::unique_ptr<Matrix<RatFunc>>> minus_, full_;
};

}  // namespace fockalg
