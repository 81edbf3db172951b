#pragma once

#include <map>
#include <string>
#include <vector>

#include "fockalg/matrix.hpp"

namespace fockalg {

// Chain states: bit b_i of site i (1-indexed), index = sum b_i 2^{n-i}.
struct SpinState {
    int n = 0;
    unsigned bits = 0;
    int weight() const;
    int index() const { return static_cast<int>(bits); }
    int bit(int site) const { return (bits >> (n - site)) & 1u; }
};
std::vector<int> weight_sector(int n, int k);  // indices of states with k ones

struct TwistMatrix {
    Q g0, g1;
};

// Yang R on Q^2 (x) Q^2 in the basis e_i (x) e_j -> 2 i + j: (u - hbar P) / (u - hbar).
Matrix<RatFunc> yang_r(const Q& hbar);
Matrix<Q> yang_r(const Q& u, const Q& hbar);
Matrix<Q> permutation_2x2();
// e00 (x) e11 + e11 (x) e00 - e01 (x) e10 - e10 (x) e01
Matrix<Q> classical_r_formula();

// Restriction matrices of the T*P^1 stable envelopes, chamber +1 or -1.
Matrix<RatFunc> stab_tp1(int chamber, const Q& hbar);

// tr_0 (g (x) 1) R_{0n}(u - a_n) ... R_{01}(u - a_1) as a 2^n x 2^n matrix over RatFunc in u.
Matrix<RatFunc> transfer_matrix(const TwistMatrix& g, const std::vector<Q>& a, const Q& hbar);
Matrix<Q> transfer_matrix_at(const TwistMatrix& g, const std::vector<Q>& a, const Q& hbar, const Q& u);
// (1/hbar) [u^{-k-1}] of the transfer matrix at u = infinity.
Matrix<Q> baxter_coefficient(const TwistMatrix& g, int k, const std::vector<Q>& a, const Q& hbar);

// Restrict a chain operator to a weight sector.
Matrix<Q> sector_block(const Matrix<Q>& m, const std::vector<int>& sector);

// Total e and f of gl(2) on the chain: e = sum E_01^{(i)}, f = sum E_10^{(i)}, with E_ab e_b = e_a.
Matrix<Q> chain_e(int n);
Matrix<Q> chain_f(int n);

// Conormal classes sigma_U labelled by subspaces: "U<i>" = span(e_i..e_n), "P<i>" = span(xi_1..xi_{i-1}).
using ClassExpansion = std::map<std::string, Z>;
ClassExpansion stab_point_class(int n, int i);        // Stab(x_i) = sigma_{U_i} + sigma_{U_{i+1}}
ClassExpansion flop_image(int n, const ClassExpansion& x);
ClassExpansion flop_expected(int n, int i);          // sigma_{U_i perp} + sigma_{U_{i+1} perp}

}  // namespace fockalg
