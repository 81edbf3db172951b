#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fockalg/rmatrix.hpp"

using namespace fockalg;

namespace {

const Q T1(3, 7), T2(-5, 11);

RatFunc lin(const Q& root) { return RatFunc::var() - RatFunc(root); }

}  // namespace

TEST_CASE("low degree reflection blocks") {
    RMatrix R(T1, T2);
    CHECK(R.minus_block(0) == Matrix<RatFunc>::identity(1));
    Q h = -T1 - T2;
    // single equation at degree one: R = (u + hbar) / (u - hbar)
    CHECK(R.minus_block(1)(0, 0) == lin(-h) / lin(h));
    CHECK(R.full_block(0) == Matrix<RatFunc>::identity(1));
}

TEST_CASE("full block at degree one") {
    RMatrix R(T1, T2);
    const Matrix<RatFunc>& R1 = R.full_block(1);
    Matrix<Q> P(2, 2);
    P(0, 1) = 1;
    P(1, 0) = 1;
    CHECK(evaluate(R1, Q(0)) == P);
    CHECK(swap_matrix(1) == P);
    for (size_t i = 0; i < R1.a.size(); ++i) {
        auto e = expand_at_infinity(R1.a[i], 0);
        CHECK(e[0] == (i == 0 || i == 3 ? 1 : 0));
    }
}

TEST_CASE("unitarity and solver agreement at degree two") {
    RMatrix R(T1, T2);
    const Matrix<RatFunc>& R2 = R.full_block(2);
    Matrix<RatFunc> S = convert<RatFunc>(swap_matrix(2));
    Poly mu(std::vector<Q>{Q(0), Q(-1)});
    Matrix<RatFunc> back = map_matrix(R2, [&](const RatFunc& f) { return f.substitute(mu); });
    CHECK(R2 * S * back * S == Matrix<RatFunc>::identity(R2.rows));
    BosonSpec<Poly> spec = geometric_minus_boson(T1, T2);
    for (int n = 0; n <= 2; ++n)
        CHECK(reflection_block(n, spec, SolveMethod::interpolation).matrix ==
              reflection_block(n, spec, SolveMethod::bareiss).matrix);
}

TEST_CASE("sign-flipped boson") {
    BosonSpec<Poly> spec = geometric_minus_boson(T1, T2);
    BosonSpec<Poly> neg{spec.tau1, -spec.eta, -spec.kappa};
    for (int n = 1; n <= 3; ++n) {
        Matrix<RatFunc> X = bareiss_solve(verma_matrix(n, spec).transpose(), verma_matrix(n, neg).transpose()).transpose();
        for (int i = 0; i < X.rows; ++i)
            for (int j = 0; j < X.cols; ++j) {
                Q want = i != j ? Q(0) : Q(partitions_of(n)[i].size() % 2 ? -1 : 1);
                CHECK(X(i, j) == RatFunc(want));
            }
    }
}

TEST_CASE("Kac determinant at degree two") {
    RatFunc want = lin(T1 + T2) * lin(T1 + 2 * T2) * lin(2 * T1 + T2) /
                   (lin(-T1 - T2) * lin(-T1 - 2 * T2) * lin(-2 * T1 - T2));
    CHECK(minus_determinant(2, T1, T2) == want);
    DeterminantFactorization f = factor_on_lattice(want, T1, T2);
    CHECK(f.complete);
    CHECK(f.zeros.size() == 3);
    CHECK(f.poles.size() == 3);
    // degree two of the full block: two copies of the degree one factor
    RatFunc r1 = minus_determinant(1, T1, T2);
    CHECK(full_determinant(2, T1, T2) == want * r1);
}

TEST_CASE("Gauss factorization") {
    RMatrix R(T1, T2);
    GaussFactors g0 = gauss_factorize(RMatrixBlock{0, R.full_block(0), BlockSide::full_tensor});
    CHECK(g0.U == Matrix<RatFunc>::identity(1));
    CHECK(g0.S == Matrix<RatFunc>::identity(1));
    GaussFactors g2 = gauss_factorize(RMatrixBlock{2, R.full_block(2), BlockSide::full_tensor});
    CHECK(g2.L * g2.S == g2.R);
    CHECK(g2.U * g2.L == Matrix<RatFunc>::identity(g2.R.rows));
    CHECK(g2.block_start == std::vector<int>{0, 2, 3, 5});
}

TEST_CASE("Yang-Baxter at degree two") {
    RMatrix R(T1, T2);
    Q u(2, 3), v(-7, 5);
    Matrix<Q> a = R.on_triple(2, 0, 1, u), b = R.on_triple(2, 0, 2, u + v), c = R.on_triple(2, 1, 2, v);
    CHECK(a * b * c == c * b * a);
}
