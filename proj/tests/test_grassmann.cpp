#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fockalg/grassmann.hpp"

using namespace fockalg;

namespace {

const Q H(-3, 7);

RatFunc u() { return RatFunc::var(); }

}  // namespace

TEST_CASE("Yang R-matrix") {
    Matrix<RatFunc> R = yang_r(H);
    for (size_t i = 0; i < R.a.size(); ++i) {
        auto e = expand_at_infinity(R.a[i], 0);
        CHECK(e[0] == (i % 5 == 0 ? 1 : 0));
    }
    // e0 (x) e0 is fixed
    CHECK(R(0, 0) == RatFunc(1));
    for (int i = 1; i < 4; ++i) CHECK(R(i, 0).is_zero());
    CHECK(evaluate(R, Q(5)) == yang_r(Q(5), H));
    CHECK_THROWS(yang_r(H, H));
}

TEST_CASE("stable envelopes of T*P1") {
    Matrix<RatFunc> p = stab_tp1(1, H), m = stab_tp1(-1, H);
    RatFunc h(H);
    CHECK(p(0, 0) == -u() - h);
    CHECK(p(0, 1).is_zero());
    CHECK(p(1, 0) == -h);
    CHECK(p(1, 1) == u());
    CHECK(m(0, 0) == -u());
    CHECK(m(0, 1) == -h);
    CHECK(m(1, 0).is_zero());
    CHECK(m(1, 1) == u() - h);
    // (1 - (hbar/u) s) / (1 - hbar/u) with s the swap
    Matrix<RatFunc> ratio = inverse(m) * p;
    RatFunc den = RatFunc(1) - h / u();
    CHECK(ratio(0, 0) == RatFunc(1) / den);
    CHECK(ratio(1, 1) == RatFunc(1) / den);
    CHECK(ratio(0, 1) == (-h / u()) / den);
    CHECK(ratio(1, 0) == (-h / u()) / den);
    CHECK_THROWS(stab_tp1(0, H));
}

TEST_CASE("transfer matrices of short chains") {
    TwistMatrix g{Q(2, 5), Q(-3)};
    Matrix<RatFunc> T0 = transfer_matrix(g, {}, H);
    REQUIRE(T0.rows == 1);
    CHECK(T0(0, 0) == RatFunc(g.g0 + g.g1));
    Q a1(1, 4);
    Matrix<RatFunc> T1 = transfer_matrix(g, {a1}, H);
    for (size_t i = 0; i < T1.a.size(); ++i)
        CHECK(expand_at_infinity(T1.a[i], 0)[0] == (i % 3 == 0 ? g.g0 + g.g1 : Q(0)));
    // hand trace: T = tr + hbar/(u - a1 - hbar) * diag(g1, g0)
    RatFunc f = RatFunc(H) / (u() - RatFunc(a1 + H));
    CHECK(T1(0, 0) == RatFunc(g.g0 + g.g1) + f * RatFunc(g.g1));
    CHECK(T1(1, 1) == RatFunc(g.g0 + g.g1) + f * RatFunc(g.g0));
    CHECK(T1(0, 1).is_zero());
}

TEST_CASE("Baxter coefficients at n = 2") {
    Q q(5, 2);
    std::vector<Q> a{Q(1, 2), Q(-2, 5)};
    Matrix<Q> E0 = baxter_coefficient(TwistMatrix{q, Q(1)}, 0, a, H);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (i != j) CHECK(E0(i, j) == 0);
    std::vector<int> sec = weight_sector(2, 1);
    CHECK(sector_block(E0, sec) == Matrix<Q>::identity(2).scaled(q + 1));
    Matrix<Q> E1 = sector_block(baxter_coefficient(TwistMatrix{q, Q(1)}, 1, a, H), sec);
    CHECK(E1(0, 1) == H * q);
    CHECK(E1(1, 0) == H);
    Matrix<Q> ef = sector_block(chain_e(2) * chain_f(2), sec);
    CHECK(ef == [] {
        Matrix<Q> m(2, 2);
        for (auto& x : m.a) x = 1;
        return m;
    }());
    CHECK_THROWS(baxter_coefficient(TwistMatrix{q, Q(1)}, 4, a, H));
}

TEST_CASE("classical r-matrix") {
    Matrix<Q> r = classical_r_formula();
    Matrix<Q> P = permutation_2x2();
    CHECK(P * P == Matrix<Q>::identity(4));
    CHECK(P * r * P == r);
    CHECK(r(1, 1) == 1);
    CHECK(r(2, 2) == 1);
    CHECK(r(1, 2) == -1);
    CHECK(r(2, 1) == -1);
}

TEST_CASE("spin states and sectors") {
    SpinState s{3, 0b101};
    CHECK(s.weight() == 2);
    CHECK(s.bit(1) == 1);
    CHECK(s.bit(2) == 0);
    CHECK(weight_sector(4, 2).size() == 6);
}

TEST_CASE("Mukai flop on point classes") {
    for (int n = 1; n <= 4; ++n)
        for (int i = 1; i <= n; ++i) CHECK(flop_image(n, stab_point_class(n, i)) == flop_expected(n, i));
    // single class: sigma_U goes to sigma_{U perp} - (-1)^{dim U} sigma_{W dual}
    ClassExpansion u1{{"U1", 1}};
    CHECK(flop_image(2, u1) == ClassExpansion{{"P1", 1}, {"P3", -1}});
    CHECK_THROWS(stab_point_class(3, 4));
}
