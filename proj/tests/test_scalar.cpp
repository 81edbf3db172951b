#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "fockalg/matrix.hpp"
#include "fockalg/scalar.hpp"

using namespace fockalg;

TEST_CASE("rationals stay canonical") {
    CHECK(frac(4, 6) == Q(2, 3));
    CHECK(frac(0, 5) == Q(0));
    CHECK(to_string(frac(-6, 4)) == "-3/2");
    CHECK(parse_rational("10/-4") == Q(-5, 2));
    CHECK(parse_rational("7") == Q(7));
    CHECK_THROWS(parse_rational("1/0"));
    CHECK_THROWS(parse_rational("x"));
}

TEST_CASE("polynomial arithmetic") {
    Poly u = Poly::var();
    Poly a = (u - Poly(1)) * (u + Poly(2));
    Poly b = (u - Poly(1)) * (u - Poly(3));
    CHECK(gcd(a, b) == u - Poly(1));
    CHECK(a / (u + Poly(2)) == u - Poly(1));
    CHECK_THROWS(a / (u + Poly(5)));
    CHECK(a(Q(1)) == 0);
    CHECK(a.derivative() == Poly(2) * u + Poly(1));
    CHECK(a.compose(u + Poly(1)) == u * (u + Poly(3)));
}

TEST_CASE("rational functions reduce and expand") {
    RatFunc u = RatFunc::var();
    RatFunc f = (u * u - RatFunc(1)) / (u - RatFunc(1));
    CHECK(f == u + RatFunc(1));
    CHECK(f.den() == Poly(1));
    // 1/(u-1) = u^-1 + u^-2 + ...
    auto e = expand_at_infinity(RatFunc(1) / (u - RatFunc(1)), 4);
    CHECK(e == std::vector<Q>{0, 1, 1, 1, 1});
    // (u+2)/(u-3) = 1 + 5/u + 15/u^2 + 45/u^3
    auto g = expand_at_infinity((u + RatFunc(2)) / (u - RatFunc(3)), 3);
    CHECK(g == std::vector<Q>{1, 5, 15, 45});
    CHECK(((u + RatFunc(2)) / (u - RatFunc(3)))(Q(4)) == 6);
}

TEST_CASE("rational reconstruction recovers a known function") {
    RatFunc u = RatFunc::var();
    RatFunc f = (u * u + RatFunc(Q(1, 3))) / ((u - RatFunc(Q(1, 2))) * (u + RatFunc(4)));
    std::vector<Q> xs, ys;
    for (int i = 1; i <= 7; ++i) {
        xs.push_back(Q(i));
        ys.push_back(f(Q(i)));
    }
    auto r = rational_reconstruct(xs, ys, 2, 2);
    REQUIRE(r);
    CHECK(*r == f);
}

TEST_CASE("sampled parameters") {
    Params a = sample_params(1, 1), b = sample_params(1, 1);
    CHECK(a.t1 == b.t1);
    CHECK(a.t2 == b.t2);
    CHECK(a.a == b.a);
    CHECK(a.q == b.q);
    Params two = sample_params(1, 2);
    CHECK(two.a[0] != two.a[1]);
    // exhaustive re-check of the lattice avoidance
    Params p = sample_params(7, 3);
    CHECK(!violated_invariant(p));
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            for (int m = -DEGREE_CAP; m <= DEGREE_CAP; ++m)
                for (int n = -DEGREE_CAP; n <= DEGREE_CAP; ++n) CHECK(p.a[i] - p.a[j] != m * p.t1 + n * p.t2);
    CHECK(p.tau(Q(1)) == Q(-1) / (p.t1 * p.t2));
    CHECK(p.tau(p.pt()) == -1);
}

TEST_CASE("invalid parameters are reported") {
    Params p = sample_params(3, 2);
    p.a[1] = p.a[0] + 2 * p.t1 - p.t2;
    CHECK(violated_invariant(p));
    p = sample_params(3, 1);
    p.q = -1;
    CHECK(violated_invariant(p));
    p.q = 0;
    CHECK(violated_invariant(p));
}

TEST_CASE("determinant matches the Leibniz expansion") {
    RationalSampler rs(42);
    Matrix<Q> A(4, 4);
    for (auto& x : A.a) x = rs.next();
    std::vector<int> perm(4);
    std::iota(perm.begin(), perm.end(), 0);
    Q leib = 0;
    do {
        int inv = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) inv += perm[i] > perm[j];
        Q t = inv % 2 ? -1 : 1;
        for (int i = 0; i < 4; ++i) t *= A(i, perm[i]);
        leib += t;
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(determinant(A) == leib);
    CHECK(charpoly(A)(Q(0)) == leib);  // det(x - A) at 0 for even size
    CHECK(inverse(A) * A == Matrix<Q>::identity(4));
}

TEST_CASE("characteristic polynomial annihilates its matrix") {
    RationalSampler rs(5);
    Matrix<Q> A(3, 3);
    for (auto& x : A.a) x = rs.next();
    Poly c = charpoly(A);
    Matrix<Q> acc(3, 3), pw = Matrix<Q>::identity(3);
    for (int k = 0; k <= c.degree(); ++k) {
        acc = acc + pw.scaled(c.coeff(k));
        pw = pw * A;
    }
    CHECK(acc.is_zero());
    Matrix<Q> D(2, 2);
    D(0, 0) = 1;
    D(1, 1) = 1;
    CHECK_FALSE(squarefree(charpoly(D)));
}

TEST_CASE("fraction-free solve agrees with field elimination") {
    Poly u = Poly::var();
    Matrix<Poly> A(2, 2), B(2, 1);
    A(0, 0) = u;
    A(0, 1) = Poly(1);
    A(1, 0) = Poly(2);
    A(1, 1) = u - Poly(1);
    B(0, 0) = Poly(1);
    B(1, 0) = u;
    Matrix<RatFunc> X = bareiss_solve(A, B);
    Matrix<RatFunc> Y = solve(convert<RatFunc>(A), convert<RatFunc>(B));
    CHECK(X == Y);
    CHECK(bareiss_determinant(A) == u * (u - Poly(1)) - Poly(2));
}

TEST_CASE("nullspace") {
    Matrix<Q> A(2, 3);
    A(0, 0) = 1;
    A(0, 1) = 2;
    A(1, 2) = 1;
    Matrix<Q> K = nullspace(A);
    REQUIRE(K.cols == 1);
    CHECK((A * K).is_zero());
}
