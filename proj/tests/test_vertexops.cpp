#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fockalg/vertexops.hpp"

using namespace fockalg;

namespace {

Params fixed_params(int r) {
    Params p;
    p.t1 = Q(3, 7);
    p.t2 = Q(-5, 11);
    std::vector<Q> as{Q(1, 2), Q(-2, 5), Q(7, 3)};
    for (int i = 0; i < r; ++i) p.a.push_back(as[i]);
    p.q = Q(2, 9);
    return p;
}

}  // namespace

TEST_CASE("degree operator") {
    Params p = fixed_params(1);
    auto phi2 = phi_n(p, 1, single_factor(0), 2);
    CHECK(phi2(FockVector<Q>::vacuum(1)).is_zero());
    for (int n = 1; n <= 5; ++n) CHECK(phi2.matrix(n) == Matrix<Q>::identity(partition_count(n)).scaled(Q(n)));
    auto phi3 = phi_n(p, 1, single_factor(0), 3);
    CHECK(phi3(FockVector<Q>::basis({{1}})).is_zero());
    CHECK_THROWS(phi_n(p, 1, single_factor(0), 4));
}

TEST_CASE("Omega operators") {
    Params p = fixed_params(2);
    Params p1 = fixed_params(1);
    auto p1v = FockVector<Q>::basis({{1}});
    CHECK(omega(p1, 1, 0, 0)(p1v) == p1v);
    CHECK(omega(p, 2, 0, 1)(FockVector<Q>::vacuum(2)).is_zero());
    CHECK(omega(p, 2, 1, 0)(FockVector<Q>::basis({{1}, {}})) == FockVector<Q>::basis({{}, {1}}));
}

TEST_CASE("Lehn operator") {
    Params p = fixed_params(1);
    Q a = p.a[0];
    auto L = lehn_operator(p, a);
    CHECK(L(FockVector<Q>::vacuum(1)).is_zero());
    CHECK(L(FockVector<Q>::basis({{1}})) == FockVector<Q>::basis({{1}}).scaled(a));
    // weights 2a - t1 at (2) and 2a - t2 at (1,1)
    Poly x = Poly::var();
    CHECK(charpoly(L.matrix(2)) == (x - Poly(2 * a - p.t1)) * (x - Poly(2 * a - p.t2)));
}

TEST_CASE("classical multiplication") {
    Params p1 = fixed_params(1);
    for (int n = 0; n <= 4; ++n)
        CHECK(q_classical(p1, standard_chamber(1)).matrix(n) == lehn_operator(p1, p1.a[0]).matrix(n));
    Params p2 = fixed_params(2);
    CHECK(q_classical(p2, standard_chamber(2)).matrix(0).is_zero());
    CHECK_THROWS(q_classical(p2, ChamberOrder{0, 0}));
}

TEST_CASE("quantum multiplication") {
    for (int r = 1; r <= 2; ++r) {
        Params p = fixed_params(r);
        for (int n = 0; n <= 3; ++n)
            CHECK(q_quantum(p, Q(0), standard_chamber(r)).matrix(n) == q_classical(p, standard_chamber(r)).matrix(n));
    }
    Params p = fixed_params(1);
    auto parts = q_quantum_parts(p, p.q, standard_chamber(1));
    auto pc = parts.purely_quantum + parts.correction;
    Q fact = 1;
    for (int n = 1; n <= 6; ++n) {
        fact *= n;
        CHECK(pc(FockVector<Q>::basis({Partition(n, 1)}).scaled(1 / fact)).is_zero());
    }
    // degree one, rank two: the quadratic diagonal a_i plus the A_1 spectrum at a/s
    Params p2 = fixed_params(2);
    auto parts2 = q_quantum_parts(p2, p2.q, standard_chamber(2));
    Matrix<Q> m = (parts2.total() - parts2.correction).matrix(1);
    Q s = p2.t1 + p2.t2, q = p2.q;
    CHECK(m(0, 0) + m(1, 1) == p2.a[0] + p2.a[1] - 2 * s * q / (1 - q));
}

TEST_CASE("ch_1 operator on the vacuum") {
    Params p = fixed_params(1);
    Q a = p.a[0], h = p.hbar(), e = p.e();
    auto v = q_hat_cl(p, standard_chamber(1))(FockVector<Q>::vacuum(1));
    Q want = p.tau(a * a * a) / 6 - p.tau((h * h + 2 * e) * a) / 24;
    CHECK(v == FockVector<Q>::vacuum(1).scaled(want));
}

TEST_CASE("spectrum matrices") {
    Params p = fixed_params(1);
    Matrix<Q> A = spectrum_matrix(p, p.q, 1);
    CHECK(A(0, 0) == -p.a[0] + p.q / (1 - p.q));
    Params p2 = fixed_params(2);
    Matrix<Q> Z = spectrum_matrix(p2, Q(0), 1);
    CHECK(Z(0, 0) == -p2.a[0]);
    CHECK(Z(1, 1) == -p2.a[1]);
    CHECK(Z(0, 1) == 0);
    // explicit 2 x 2 at n = 2
    Q q = p2.q, w = 4 * q * q / (1 - q * q);
    Q d0 = -2 * (p2.a[0] - Q(1, 2)) + w, d1 = -2 * (p2.a[1] - Q(1, 2)) + w;
    Q lower = 4 + w, upper = w;
    Poly x = Poly::var();
    Poly want = x * x - Poly(d0 + d1) * x + Poly(d0 * d1 - lower * upper);
    CHECK(charpoly(spectrum_matrix(p2, q, 2)) == want);
    CHECK_THROWS(spectrum_matrix(p2, Q(-1), 2));
}

TEST_CASE("zero-mode derivation") {
    Params p = fixed_params(2);
    auto D = q_zero_derivation(p, p.q);
    CHECK(D(FockVector<Q>::vacuum(2)).is_zero());
    Matrix<Q> A3 = spectrum_matrix(p, p.q, 3);
    auto img = D(FockVector<Q>::basis({{3}, {}}));
    CHECK(img.coeff(key_of({{3}, {}})) == A3(0, 0));
    CHECK(img.coeff(key_of({{}, {3}})) == A3(1, 0));

    // q = 0: triangular A_n, eigenvalues are sums of diagonal entries over part multisets
    auto D0 = q_zero_derivation(p, Q(0));
    std::vector<Q> eig;
    for (int k = 0; k <= 3; ++k)
        for (const auto& l0 : partitions_of(k))
            for (const auto& l1 : partitions_of(3 - k)) {
                Q acc = 0;
                for (int n : l0) acc -= n * (p.a[0] + Q(1 - n) / 2);
                for (int n : l1) acc -= n * (p.a[1] + Q(1 - n) / 2);
                eig.push_back(acc);
            }
    Poly want(Q(1));
    for (const auto& e : eig) want *= Poly::var() - Poly(e);
    CHECK(charpoly(D0.matrix(3)) == want);
}
