#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fockalg/symfunc.hpp"
#include "fockalg/vertexops.hpp"

using namespace fockalg;

namespace {

const Q T1(3, 7), T2(-5, 11);

SymFunc<Q> single(SymBasis b, const Partition& l, const Q& c = Q(1)) {
    SymFunc<Q> f{b, {}};
    f.add(l, c);
    return f;
}

}  // namespace

TEST_CASE("power sums in the monomial basis") {
    SymFunc<Q> p11 = change_basis(single(SymBasis::p, {1, 1}), SymBasis::m);
    CHECK(p11 == [] {
        SymFunc<Q> f{SymBasis::m, {}};
        f.add({2}, Q(1));
        f.add({1, 1}, Q(2));
        return f;
    }());
    for (int n = 1; n <= 6; ++n) CHECK(p_to_m(n) * m_to_p(n) == Matrix<Q>::identity(partition_count(n)));
}

TEST_CASE("Kostka numbers") {
    CHECK(kostka({2}, {1, 1}) == 1);
    CHECK(kostka({2, 1}, {1, 1, 1}) == 2);
    CHECK(kostka({3, 2, 1}, {1, 1, 1, 1, 1, 1}) == 16);
    CHECK(kostka({1, 1}, {2}) == 0);
    for (int n = 1; n <= 6; ++n)
        for (const auto& l : partitions_of(n)) CHECK(kostka(l, Partition(n, 1)) == standard_tableaux_count(l));
}

TEST_CASE("Schur functions") {
    SymFunc<Q> s2 = schur_polynomial<Q>({2});
    CHECK(s2.coeff({2}) == 1);
    CHECK(s2.coeff({1, 1}) == 1);
    CHECK(schur_polynomial<Q>({1, 1}).coeff({2}) == 0);
    // s_(2) = (p1^2 + p2)/2
    SymFunc<Q> p = change_basis(s2, SymBasis::p);
    CHECK(p.coeff({1, 1}) == Q(1, 2));
    CHECK(p.coeff({2}) == Q(1, 2));
}

TEST_CASE("Jack inner product") {
    CHECK(jack_inner_product(single(SymBasis::p, {1}), single(SymBasis::p, {1}), Q(2)) == 2);
    Q a(5, 3);
    CHECK(jack_inner_product(single(SymBasis::p, {2}), single(SymBasis::p, {2}), a) == 2 * a);
    CHECK(jack_inner_product(single(SymBasis::p, {1, 1}), single(SymBasis::p, {2}), a) == 0);
    CHECK(jack_inner_product(single(SymBasis::p, {2, 1}), single(SymBasis::p, {2, 1}), a) == 2 * a * a);
}

TEST_CASE("Jack polynomials") {
    SymFunc<Q> J0 = jack_polynomial<Q>({}, T1, T2);
    CHECK(J0.coeffs.size() == 1);
    CHECK(J0.coeff({}) == 1);
    CHECK(jack_polynomial<Q>({1}, T1, T2) == single(SymBasis::m, {1}, T2));
    // P_(2) = m2 + 2/(1 + alpha) m11 with alpha = -t1/t2
    SymFunc<Q> J2 = jack_polynomial<Q>({2}, T1, T2);
    CHECK(J2.coeff({2}) == T2 * (T2 - T1));
    CHECK(J2.coeff({1, 1}) == 2 * T2 * T2);
    CHECK(jack_polynomial<Q>({1, 1}, T1, T2) == single(SymBasis::m, {1, 1}, 2 * T2 * T2));
    // at t2 = -t1 a multiple of Schur
    for (const auto& l : partitions_of(4)) {
        SymFunc<Q> J = jack_polynomial<Q>(l, T1, -T1);
        Q lead = jack_leading<Q>(l, T1, -T1);
        for (const auto& mu : partitions_of(4)) CHECK(J.coeff(mu) == lead * schur_polynomial<Q>(l).coeff(mu));
    }
}

TEST_CASE("Jack polynomials over rational functions") {
    RatFunc t1(T1), t2 = RatFunc(-T1) + RatFunc::var();
    SymFunc<RatFunc> J = jack_polynomial<RatFunc>({2}, t1, t2);
    RatFunc want = RatFunc(2) * t2 * t2;
    CHECK(J.coeff({1, 1}) == want);
}

TEST_CASE("Fock dictionary") {
    SymFunc<Q> one = fock_to_sym(FockVector<Q>::vacuum(1), T1);
    CHECK(one.coeff({}) == 1);
    SymFunc<Q> p1 = fock_to_sym(FockVector<Q>::basis({{1}}), T1);
    CHECK(p1 == single(SymBasis::p, {1}, 1 / T1));
    for (const auto& l : partitions_of(4)) {
        FockVector<Q> v = FockVector<Q>::basis({l});
        CHECK(sym_to_fock(fock_to_sym(v, T1), T1) == v);
    }
}

TEST_CASE("Lehn eigenvectors are Jack polynomials at degree two") {
    Params p;
    p.t1 = T1;
    p.t2 = T2;
    p.a = {Q(4, 9)};
    p.q = Q(1, 3);
    auto L = lehn_operator(p, p.a[0]);
    for (const auto& l : partitions_of(2)) {
        FockVector<Q> v = sym_to_fock(jack_polynomial<Q>(l, T1, T2), T1);
        CHECK(L(v) == v.scaled(fixed_point_weight(l, p.a[0], T1, T2)));
    }
    CHECK(fixed_point_weight({2}, p.a[0], T1, T2) == 2 * p.a[0] - T1);
    CHECK(fixed_point_weight({1, 1}, p.a[0], T1, T2) == 2 * p.a[0] - T2);
}
