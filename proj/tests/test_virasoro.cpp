#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fockalg/virasoro.hpp"

using namespace fockalg;

namespace {

BosonSpec<Q> spec_with(const Q& eta, const Q& kappa) { return BosonSpec<Q>{Q(-77, 15), eta, kappa}; }

FockVector<Q> vac() { return FockVector<Q>::vacuum(1); }

}  // namespace

TEST_CASE("lowest weight vector") {
    BosonSpec<Q> s = spec_with(Q(2, 3), Q(-1, 4));
    for (int n = 1; n <= 4; ++n) CHECK(virasoro_mode<Q>(n, Q(1), s)(vac()).is_zero());
    BosonSpec<Q> k = spec_with(Q(5, 6), Q(5, 6));
    CHECK(virasoro_mode<Q>(0, Q(1), k)(vac()).is_zero());
}

TEST_CASE("central term on the vacuum") {
    Q kappa(3, 8);
    BosonSpec<Q> s = spec_with(kappa, kappa);  // L_0 kills the vacuum
    auto L2 = virasoro_mode<Q>(2, Q(1), s), Lm2 = virasoro_mode<Q>(-2, Q(1), s);
    FockVector<Q> c = L2(Lm2(vac())) - Lm2(L2(vac()));
    Q e = 1 / s.tau1;
    CHECK(c == vac().scaled(s.tau1 * (e - 12 * kappa * kappa) / 2));
    CHECK(virasoro_central<Q>(2, Q(1), Q(1), s) == s.tau1 * (e - 12 * kappa * kappa) / 2);
    CHECK(virasoro_central<Q>(1, Q(1), Q(1), s) == 0);
}

TEST_CASE("grading by L_0") {
    BosonSpec<Q> s = spec_with(Q(-2, 7), Q(1, 3));
    Q h0 = s.tau1 * (s.eta * s.eta - s.kappa * s.kappa) / 2;
    auto L0 = virasoro_mode<Q>(0, Q(1), s);
    CHECK(L0(vac()) == vac().scaled(h0));
    auto Lm1 = virasoro_mode<Q>(-1, Q(1), s);
    for (int d = 0; d <= 4; ++d) {
        Matrix<Q> c = L0.matrix(d + 1) * Lm1.matrix(d) - Lm1.matrix(d) * L0.matrix(d);
        CHECK(c == Lm1.matrix(d));
    }
}

TEST_CASE("rational-function coefficients") {
    Q t1(3, 7), t2(-5, 11);
    Params p;
    p.t1 = t1;
    p.t2 = t2;
    p.a = {Q(0), Q(0)};
    BosonSpec<RatFunc> b = minus_boson<RatFunc>(p, RatFunc::var());
    CHECK(b.tau1 == pm_tau1(p));
    CHECK(b.tau1 == 2 * p.tau1());
    auto L1 = virasoro_mode<RatFunc>(1, Q(1), b, 2, minus_field(), p.tau1());
    CHECK(L1(FockVector<RatFunc>::vacuum(2)).is_zero());
    CHECK_THROWS(virasoro_mode<RatFunc>(1, Q(1), b, 2, minus_field(), 3 * p.tau1()));
}

TEST_CASE("screening operator on the vacuum") {
    for (ScreeningMu mu : {ScreeningMu::inv_t1, ScreeningMu::inv_t2}) {
        for (int n = -3; n < 0; ++n) {
            ScreeningSetup s = screening_setup(5, mu, n);
            CHECK(screening_mode(s, 4)(FockVector<Q>::vacuum(2)).is_zero());
        }
        ScreeningSetup s0 = screening_setup(5, mu, 0);
        Q tau1 = s0.source.tau1();
        CHECK(screening_mode(s0, 4)(FockVector<Q>::vacuum(2)) == FockVector<Q>::vacuum(2).scaled(tau1));

        // n = 2 in the pair basis: tau1 (c^2/2 (p1 x 1 - 1 x p1)^2 + c/2 (p2 x 1 - 1 x p2))
        ScreeningSetup s2 = screening_setup(5, mu, 2);
        Q c = s2.c, t = s2.source.tau1();
        FockVector<Q> img = screening_mode(s2, 4)(FockVector<Q>::vacuum(2));
        const BasisIndex& b = basis_index(2, 2);
        Matrix<Q> M = pm_change_of_basis(2, PmDirection::from_pm);
        std::vector<Q> pair(b.basis.size(), Q(0));
        for (const auto& [k, x] : img.terms)
            for (size_t i = 0; i < pair.size(); ++i) pair[i] += M(static_cast<int>(i), b.index.at(k)) * x;
        auto at = [&](const MultiPartition& mp) { return pair[b.index.at(key_of(mp))]; };
        CHECK(at({{1, 1}, {}}) == t * c * c / 2);
        CHECK(at({{1}, {1}}) == -t * c * c);
        CHECK(at({{}, {1, 1}}) == t * c * c / 2);
        CHECK(at({{2}, {}}) == t * c / 2);
        CHECK(at({{}, {2}}) == -t * c / 2);
    }
}

TEST_CASE("screening setup obeys the integrality constraint") {
    ScreeningSetup s = screening_setup(11, ScreeningMu::inv_t1, 3);
    const Params& a = s.source;
    CHECK(a.a[0] - a.a[1] == 3 * a.t1 - a.t2);
    CHECK(s.target.a[0] == a.a[1] + 3 * a.t1);
    CHECK(s.target.a[1] == a.a[1] - a.t2);
    CHECK(s.c == -a.t1 * a.t2 / a.t1);
    CHECK_THROWS(screening_setup(11, ScreeningMu::inv_t1, 40));
}
