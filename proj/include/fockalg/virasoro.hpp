#pragma once

#include <algorithm>

#include "fockalg/fock.hpp"

namespace fockalg {

// Q expressions into the coefficient ring in one step.
template <class C>
C lift(const Q& x) {
    return C(x);
}

// A single boson b with [b_k, b_l] = k tau1 delta_{k+l}, zero mode b_0(1) = -tau1 eta,
// and background charge kappa.
template <class C>
struct BosonSpec {
    Q tau1;
    C eta;
    C kappa;
};

// L_n(gamma) = (gamma / 2 tau1) sum :b_k b_{n-k}: - n kappa gamma b_n - (1/2) tau1 gamma kappa^2 delta_{n,0}.
// The boson is realized as b = sum c_f alpha^{(f)} on a rank-`rank` Fock space whose modes pair with
// engine_tau1; spec.tau1 must equal (sum c_f^2) engine_tau1.
template <class C>
GradedOperator<C> virasoro_mode(int n, const Q& gamma, const BosonSpec<C>& spec, int rank, const Field& field,
                                const Q& engine_tau1, int cap = 2 * DEGREE_CAP) {
    if (n < -DEGREE_CAP || n > DEGREE_CAP) throw std::invalid_argument("virasoro_mode: |n| beyond DEGREE_CAP");
    Q norm = 0;
    for (const auto& fc : field) norm += fc.second * fc.second;
    if (norm * engine_tau1 != spec.tau1) throw std::invalid_argument("virasoro_mode: pairing mismatch");
    ModeOp<C> op;
    op.rank = rank;
    op.tau1 = engine_tau1;
    op.shift = -n;
    Q half = gamma / (2 * spec.tau1);
    for (int k = -cap; k <= cap; ++k) {
        int l = n - k;
        if (k == 0 || l == 0 || l < -cap || l > cap) continue;
        for (const auto& [f, cf] : field)
            for (const auto& [g, cg] : field) {
                std::vector<Mode> m{Mode{f, k}, Mode{g, l}};
                std::sort(m.begin(), m.end());
                op.add(lift<C>(half * cf * cg), m);
            }
    }
    C z = lift<C>(-spec.tau1) * spec.eta;
    if (n != 0) {
        C lin = lift<C>(gamma / spec.tau1) * z - lift<C>(Q(n) * gamma) * spec.kappa;
        for (const auto& [f, cf] : field) op.add(lin * lift<C>(cf), {Mode{f, n}});
    }
    GradedOperator<C> g = GradedOperator<C>::from(op);
    if (op.terms.empty()) g = GradedOperator<C>::zero(rank, -n);
    if (n == 0) {
        C constant = lift<C>(half) * z * z - lift<C>(spec.tau1 * gamma / 2) * spec.kappa * spec.kappa;
        g = g + GradedOperator<C>::scalar(rank, constant);
    }
    return g;
}

template <class C>
GradedOperator<C> virasoro_mode(int n, const Q& gamma, const BosonSpec<C>& spec) {
    return virasoro_mode<C>(n, gamma, spec, 1, single_factor(0), spec.tau1);
}

// Central term of [L_n(g1), L_{-n}(g2)]: tau1 g1 g2 (e - 12 kappa^2) (n^3 - n) / 12 with e = 1 / tau1.
template <class C>
C virasoro_central(int n, const Q& g1, const Q& g2, const BosonSpec<C>& spec) {
    Q e = Q(1) / spec.tau1;
    return lift<C>(spec.tau1 * g1 * g2 * frac(n * n * n - n, 12)) * (lift<C>(e) - lift<C>(Q(12)) * spec.kappa * spec.kappa);
}

// The pm picture of F (x) F: factor 0 carries alpha^+ modes, factor 1 carries alpha^- modes,
// both pairing with 2 tau1.
Q pm_tau1(const Params& p);
// Minus boson with eta = u/2 and kappa = hbar/2 for the given u.
template <class C>
BosonSpec<C> minus_boson(const Params& p, const C& u) {
    return BosonSpec<C>{pm_tau1(p), u * lift<C>(Q(1, 2)), lift<C>(p.hbar() / 2)};
}

enum class ScreeningMu { inv_t1, inv_t2 };

struct ScreeningSetup {
    Params source;  // F(a_1) (x) F(a_2) with the integrality constraint
    Params target;
    Q mu;
    Q c;  // exponent coefficient mu * e
    int n;
};

// Params satisfying the integrality constraint: a_1 = a_2 + n t_1 - t_2 (mu = 1/t_1) or
// a_1 = a_2 + n t_2 - t_1 (mu = 1/t_2). These bypass the generic invariants.
ScreeningSetup screening_setup(std::uint64_t seed, ScreeningMu mu, int n);

// z-mode of the screening current, acting on the pm picture (rank 2, factor 1 only),
// shifting degree by n; input degrees up to max_in_degree are handled exactly.
GradedOperator<Q> screening_mode(const ScreeningSetup& s, int max_in_degree);
// The same operator checked against Params: throws if the integrality constraint fails.
GradedOperator<Q> screening_mode(const Params& source, ScreeningMu mu, int n, int max_in_degree);

}  // namespace fockalg
