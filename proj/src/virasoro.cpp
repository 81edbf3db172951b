#include "fockalg/virasoro.hpp"

namespace fockalg {

Q pm_tau1(const Params& p) { return 2 * p.tau1(); }

namespace {

Q power(const Q& x, int k) {
    Q r = 1;
    for (int i = 0; i < k; ++i) r *= x;
    return r;
}

}  // namespace

ScreeningSetup screening_setup(std::uint64_t seed, ScreeningMu mu, int n) {
    if (n < -DEGREE_CAP || n > DEGREE_CAP) throw std::invalid_argument("screening_setup: n out of range");
    RationalSampler rs(seed);
    Params src;
    for (;;) {
        src.t1 = rs.next_nonzero();
        src.t2 = rs.next_nonzero();
        if (src.t1 + src.t2 != 0) break;
    }
    src.seed = seed;
    src.q = 0;
    Q a2 = rs.next();
    Q shift = mu == ScreeningMu::inv_t1 ? n * src.t1 - src.t2 : n * src.t2 - src.t1;
    src.a = {a2 + shift, a2};
    ScreeningSetup s;
    s.source = src;
    s.target = src;
    if (mu == ScreeningMu::inv_t1) {
        s.target.a = {a2 + n * src.t1, a2 - src.t2};
        s.mu = Q(1) / src.t1;
    } else {
        s.target.a = {a2 + n * src.t2, a2 - src.t1};
        s.mu = Q(1) / src.t2;
    }
    s.c = s.mu * src.e();
    s.n = n;
    return s;
}

GradedOperator<Q> screening_mode(const ScreeningSetup& s, int max_in_degree) {
    const Params& p = s.source;
    if (p.rank() != 2) throw std::invalid_argument("screening_mode: needs two factors");
    ModeOp<Q> op;
    op.rank = 2;
    op.tau1 = pm_tau1(p);
    op.shift = s.n;
    // eta = 1 in the prefactor tau(eta)
    Q pref = p.tau1();
    for (int i = 0; i <= max_in_degree; ++i) {
        int j = i + s.n;
        if (j < 0) continue;
        if (j > MAX_MODE) throw std::out_of_range("screening_mode: degree beyond MAX_MODE");
        for (const auto& lam : partitions_of(j))
            for (const auto& nu : partitions_of(i)) {
                int ll = static_cast<int>(lam.size()), ln = static_cast<int>(nu.size());
                Q coef = pref * power(s.c, ll) * power(-s.c, ln) / Q(z_lambda(lam) * z_lambda(nu));
                std::vector<Mode> modes;
                for (int part : lam) modes.push_back(Mode{1, -part});
                for (int part : nu) modes.push_back(Mode{1, part});
                std::sort(modes.begin(), modes.end());
                op.add(coef, modes);
            }
    }
    return GradedOperator<Q>::from(op);
}

GradedOperator<Q> screening_mode(const Params& source, ScreeningMu mu, int n, int max_in_degree) {
    if (source.rank() != 2) throw std::invalid_argument("screening_mode: needs two factors");
    Q shift = mu == ScreeningMu::inv_t1 ? n * source.t1 - source.t2 : n * source.t2 - source.t1;
    if (source.a[0] - source.a[1] != shift)
        throw std::invalid_argument("screening_mode: integrality constraint fails");
    ScreeningSetup s;
    s.source = source;
    s.target = source;
    Q a2 = source.a[1];
    s.target.a = mu == ScreeningMu::inv_t1 ? std::vector<Q>{a2 + n * source.t1, a2 - source.t2}
                                           : std::vector<Q>{a2 + n * source.t2, a2 - source.t1};
    s.mu = Q(1) / (mu == ScreeningMu::inv_t1 ? source.t1 : source.t2);
    s.c = s.mu * source.e();
    s.n = n;
    return screening_mode(s, max_in_degree);
}

}  // namespace fockalg
