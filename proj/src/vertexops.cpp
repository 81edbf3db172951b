#include "fockalg/vertexops.hpp"

namespace fockalg {

ModeOp<Q> charge(const Params& p, int rank, const Field& field, int n, const Q& ins, int cap,
                 const std::vector<Q>* zeros, Q* scalar_part) {
    Q coef = ins;
    for (int k = 1; k < n; ++k) coef /= p.tau1();
    std::vector<FieldSlot> slots(n, FieldSlot{field, Deriv::none});
    return normal_product<Q>(rank, p.tau1(), slots, 0, cap, coef, zeros, scalar_part);
}

ChamberOrder standard_chamber(int r) {
    ChamberOrder c(r);
    for (int i = 0; i < r; ++i) c[i] = i;
    return c;
}

ChamberOrder reversed_chamber(int r) {
    ChamberOrder c(r);
    for (int i = 0; i < r; ++i) c[i] = r - 1 - i;
    return c;
}

namespace {

// rho(i, j) for i != j: 1 when a_i > a_j in the chamber
bool precedes(const ChamberOrder& ch, int i, int j) {
    for (int f : ch) {
        if (f == i) return true;
        if (f == j) return false;
    }
    throw std::invalid_argument("chamber order misses a factor");
}

void check_chamber(const ChamberOrder& ch, int r) {
    std::vector<int> seen(r, 0);
    if (static_cast<int>(ch.size()) != r) throw std::invalid_argument("chamber order has wrong length");
    for (int f : ch) {
        if (f < 0 || f >= r || seen[f]++) throw std::invalid_argument("chamber order is not a permutation");
    }
}

GradedOperator<Q> G(const ModeOp<Q>& op) { return GradedOperator<Q>::from(op); }

}  // namespace

GradedOperator<Q> phi_n(const Params& p, int rank, const Field& field, int n) {
    if (n != 2 && n != 3) throw std::invalid_argument("phi_n: n must be 2 or 3");
    Q fact = n == 2 ? Q(2) : Q(6);
    return G(charge(p, rank, field, n, Q(1) / fact));
}

GradedOperator<Q> omega(const Params& p, int rank, int i, int j) {
    ModeOp<Q> op;
    op.rank = rank;
    op.tau1 = p.tau1();
    for (int n = 1; n <= DEGREE_CAP; ++n) op.add(Q(-n) * p.pt(), {Mode{i, -n}, Mode{j, n}});
    return G(op);
}

GradedOperator<Q> lehn_operator(const Params& p, const Q& a) {
    Q h = p.hbar();
    return phi_n(p, 1, single_factor(0), 3).scaled(Q(-1)) +
           phi_n(p, 1, single_factor(0), 2).scaled(a - h / 2) + omega(p, 1, 0, 0).scaled(h / 2);
}

GradedOperator<Q> q_classical(const Params& p, const ChamberOrder& chamber) {
    int r = p.rank();
    check_chamber(chamber, r);
    Q h = p.hbar();
    GradedOperator<Q> op = GradedOperator<Q>::zero(r);
    for (int i = 0; i < r; ++i) {
        op = op + phi_n(p, r, single_factor(i), 3).scaled(Q(-1));
        op = op + phi_n(p, r, single_factor(i), 2).scaled(p.a[i] - h / 2);
        op = op + omega(p, r, i, i).scaled(h / 2);
        for (int j = 0; j < r; ++j)
            if (j != i && precedes(chamber, i, j)) op = op + omega(p, r, j, i).scaled(h);
    }
    return op;
}

GradedOperator<Q> QuantumParts::total() const { return cubic + quadratic + purely_quantum + correction; }

QuantumParts q_quantum_parts(const Params& p, const Q& q, const ChamberOrder& chamber) {
    int r = p.rank();
    check_chamber(chamber, r);
    Q pt = p.pt(), s = p.t1 + p.t2;
    ModeOp<Q> cubic, quad, pq, corr;
    for (ModeOp<Q>* m : {&cubic, &quad, &pq, &corr}) {
        m->rank = r;
        m->tau1 = p.tau1();
    }
    for (int i = 0; i < r; ++i)
        for (int n = 1; n < DEGREE_CAP; ++n)
            for (int m = 1; n + m <= DEGREE_CAP; ++m) {
                cubic.add(Q(-1, 2) * p.t1 * p.t2 * pt, {Mode{i, -n}, Mode{i, -m}, Mode{i, n + m}});
                cubic.add(Q(-1, 2) * pt * pt, {Mode{i, -n - m}, Mode{i, n}, Mode{i, m}});
            }
    for (int i = 0; i < r; ++i)
        for (int n = 1; n <= DEGREE_CAP; ++n) {
            quad.add(-(p.a[i] + s * frac(1 - n, 2)) * pt, {Mode{i, -n}, Mode{i, n}});
            for (int j = 0; j < r; ++j)
                if (j != i && precedes(chamber, i, j)) quad.add(s * n * pt, {Mode{j, -n}, Mode{i, n}});
        }
    Q qn = 1;
    for (int n = 1; n <= DEGREE_CAP; ++n) {
        qn *= q;
        Q w = s * n * qn / (1 - qn) * pt;
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) pq.add(w, {Mode{i, -n}, Mode{j, n}});
    }
    if (r == 1 && !is_zero(q))
        for (int n = 1; n <= DEGREE_CAP; ++n) corr.add(-s * q / (1 - q) * pt, {Mode{0, -n}, Mode{0, n}});
    return QuantumParts{G(cubic), G(quad), G(pq), G(corr)};
}

GradedOperator<Q> q_quantum(const Params& p, const Q& q, const ChamberOrder& chamber) {
    Q pw = 1;
    for (int n = 1; n <= DEGREE_CAP; ++n) {
        pw *= q;
        if (pw == 1) throw std::domain_error("q_quantum: q is a root of unity of small order");
    }
    return q_quantum_parts(p, q, chamber).total();
}

namespace {

GradedOperator<Q> q_hat_common(const Params& p, const ChamberOrder& chamber, bool with_zero) {
    int r = p.rank();
    check_chamber(chamber, r);
    Q h = p.hbar();
    GradedOperator<Q> op = GradedOperator<Q>::zero(r);
    Q scalar = 0;
    std::vector<Q> zeros(r);
    for (int i = 0; i < r; ++i) zeros[i] = zero_mode(p, i, Q(1));
    for (int i = 0; i < r; ++i) {
        Q sc = 0;
        auto cub = charge(p, r, single_factor(i), 3, Q(-1, 6), DEGREE_CAP, with_zero ? &zeros : nullptr, &sc);
        op = op + G(cub);
        scalar += sc;
        if (with_zero) scalar += Q(1, 24) * zero_mode(p, i, h * h + 2 * p.e());
    }
    for (size_t x = 0; x < chamber.size(); ++x)
        for (size_t y = x + 1; y < chamber.size(); ++y) {
            int i = chamber[x], j = chamber[y];
            std::vector<FieldSlot> slots{{single_factor(i), Deriv::none}, {single_factor(j), Deriv::d}};
            op = op + G(normal_product<Q>(r, p.tau1(), slots, 0, DEGREE_CAP, h / 2 / p.tau1()));
        }
    std::vector<FieldSlot> bb{{total_field(r), Deriv::none}, {total_field(r), Deriv::abs_d}};
    op = op + G(normal_product<Q>(r, p.tau1(), bb, 0, DEGREE_CAP, h / 4 / p.tau1()));
    if (!is_zero(scalar)) op = op + GradedOperator<Q>::scalar(r, scalar);
    return op;
}

}  // namespace

GradedOperator<Q> q_hat_cl(const Params& p, const ChamberOrder& chamber) { return q_hat_common(p, chamber, true); }

GradedOperator<Q> q_hat_cl_zero_mode_free(const Params& p, const ChamberOrder& chamber) {
    return q_hat_common(p, chamber, false);
}

Matrix<Q> spectrum_matrix(const Params& p, const Q& q, int n) {
    Q qn = 1;
    for (int k = 0; k < n; ++k) qn *= q;
    if (qn == 1) throw std::domain_error("spectrum_matrix: q^n = 1");
    int r = p.rank();
    Matrix<Q> A(r, r);
    Q quantum = Q(n * n) * qn / (1 - qn);
    for (int i = 0; i < r; ++i) {
        A(i, i) += -n * (p.a[i] + frac(1 - n, 2));
        for (int j = 0; j < r; ++j) {
            if (i < j) A(j, i) += n * n;
            A(j, i) += quantum;
        }
    }
    return A;
}

GradedOperator<Q> q_zero_derivation(const Params& p, const Q& q) {
    int r = p.rank();
    std::vector<Matrix<Q>> A(2 * DEGREE_CAP + 1);
    for (int n = 1; n <= 2 * DEGREE_CAP; ++n) A[n] = spectrum_matrix(p, q, n);
    GradedOperator<Q> g;
    g.rank_in = g.rank_out = r;
    g.act = [A, r](const Key& key, const Q& c, FockVector<Q>& out) {
        for (int i = 0; i < r; ++i)
            for (int n = 1; n <= MAX_MODE; ++n) {
                int m = key.get(i, n);
                if (m == 0) continue;
                if (n >= static_cast<int>(A.size())) throw std::out_of_range("q_zero_derivation: degree too high");
                for (int j = 0; j < r; ++j) {
                    const Q& aji = A[n](j, i);
                    if (is_zero(aji)) continue;
                    Key k = key;
                    --k.at(i, n);
                    ++k.at(j, n);
                    out.add(k, c * m * aji);
                }
            }
    };
    return g;
}

}  // namespace fockalg
