#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <vector>

#include "fockalg/fock.hpp"

namespace fockalg {

enum class Deriv { none, d, abs_d };  // (d a)_k = -k a_k, (|d| a)_k = |k| a_k

struct FieldSlot {
    Field field;
    Deriv deriv = Deriv::none;
};

inline Q slot_weight(Deriv d, int k) {
    switch (d) {
        case Deriv::d: return Q(-k);
        case Deriv::abs_d: return Q(k < 0 ? -k : k);
        default: return Q(1);
    }
}

// coef * sum over k_1 + ... + k_n = total, |k_i| <= cap, of :prod slot_i(k_i):.
// Zero modes are included only when zero values (one per factor) are supplied; a term made
// only of zero modes is added to *scalar_part.
template <class C>
ModeOp<C> normal_product(int rank, const Q& tau1, const std::vector<FieldSlot>& slots, int total, int cap,
                         const C& coef, const std::vector<C>* zeros = nullptr, C* scalar_part = nullptr) {
    std::map<std::vector<Mode>, C> acc;
    int n = static_cast<int>(slots.size());
    std::vector<int> ks(n);
    auto emit = [&]() {
        Q w = 1;
        for (int j = 0; j < n; ++j) w *= slot_weight(slots[j].deriv, ks[j]);
        if (is_zero(w)) return;
        C scalar = coef * C(w);
        std::vector<int> live;
        for (int j = 0; j < n; ++j) {
            if (ks[j] != 0) {
                live.push_back(j);
                continue;
            }
            C z(0);
            for (const auto& [f, c] : slots[j].field) z += C(c) * (*zeros)[f];
            scalar = scalar * z;
        }
        if (fockalg::is_zero(scalar)) return;
        std::vector<size_t> choice(live.size(), 0);
        for (;;) {
            std::vector<Mode> modes;
            Q cf = 1;
            for (size_t t = 0; t < live.size(); ++t) {
                const auto& fc = slots[live[t]].field[choice[t]];
                modes.push_back(Mode{fc.first, ks[live[t]]});
                cf *= fc.second;
            }
            std::sort(modes.begin(), modes.end());
            auto it = acc.find(modes);
            C term = scalar * C(cf);
            if (it == acc.end())
                acc.emplace(std::move(modes), term);
            else
                it->second += term;
            size_t t = 0;
            while (t < live.size()) {
                if (++choice[t] < slots[live[t]].field.size()) break;
                choice[t] = 0;
                ++t;
            }
            if (t == live.size()) break;
        }
    };
    std::function<void(int, int)> rec = [&](int j, int sum) {
        if (j == n - 1) {
            int k = total - sum;
            if (k < -cap || k > cap) return;
            if (k == 0 && !zeros) return;
            ks[j] = k;
            emit();
            return;
        }
        for (int k = -cap; k <= cap; ++k) {
            if (k == 0 && !zeros) continue;
            ks[j] = k;
            rec(j + 1, sum + k);
        }
    };
    if (n > 0) rec(0, 0);
    ModeOp<C> op;
    op.rank = rank;
    op.tau1 = tau1;
    op.shift = -total;
    for (auto& [modes, c] : acc) {
        if (fockalg::is_zero(c)) continue;
        if (modes.empty()) {
            if (!scalar_part) throw std::logic_error("normal_product: unexpected scalar term");
            *scalar_part += c;
            continue;
        }
        op.add(c, modes);
    }
    return op;
}

// int :alpha^n:(ins) for the given field, zero modes excluded unless supplied.
ModeOp<Q> charge(const Params& p, int rank, const Field& field, int n, const Q& ins, int cap = DEGREE_CAP,
                 const std::vector<Q>* zeros = nullptr, Q* scalar_part = nullptr);

using ChamberOrder = std::vector<int>;  // factors listed from largest a to smallest
ChamberOrder standard_chamber(int r);
ChamberOrder reversed_chamber(int r);

GradedOperator<Q> phi_n(const Params& p, int rank, const Field& field, int n);
GradedOperator<Q> omega(const Params& p, int rank, int i, int j);
GradedOperator<Q> lehn_operator(const Params& p, const Q& a);
GradedOperator<Q> q_classical(const Params& p, const ChamberOrder& chamber);

struct QuantumParts {
    GradedOperator<Q> cubic, quadratic, purely_quantum, correction;
    GradedOperator<Q> total() const;
};
QuantumParts q_quantum_parts(const Params& p, const Q& q, const ChamberOrder& chamber);
GradedOperator<Q> q_quantum(const Params& p, const Q& q, const ChamberOrder& chamber);

// Scalar part and operator part of the ch_1 operator with zero modes.
GradedOperator<Q> q_hat_cl(const Params& p, const ChamberOrder& chamber);
GradedOperator<Q> q_hat_cl_zero_mode_free(const Params& p, const ChamberOrder& chamber);

Matrix<Q> spectrum_matrix(const Params& p, const Q& q, int n);
GradedOperator<Q> q_zero_derivation(const Params& p, const Q& q);

}  // namespace fockalg
