#pragma once

#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "fockalg/fock.hpp"

namespace fockalg {

enum class SymBasis { p, m, s };

template <class C>
struct SymFunc {
    SymBasis basis = SymBasis::p;
    std::map<Partition, C> coeffs;

    C coeff(const Partition& l) const {
        auto it = coeffs.find(l);
        return it == coeffs.end() ? C(0) : it->second;
    }
    void add(const Partition& l, const C& c) {
        if (is_zero(c)) return;
        auto it = coeffs.find(l);
        if (it == coeffs.end()) {
            coeffs.emplace(l, c);
            return;
        }
        it->second += c;
        if (is_zero(it->second)) coeffs.erase(it);
    }
    // degree of a homogeneous element; -1 for zero, throws if inhomogeneous
    int degree() const {
        int d = -1;
        for (const auto& kv : coeffs) {
            int s = size(kv.first);
            if (d >= 0 && s != d) throw std::invalid_argument("SymFunc: inhomogeneous");
            d = s;
        }
        return d;
    }
    friend bool operator==(const SymFunc& a, const SymFunc& b) {
        return a.basis == b.basis && a.coeffs == b.coeffs;
    }
};

// p_mu = sum_lambda P(mu, lambda) m_lambda, rows and columns over partitions_of(n).
const Matrix<Q>& p_to_m(int n);
const Matrix<Q>& m_to_p(int n);
// Kostka numbers by semistandard tableau enumeration: s_lambda = sum_mu K(lambda, mu) m_mu.
Z kostka(const Partition& shape, const Partition& content);
const Matrix<Q>& s_to_m(int n);
const Matrix<Q>& m_to_s(int n);

int partition_position(const Partition& l);

template <class C>
SymFunc<C> change_basis(const SymFunc<C>& f, SymBasis target) {
    if (f.basis == target) return f;
    int n = f.degree();
    if (n < 0) return SymFunc<C>{target, {}};
    const auto& parts = partitions_of(n);
    auto step = [&](const SymFunc<C>& g, const Matrix<Q>& M, SymBasis to) {
        SymFunc<C> out{to, {}};
        for (const auto& [l, c] : g.coeffs) {
            int i = partition_position(l);
            for (size_t j = 0; j < parts.size(); ++j) {
                const Q& x = M(i, static_cast<int>(j));
                if (!is_zero(x)) out.add(parts[j], c * C(x));
            }
        }
        return out;
    };
    // route everything through m
    SymFunc<C> m = f.basis == SymBasis::m ? f
                   : f.basis == SymBasis::p ? step(f, p_to_m(n), SymBasis::m)
                                            : step(f, s_to_m(n), SymBasis::m);
    if (target == SymBasis::m) return m;
    return target == SymBasis::p ? step(m, m_to_p(n), SymBasis::p) : step(m, m_to_s(n), SymBasis::s);
}

// <p_lambda, p_mu> = delta z_lambda alpha^{l(lambda)}
template <class C>
C jack_inner_product(const SymFunc<C>& f, const SymFunc<C>& g, const C& alpha) {
    int df = f.degree(), dg = g.degree();
    if (df < 0 || dg < 0) return C(0);
    if (df != dg) throw std::invalid_argument("jack_inner_product: degrees differ");
    SymFunc<C> a = change_basis(f, SymBasis::p), b = change_basis(g, SymBasis::p);
    C acc(0);
    for (const auto& [l, c] : a.coeffs) {
        auto it = b.coeffs.find(l);
        if (it == b.coeffs.end()) continue;
        C w = c * it->second * C(Q(z_lambda(l)));
        for (size_t k = 0; k < l.size(); ++k) w = w * alpha;
        acc += w;
    }
    return acc;
}

// prod over boxes of (t2 (leg + 1) - t1 arm)
template <class C>
C jack_leading(const Partition& l, const C& t1, const C& t2) {
    C c(1);
    for (size_t i = 0; i < l.size(); ++i)
        for (int j = 1; j <= l[i]; ++j) {
            HookData h = hook_data(l, static_cast<int>(i) + 1, j);
            c = c * (t2 * C(Q(h.leg + 1)) - t1 * C(Q(h.arm)));
        }
    return c;
}

// J_lambda in the m basis: m_lambda coefficient jack_leading, orthogonal to m_nu for nu < lambda
// with alpha = -t1/t2.
template <class C>
SymFunc<C> jack_polynomial(const Partition& lam, const C& t1, const C& t2) {
    int n = size(lam);
    if (n > DEGREE_CAP) throw std::invalid_argument("jack_polynomial: degree beyond DEGREE_CAP");
    SymFunc<C> J{SymBasis::m, {}};
    C lead = jack_leading(lam, t1, t2);
    if (n == 0) {
        J.add(lam, lead);
        return J;
    }
    C alpha = C(Q(-1)) * t1 / t2;
    std::vector<Partition> below;
    for (const auto& nu : partitions_of(n))
        if (nu != lam && dominates(lam, nu)) below.push_back(nu);
    auto mono = [](const Partition& nu) {
        SymFunc<C> f{SymBasis::m, {}};
        f.add(nu, C(1));
        return f;
    };
    int k = static_cast<int>(below.size());
    if (k > 0) {
        Matrix<C> G(k, k), rhs(k, 1);
        for (int i = 0; i < k; ++i) {
            SymFunc<C> mi = mono(below[i]);
            for (int j = 0; j < k; ++j) G(i, j) = jack_inner_product(mi, mono(below[j]), alpha);
            rhs(i, 0) = C(Q(-1)) * lead * jack_inner_product(mi, mono(lam), alpha);
        }
        Matrix<C> x = solve(G, rhs);
        for (int i = 0; i < k; ++i) J.add(below[i], x(i, 0));
    }
    J.add(lam, lead);
    return J;
}

// Memoized Q-valued Jacks.
const SymFunc<Q>& jack_cached(const Partition& lam, const Q& t1, const Q& t2);

template <class C>
SymFunc<C> schur_polynomial(const Partition& lam) {
    int n = size(lam);
    if (n > DEGREE_CAP) throw std::invalid_argument("schur_polynomial: degree beyond DEGREE_CAP");
    SymFunc<C> s{SymBasis::m, {}};
    for (const auto& mu : partitions_of(n)) {
        Z k = kostka(lam, mu);
        if (k != 0) s.add(mu, C(Q(k)));
    }
    return s;
}

enum class DictDirection { to_sym, to_fock };

// t1 alpha_{-k}(1) <-> p_k: the p_mu coefficient is t1^{-l(mu)} times the Fock coefficient.
SymFunc<Q> fock_to_sym(const FockVector<Q>& v, const Q& t1);
FockVector<Q> sym_to_fock(const SymFunc<Q>& f, const Q& t1);

// Weight of c_1(O(1)) at the fixed point I_lambda on F(a).
Q fixed_point_weight(const Partition& lam, const Q& a, const Q& t1, const Q& t2);

}  // namespace fockalg
