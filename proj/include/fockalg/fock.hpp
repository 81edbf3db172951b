#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <functional>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fockalg/matrix.hpp"
#include "fockalg/partitions.hpp"
#include "fockalg/scalar.hpp"

namespace fockalg {

constexpr int MAX_RANK = 4;
constexpr int MAX_MODE = 24;

// Basis monomial of F^{(x) r}: multiplicity of part k in factor i.
struct Key {
    std::array<std::uint8_t, MAX_RANK * MAX_MODE> m{};

    int get(int i, int k) const { return m[i * MAX_MODE + k - 1]; }
    std::uint8_t& at(int i, int k) { return m[i * MAX_MODE + k - 1]; }

    friend bool operator<(const Key& a, const Key& b) {
        return std::memcmp(a.m.data(), b.m.data(), a.m.size()) < 0;
    }
    friend bool operator==(const Key& a, const Key& b) { return a.m == b.m; }
};

Key key_of(const MultiPartition& mp);
MultiPartition multipartition_of(const Key& k, int rank);
int key_degree(const Key& k, int rank);
int key_factor_degree(const Key& k, int factor);

template <class C>
struct FockVector {
    int rank = 1;
    std::map<Key, C> terms;

    FockVector() = default;
    explicit FockVector(int r) : rank(r) {}

    static FockVector vacuum(int r) {
        FockVector v(r);
        v.terms.emplace(Key{}, C(1));
        return v;
    }
    static FockVector basis(const MultiPartition& mp) {
        FockVector v(static_cast<int>(mp.size()));
        v.terms.emplace(key_of(mp), C(1));
        return v;
    }

    void add(const Key& k, const C& c) {
        if (fockalg::is_zero(c)) return;
        auto it = terms.find(k);
        if (it == terms.end()) {
            terms.emplace(k, c);
            return;
        }
        it->second += c;
        if (fockalg::is_zero(it->second)) terms.erase(it);
    }

    bool is_zero() const { return terms.empty(); }
    C coeff(const Key& k) const {
        auto it = terms.find(k);
        return it == terms.end() ? C(0) : it->second;
    }

    FockVector& operator+=(const FockVector& o) {
        for (const auto& [k, c] : o.terms) add(k, c);
        return *this;
    }
    FockVector& operator-=(const FockVector& o) {
        for (const auto& [k, c] : o.terms) add(k, -c);
        return *this;
    }
    friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
    friend FockVector operator-(FockVector a, const FockVector& b) { return a -= b; }
    FockVector scaled(const C& s) const {
        FockVector r(rank);
        for (const auto& [k, c] : terms) r.add(k, c * s);
        return r;
    }
    friend bool operator==(const FockVector& a, const FockVector& b) {
        return a.rank == b.rank && a.terms == b.terms;
    }
};

struct Mode {
    int factor;
    int n;  // nonzero; negative modes create
    friend bool operator<(const Mode& a, const Mode& b) {
        return a.n != b.n ? a.n < b.n : a.factor < b.factor;
    }
    friend bool operator==(const Mode& a, const Mode& b) { return a.n == b.n && a.factor == b.factor; }
};

// Sum of mode monomials; each monomial acts right to left.
// Annihilation alpha_k (k > 0) acts as k * tau1 * d/dp_k, creation alpha_{-k} as p_k.
template <class C>
struct ModeOp {
    int rank = 1;
    Q tau1 = -1;
    int shift = 0;
    std::vector<std::pair<C, std::vector<Mode>>> terms;

    void add(const C& c, std::vector<Mode> modes) {
        if (fockalg::is_zero(c)) return;
        int s = 0;
        for (const auto& m : modes) {
            if (m.n == 0) throw std::invalid_argument("zero modes are folded into coefficients");
            s -= m.n;
        }
        if (terms.empty() && s != shift) shift = s;
        if (s != shift) throw std::invalid_argument("mode monomials of mixed degree");
        terms.emplace_back(c, std::move(modes));
    }

    void act(const Key& key, const C& c, FockVector<C>& out) const {
        for (const auto& [coef, modes] : terms) {
            Key k = key;
            Q s = 1;
            bool dead = false;
            for (auto it = modes.rbegin(); it != modes.rend(); ++it) {
                int f = it->factor, n = it->n;
                if (n < 0) {
                    if (-n > MAX_MODE) throw std::out_of_range("creation mode beyond MAX_MODE");
                    std::uint8_t& slot = k.at(f, -n);
                    if (slot == 255) throw std::overflow_error("part multiplicity overflow");
                    ++slot;
                } else {
                    if (n > MAX_MODE) {
                        dead = true;
                        break;
                    }
                    std::uint8_t& slot = k.at(f, n);
                    if (slot == 0) {
                        dead = true;
                        break;
                    }
                    s *= tau1 * n * static_cast<long>(slot);
                    --slot;
                }
            }
            if (dead) continue;
            out.add(k, coef * C(s) * c);
        }
    }

    ModeOp& operator+=(const ModeOp& o) {
        for (const auto& t : o.terms) add(t.first, t.second);
        return *this;
    }
    ModeOp scaled(const C& s) const {
        ModeOp r = *this;
        r.terms.clear();
        for (const auto& t : terms) r.add(t.first * s, t.second);
        return r;
    }
};

struct BasisIndex {
    std::vector<MultiPartition> basis;
    std::vector<Key> keys;
    std::map<Key, int> index;
};
const BasisIndex& basis_index(int n, int rank);

template <class C>
struct GradedOperator {
    int rank_in = 1, rank_out = 1, shift = 0;
    std::function<void(const Key&, const C&, FockVector<C>&)> act;

    static GradedOperator from(const ModeOp<C>& op) {
        GradedOperator g;
        g.rank_in = g.rank_out = op.rank;
        g.shift = op.shift;
        g.act = [op](const Key& k, const C& c, FockVector<C>& out) { op.act(k, c, out); };
        return g;
    }
    static GradedOperator identity(int rank) { return scalar(rank, C(1)); }
    static GradedOperator scalar(int rank, const C& s) {
        GradedOperator g;
        g.rank_in = g.rank_out = rank;
        g.act = [s](const Key& k, const C& c, FockVector<C>& out) { out.add(k, s * c); };
        return g;
    }
    static GradedOperator zero(int rank, int shift = 0) {
        GradedOperator g;
        g.rank_in = g.rank_out = rank;
        g.shift = shift;
        g.act = [](const Key&, const C&, FockVector<C>&) {};
        return g;
    }

    FockVector<C> operator()(const FockVector<C>& v) const {
        FockVector<C> out(rank_out);
        for (const auto& [k, c] : v.terms) act(k, c, out);
        return out;
    }

    Matrix<C> matrix(int n) const {
        if (n + shift < 0) throw std::invalid_argument("operator_matrix: negative target degree");
        const BasisIndex& in = basis_index(n, rank_in);
        const BasisIndex& out = basis_index(n + shift, rank_out);
        Matrix<C> M(static_cast<int>(out.basis.size()), static_cast<int>(in.basis.size()));
        for (size_t j = 0; j < in.keys.size(); ++j) {
            FockVector<C> img(rank_out);
            act(in.keys[j], C(1), img);
            for (const auto& [k, c] : img.terms) {
                auto it = out.index.find(k);
                if (it == out.index.end()) throw std::logic_error("operator image outside target degree");
                M(it->second, static_cast<int>(j)) = c;
            }
        }
        return M;
    }

    GradedOperator scaled(const C& s) const {
        GradedOperator g = *this;
        auto f = act;
        g.act = [f, s](const Key& k, const C& c, FockVector<C>& out) { f(k, c * s, out); };
        return g;
    }

    friend GradedOperator operator+(const GradedOperator& a, const GradedOperator& b) {
        if (a.shift != b.shift || a.rank_in != b.rank_in || a.rank_out != b.rank_out)
            throw std::invalid_argument("sum of operators with different gradings");
        GradedOperator g = a;
        auto fa = a.act, fb = b.act;
        g.act = [fa, fb](const Key& k, const C& c, FockVector<C>& out) {
            fa(k, c, out);
            fb(k, c, out);
        };
        return g;
    }
    friend GradedOperator operator-(const GradedOperator& a, const GradedOperator& b) {
        return a + b.scaled(C(-1));
    }
    // composition a after b
    friend GradedOperator operator*(const GradedOperator& a, const GradedOperator& b) {
        if (a.rank_in != b.rank_out) throw std::invalid_argument("composition rank mismatch");
        GradedOperator g;
        g.rank_in = b.rank_in;
        g.rank_out = a.rank_out;
        g.shift = a.shift + b.shift;
        auto fa = a.act, fb = b.act;
        int mid = b.rank_out;
        g.act = [fa, fb, mid](const Key& k, const C& c, FockVector<C>& out) {
            FockVector<C> tmp(mid);
            fb(k, c, tmp);
            for (const auto& [kk, cc] : tmp.terms) fa(kk, cc, out);
        };
        return g;
    }
};

template <class C>
Matrix<C> operator_matrix(const GradedOperator<C>& op, int n) {
    return op.matrix(n);
}

// Linear combination of factors: alpha = sum c_f alpha^{(f)}.
using Field = std::vector<std::pair<int, Q>>;
Field single_factor(int f);
Field minus_field();  // alpha^{(1)} - alpha^{(2)}
Field plus_field();   // alpha^{(1)} + alpha^{(2)}
Field total_field(int rank);

// ins * alpha_n of the field, as a mode operator.
template <class C>
ModeOp<C> alpha_op(int rank, const Q& tau1, const Field& field, int n, const Q& ins) {
    if (n == 0) throw std::invalid_argument("alpha_op: zero mode requested");
    ModeOp<C> op;
    op.rank = rank;
    op.tau1 = tau1;
    for (const auto& [f, c] : field) op.add(C(Q(c * ins)), {Mode{f, n}});
    return op;
}

// alpha_n^{(i)}(gamma) applied to v; gamma given as a multiple of the unit.
FockVector<Q> apply_alpha(const Params& p, int factor, int n, const Q& ins, const FockVector<Q>& v);
// alpha_0^{(i)}(gamma) on F(a_i): -tau(gamma a_i)
Q zero_mode(const Params& p, int factor, const Q& ins);

enum class PmDirection { to_pm, from_pm };
// from_pm: columns are the alpha^+/alpha^- monomials in the pair-of-partitions basis.
// Both bases are indexed by multipartitions_of(n, 2); (l+, l-) for the pm side.
Matrix<Q> pm_change_of_basis(int n, PmDirection dir);

// Vectors and matrices of Q as readable strings for diagnostics.
std::string to_string(const FockVector<Q>& v);

}  // namespace fockalg
