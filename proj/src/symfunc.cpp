#include "fockalg/symfunc.hpp"

#include <functional>

namespace fockalg {

int partition_position(const Partition& l) {
    const auto& ps = partitions_of(size(l));
    for (size_t i = 0; i < ps.size(); ++i)
        if (ps[i] == l) return static_cast<int>(i);
    throw std::invalid_argument("partition_position: not a partition");
}

namespace {

// number of ways to distribute the parts of mu over rows with row sums lambda
Z count_placements(const Partition& mu, const Partition& lam) {
    std::vector<int> room(lam.begin(), lam.end());
    std::function<Z(size_t)> rec = [&](size_t i) -> Z {
        if (i == mu.size()) {
            for (int r : room)
                if (r != 0) return 0;
            return 1;
        }
        Z total = 0;
        for (auto& r : room)
            if (r >= mu[i]) {
                r -= mu[i];
                total += rec(i + 1);
                r += mu[i];
            }
        return total;
    };
    return rec(0);
}

template <class F>
const Matrix<Q>& cached(std::map<int, Matrix<Q>>& cache, std::mutex& mu, int n, F build) {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    return cache.emplace(n, build()).first->second;
}

std::mutex g_mu;
std::map<int, Matrix<Q>> g_pm, g_mp, g_sm, g_ms;

Matrix<Q> build_p_to_m(int n) {
    const auto& ps = partitions_of(n);
    int N = static_cast<int>(ps.size());
    Matrix<Q> M(N, N);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) M(i, j) = Q(count_placements(ps[i], ps[j]));
    return M;
}

Matrix<Q> build_s_to_m(int n) {
    const auto& ps = partitions_of(n);
    int N = static_cast<int>(ps.size());
    Matrix<Q> M(N, N);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) M(i, j) = Q(kostka(ps[i], ps[j]));
    return M;
}

}  // namespace

const Matrix<Q>& p_to_m(int n) { return cached(g_pm, g_mu, n, [n] { return build_p_to_m(n); }); }
const Matrix<Q>& m_to_p(int n) {
    const Matrix<Q>& f = p_to_m(n);
    return cached(g_mp, g_mu, n, [&f] { return inverse(f); });
}
const Matrix<Q>& s_to_m(int n) { return cached(g_sm, g_mu, n, [n] { return build_s_to_m(n); }); }
const Matrix<Q>& m_to_s(int n) {
    const Matrix<Q>& f = s_to_m(n);
    return cached(g_ms, g_mu, n, [&f] { return inverse(f); });
}

Z kostka(const Partition& shape, const Partition& content) {
    if (size(shape) != size(content)) return 0;
    // fill letters 1, 2, ... as horizontal strips
    std::vector<int> cur(shape.size(), 0);
    std::function<Z(size_t)> rec = [&](size_t k) -> Z {
        if (k == content.size()) return 1;
        Z total = 0;
        std::vector<int> prev = cur;
        std::function<void(size_t, int)> strip = [&](size_t row, int left) {
            if (row == shape.size()) {
                if (left == 0) total += rec(k + 1);
                return;
            }
            int cap = shape[row];
            if (row > 0) cap = std::min(cap, prev[row - 1]);
            for (int add = 0; prev[row] + add <= cap && add <= left; ++add) {
                cur[row] = prev[row] + add;
                strip(row + 1, left - add);
            }
            cur[row] = prev[row];
        };
        strip(0, content[k]);
        return total;
    };
    return rec(0);
}

const SymFunc<Q>& jack_cached(const Partition& lam, const Q& t1, const Q& t2) {
    static std::mutex mu;
    static std::map<std::tuple<Partition, Q, Q>, SymFunc<Q>> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find({lam, t1, t2});
        if (it != cache.end()) return it->second;
    }
    SymFunc<Q> J = jack_polynomial<Q>(lam, t1, t2);
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(std::make_tuple(lam, t1, t2), std::move(J)).first->second;
}

SymFunc<Q> fock_to_sym(const FockVector<Q>& v, const Q& t1) {
    if (v.rank != 1) throw std::invalid_argument("fock_to_sym: rank must be 1");
    SymFunc<Q> f{SymBasis::p, {}};
    for (const auto& [k, c] : v.terms) {
        Partition mu = multipartition_of(k, 1)[0];
        Q w = c;
        for (size_t i = 0; i < mu.size(); ++i) w /= t1;
        f.add(mu, w);
    }
    return f;
}

FockVector<Q> sym_to_fock(const SymFunc<Q>& f, const Q& t1) {
    SymFunc<Q> g = change_basis(f, SymBasis::p);
    FockVector<Q> v(1);
    for (const auto& [mu, c] : g.coeffs) {
        Q w = c;
        for (size_t i = 0; i < mu.size(); ++i) w *= t1;
        v.add(key_of({mu}), w);
    }
    return v;
}

Q fixed_point_weight(const Partition& lam, const Q& a, const Q& t1, const Q& t2) {
    Q w = a * size(lam);
    for (size_t i = 0; i < lam.size(); ++i)
        for (int j = 1; j <= lam[i]; ++j) w -= (j - 1) * t1 + static_cast<long>(i) * t2;
    return w;
}

}  // namespace fockalg
