#include "fockalg/partitions.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace fockalg {

int size(const Partition& l) { return std::accumulate(l.begin(), l.end(), 0); }

int degree(const MultiPartition& m) {
    int d = 0;
    for (const auto& l : m) d += size(l);
    return d;
}

namespace {

void gen(int n, int maxpart, Partition& cur, std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int k = std::min(n, maxpart); k >= 1; --k) {
        cur.push_back(k);
        gen(n - k, k, cur, out);
        cur.pop_back();
    }
}

void compositions(int n, int r, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (r == 1) {
        cur.push_back(n);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int k = n; k >= 0; --k) {
        cur.push_back(k);
        compositions(n - k, r - 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

const std::vector<Partition>& partitions_of(int n) {
    static std::mutex mu;
    static std::map<int, std::vector<Partition>> cache;
    if (n < 0) throw std::invalid_argument("partitions_of: negative size");
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<Partition> out;
    Partition cur;
    gen(n, n, cur, out);
    return cache.emplace(n, std::move(out)).first->second;
}

int partition_count(int n) { return static_cast<int>(partitions_of(n).size()); }

std::vector<MultiPartition> multipartitions_of(int n, int r) {
    std::vector<std::vector<int>> comps;
    std::vector<int> cur;
    compositions(n, r, cur, comps);
    std::vector<MultiPartition> out;
    for (const auto& sz : comps) {
        std::vector<size_t> idx(r, 0);
        for (;;) {
            MultiPartition m(r);
            for (int i = 0; i < r; ++i) m[i] = partitions_of(sz[i])[idx[i]];
            out.push_back(std::move(m));
            int k = r - 1;
            while (k >= 0) {
                if (++idx[k] < partitions_of(sz[k]).size()) break;
                idx[k] = 0;
                --k;
            }
            if (k < 0) break;
        }
    }
    return out;
}

Partition conjugate(const Partition& l) {
    Partition c;
    if (l.empty()) return c;
    for (int j = 1; j <= l[0]; ++j) {
        int cnt = 0;
        for (int p : l)
            if (p >= j) ++cnt;
        c.push_back(cnt);
    }
    return c;
}

bool dominates(const Partition& a, const Partition& b) {
    int sa = 0, sb = 0;
    size_t n = std::max(a.size(), b.size());
    for (size_t i = 0; i < n; ++i) {
        sa += i < a.size() ? a[i] : 0;
        sb += i < b.size() ? b[i] : 0;
        if (sa < sb) return false;
    }
    return true;
}

HookData hook_data(const Partition& l, int i, int j) {
    if (i < 1 || i > static_cast<int>(l.size()) || j < 1 || j > l[i - 1])
        throw std::out_of_range("hook_data: box outside the diagram");
    Partition c = conjugate(l);
    return HookData{l[i - 1] - j, c[j - 1] - i, j - i};
}

std::vector<int> multiplicities(const Partition& l) {
    std::vector<int> m(l.empty() ? 1 : l[0] + 1, 0);
    for (int p : l) ++m[p];
    return m;
}

Z z_lambda(const Partition& l) {
    Z z = 1;
    auto m = multiplicities(l);
    for (size_t k = 1; k < m.size(); ++k)
        for (int t = 1; t <= m[k]; ++t) z *= Z(static_cast<long>(k)) * t;
    return z;
}

Z standard_tableaux_count(const Partition& l) {
    Z num = 1, den = 1;
    int n = size(l);
    for (int k = 2; k <= n; ++k) num *= k;
    for (int i = 1; i <= static_cast<int>(l.size()); ++i)
        for (int j = 1; j <= l[i - 1]; ++j) {
            HookData h = hook_data(l, i, j);
            den *= h.arm + h.leg + 1;
        }
    if (num % den != 0) throw std::logic_error("hook length formula gave a non-integer");
    return num / den;
}

std::string to_string(const Partition& l) {
    std::string s = "(";
    for (size_t i = 0; i < l.size(); ++i) s += (i ? "," : "") + std::to_string(l[i]);
    return s + ")";
}

std::string to_string(const MultiPartition& m) {
    std::string s = "[";
    for (size_t i = 0; i < m.size(); ++i) s += (i ? "," : "") + to_string(m[i]);
    return s + "]";
}

}  // namespace fockalg
