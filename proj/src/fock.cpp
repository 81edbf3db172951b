#include "fockalg/fock.hpp"

#include <mutex>
#include <sstream>

namespace fockalg {

Key key_of(const MultiPartition& mp) {
    if (static_cast<int>(mp.size()) > MAX_RANK) throw std::out_of_range("rank beyond MAX_RANK");
    Key k;
    for (size_t i = 0; i < mp.size(); ++i)
        for (int part : mp[i]) {
            if (part < 1 || part > MAX_MODE) throw std::out_of_range("part beyond MAX_MODE");
            ++k.at(static_cast<int>(i), part);
        }
    return k;
}

MultiPartition multipartition_of(const Key& k, int rank) {
    MultiPartition mp(rank);
    for (int i = 0; i < rank; ++i)
        for (int part = MAX_MODE; part >= 1; --part)
            for (int t = 0; t < k.get(i, part); ++t) mp[i].push_back(part);
    return mp;
}

int key_factor_degree(const Key& k, int factor) {
    int d = 0;
    for (int part = 1; part <= MAX_MODE; ++part) d += part * k.get(factor, part);
    return d;
}

int key_degree(const Key& k, int rank) {
    int d = 0;
    for (int i = 0; i < rank; ++i) d += key_factor_degree(k, i);
    return d;
}

const BasisIndex& basis_index(int n, int rank) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, BasisIndex> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({n, rank});
    if (it != cache.end()) return it->second;
    BasisIndex b;
    b.basis = multipartitions_of(n, rank);
    for (size_t j = 0; j < b.basis.size(); ++j) {
        b.keys.push_back(key_of(b.basis[j]));
        b.index.emplace(b.keys.back(), static_cast<int>(j));
    }
    return cache.emplace(std::make_pair(n, rank), std::move(b)).first->second;
}

Field single_factor(int f) { return {{f, Q(1)}}; }
Field minus_field() { return {{0, Q(1)}, {1, Q(-1)}}; }
Field plus_field() { return {{0, Q(1)}, {1, Q(1)}}; }
Field total_field(int rank) {
    Field f;
    for (int i = 0; i < rank; ++i) f.emplace_back(i, Q(1));
    return f;
}

FockVector<Q> apply_alpha(const Params& p, int factor, int n, const Q& ins, const FockVector<Q>& v) {
    if (n == 0) throw std::invalid_argument("apply_alpha: zero modes live in zero_mode");
    if (factor < 0 || factor >= v.rank) throw std::out_of_range("apply_alpha: factor out of range");
    auto op = alpha_op<Q>(v.rank, p.tau1(), single_factor(factor), n, ins);
    FockVector<Q> out(v.rank);
    for (const auto& [k, c] : v.terms) op.act(k, c, out);
    return out;
}

Q zero_mode(const Params& p, int factor, const Q& ins) { return -p.tau(ins * p.a.at(factor)); }

Matrix<Q> pm_change_of_basis(int n, PmDirection dir) {
    const BasisIndex& b = basis_index(n, 2);
    int N = static_cast<int>(b.basis.size());
    Matrix<Q> M(N, N);
    // the tau1 value is irrelevant: only creation modes appear
    auto plus = [](int k) { return alpha_op<Q>(2, Q(-1), plus_field(), -k, Q(1)); };
    auto minus = [](int k) { return alpha_op<Q>(2, Q(-1), minus_field(), -k, Q(1)); };
    for (int j = 0; j < N; ++j) {
        FockVector<Q> v = FockVector<Q>::vacuum(2);
        for (int k : b.basis[j][0]) {
            FockVector<Q> w(2);
            auto op = plus(k);
            for (const auto& [key, c] : v.terms) op.act(key, c, w);
            v = std::move(w);
        }
        for (int k : b.basis[j][1]) {
            FockVector<Q> w(2);
            auto op = minus(k);
            for (const auto& [key, c] : v.terms) op.act(key, c, w);
            v = std::move(w);
        }
        for (const auto& [key, c] : v.terms) M(b.index.at(key), j) = c;
    }
    return dir == PmDirection::from_pm ? M : inverse(M);
}

std::string to_string(const FockVector<Q>& v) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : v.terms) {
        if (!first) os << " + ";
        first = false;
        os << c.get_str() << "*" << to_string(multipartition_of(k, v.rank));
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace fockalg
