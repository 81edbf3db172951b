#include "fockalg/grassmann.hpp"

#include <array>
#include <bit>

namespace fockalg {

int SpinState::weight() const { return std::popcount(bits); }

std::vector<int> weight_sector(int n, int k) {
    std::vector<int> out;
    for (unsigned s = 0; s < (1u << n); ++s)
        if (std::popcount(s) == k) out.push_back(static_cast<int>(s));
    return out;
}

Matrix<Q> permutation_2x2() {
    Matrix<Q> P(4, 4);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) P(2 * j + i, 2 * i + j) = 1;
    return P;
}

Matrix<RatFunc> yang_r(const Q& hbar) {
    Matrix<RatFunc> P = convert<RatFunc>(permutation_2x2());
    RatFunc u = RatFunc::var();
    RatFunc inv = RatFunc(Q(1)) / (u - RatFunc(hbar));
    Matrix<RatFunc> R = Matrix<RatFunc>::identity(4).scaled(u) - P.scaled(RatFunc(hbar));
    return R.scaled(inv);
}

Matrix<Q> yang_r(const Q& u, const Q& hbar) {
    if (u == hbar) throw std::domain_error("yang_r: pole at u = hbar");
    Matrix<Q> R = Matrix<Q>::identity(4).scaled(u) - permutation_2x2().scaled(hbar);
    return R.scaled(Q(1) / (u - hbar));
}

Matrix<Q> classical_r_formula() {
    // e_ab (x) e_cd sends e_b (x) e_d to e_a (x) e_c
    Matrix<Q> r(4, 4);
    auto put = [&r](int a, int b, int c, int d, int s) { r(2 * a + c, 2 * b + d) += s; };
    put(0, 0, 1, 1, 1);
    put(1, 1, 0, 0, 1);
    put(0, 1, 1, 0, -1);
    put(1, 0, 0, 1, -1);
    return r;
}

Matrix<RatFunc> stab_tp1(int chamber, const Q& hbar) {
    RatFunc u = RatFunc::var(), h(hbar);
    Matrix<RatFunc> m(2, 2);
    if (chamber > 0) {
        m(0, 0) = -u - h;
        m(1, 0) = -h;
        m(1, 1) = u;
    } else if (chamber < 0) {
        m(0, 0) = -u;
        m(0, 1) = -h;
        m(1, 1) = u - h;
    } else {
        throw std::invalid_argument("stab_tp1: chamber must be +1 or -1");
    }
    return m;
}

namespace {

// E_ba at a site: sends bit a to bit b
Matrix<Poly> site_unit(int n, int site, int b, int a) {
    int N = 1 << n;
    Matrix<Poly> m(N, N);
    for (int s = 0; s < N; ++s) {
        SpinState st{n, static_cast<unsigned>(s)};
        if (st.bit(site) != a) continue;
        unsigned mask = 1u << (n - site);
        unsigned t = b ? (s | mask) : (s & ~mask);
        m(static_cast<int>(t), s) = Poly(Q(1));
    }
    return m;
}

using Block = std::array<std::array<Matrix<Poly>, 2>, 2>;

}  // namespace

Matrix<RatFunc> transfer_matrix(const TwistMatrix& g, const std::vector<Q>& a, const Q& hbar) {
    int n = static_cast<int>(a.size());
    if (n > 10) throw std::invalid_argument("transfer_matrix: chain too long");
    int N = 1 << n;
    Poly u = Poly::var();
    Block M;
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y) M[x][y] = x == y ? Matrix<Poly>::identity(N) : Matrix<Poly>(N, N);
    Poly den(Q(1));
    for (int i = 1; i <= n; ++i) {
        Poly v = u - Poly(a[i - 1]);
        den *= v - Poly(hbar);
        Block R;
        for (int x = 0; x < 2; ++x)
            for (int y = 0; y < 2; ++y) {
                R[x][y] = site_unit(n, i, y, x).scaled(Poly(-hbar));
                if (x == y) R[x][y] += Matrix<Poly>::identity(N).scaled(v);
            }
        Block next;
        for (int x = 0; x < 2; ++x)
            for (int y = 0; y < 2; ++y) next[x][y] = R[x][0] * M[0][y] + R[x][1] * M[1][y];
        M = std::move(next);
    }
    Matrix<Poly> num = M[0][0].scaled(Poly(g.g0)) + M[1][1].scaled(Poly(g.g1));
    Matrix<RatFunc> T(N, N);
    for (size_t k = 0; k < num.a.size(); ++k) T.a[k] = RatFunc(num.a[k], den);
    return T;
}

Matrix<Q> transfer_matrix_at(const TwistMatrix& g, const std::vector<Q>& a, const Q& hbar, const Q& u) {
    for (const auto& ai : a)
        if (u - ai == hbar) throw std::domain_error("transfer_matrix: pole collision");
    return evaluate(transfer_matrix(g, a, hbar), u);
}

Matrix<Q> baxter_coefficient(const TwistMatrix& g, int k, const std::vector<Q>& a, const Q& hbar) {
    if (k < 0 || k > 3) throw std::invalid_argument("baxter_coefficient: k must be in 0..3");
    Matrix<RatFunc> T = transfer_matrix(g, a, hbar);
    Matrix<Q> E(T.rows, T.cols);
    for (size_t i = 0; i < T.a.size(); ++i) E.a[i] = expand_at_infinity(T.a[i], k + 1)[k + 1] / hbar;
    return E;
}

Matrix<Q> sector_block(const Matrix<Q>& m, const std::vector<int>& sector) {
    int K = static_cast<int>(sector.size());
    Matrix<Q> b(K, K);
    for (int i = 0; i < K; ++i)
        for (int j = 0; j < K; ++j) b(i, j) = m(sector[i], sector[j]);
    return b;
}

namespace {

Matrix<Q> chain_sum(int n, int b, int a) {
    int N = 1 << n;
    Matrix<Q> m(N, N);
    for (int i = 1; i <= n; ++i) {
        Matrix<Poly> s = site_unit(n, i, b, a);
        for (size_t k = 0; k < s.a.size(); ++k)
            if (!s.a[k].is_zero()) m.a[k] += s.a[k].coeff(0);
    }
    return m;
}

}  // namespace

Matrix<Q> chain_e(int n) { return chain_sum(n, 0, 1); }
Matrix<Q> chain_f(int n) { return chain_sum(n, 1, 0); }

ClassExpansion stab_point_class(int n, int i) {
    if (i < 1 || i > n) throw std::invalid_argument("stab_point_class: index out of range");
    ClassExpansion c;
    c["U" + std::to_string(i)] += 1;
    if (i + 1 <= n) c["U" + std::to_string(i + 1)] += 1;
    return c;
}

ClassExpansion flop_image(int n, const ClassExpansion& x) {
    ClassExpansion out;
    const std::string dual_all = "P" + std::to_string(n + 1);
    for (const auto& [label, c] : x) {
        if (label.empty() || label[0] != 'U') throw std::invalid_argument("flop_image: expects U classes");
        int j = std::stoi(label.substr(1));
        int dim = n - j + 1;
        out["P" + std::to_string(j)] += c;
        out[dual_all] -= (dim % 2 == 0 ? Z(1) : Z(-1)) * c;
    }
    for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

ClassExpansion flop_expected(int, int i) {
    ClassExpansion c;
    c["P" + std::to_string(i)] += 1;
    c["P" + std::to_string(i + 1)] += 1;
    return c;
}

}  // namespace fockalg
