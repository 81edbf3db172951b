#include "fockalg/gamma.hpp"

#include <stdexcept>

namespace fockalg {

namespace {

using Series = std::vector<Q>;  // truncated power series, z^0 first

Series mul(const Series& x, const Series& y, int len) {
    Series r(len, Q(0));
    for (int i = 0; i < len && i < static_cast<int>(x.size()); ++i)
        for (int j = 0; i + j < len && j < static_cast<int>(y.size()); ++j) r[i + j] += x[i] * y[j];
    return r;
}

Series divide(const Series& x, const Series& y, int len) {
    if (y.empty() || is_zero(y[0])) throw std::domain_error("series division by a non-unit");
    Series r(len, Q(0));
    for (int i = 0; i < len; ++i) {
        Q acc = i < static_cast<int>(x.size()) ? x[i] : Q(0);
        for (int j = 1; j <= i && j < static_cast<int>(y.size()); ++j) acc -= y[j] * r[i - j];
        r[i] = acc / y[0];
    }
    return r;
}

Series exp_series(const Q& a, int len) {
    Series r(len);
    Q term = 1;
    for (int i = 0; i < len; ++i) {
        r[i] = term;
        term = term * a / (i + 1);
    }
    return r;
}

// (1 - e^{-tz}) / z
Series one_minus_exp_over_z(const Q& t, int len) {
    Series e = exp_series(-t, len + 1);
    Series r(len);
    for (int i = 0; i < len; ++i) r[i] = -e[i + 1];
    return r;
}

Q factorial(int n) {
    Q f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

Q binom(int n, int k) { return factorial(n) / (factorial(k) * factorial(n - k)); }

}  // namespace

std::vector<Q> bernoulli_recursive(int n) {
    std::vector<Q> B(n + 1, Q(0));
    B[0] = 1;
    for (int m = 1; m <= n; ++m) {
        Q acc = 0;
        for (int j = 0; j < m; ++j) acc += binom(m + 1, j) * B[j];
        B[m] = -acc / (m + 1);
    }
    if (n >= 1) B[1] = -B[1];
    return B;
}

std::vector<Q> bernoulli_generating(int n) {
    Series one{Q(1)};
    Series g = divide(one, one_minus_exp_over_z(Q(1), n + 1), n + 1);
    for (int j = 0; j <= n; ++j) g[j] *= factorial(j);
    return g;
}

LaurentSeries ch_coefficients(const Q& a, const Q& t1, const Q& t2, int k_max) {
    if (k_max > 6 || k_max < -2) throw std::invalid_argument("ch_coefficients: k_max out of range");
    int len = k_max + 3;
    Series den = mul(one_minus_exp_over_z(t1, len), one_minus_exp_over_z(t2, len), len);
    return LaurentSeries{-2, divide(exp_series(a, len), den, len)};
}

LaurentSeries ch_coefficients_bernoulli(const Q& a, const Q& t1, const Q& t2, int k_max) {
    if (k_max > 6 || k_max < -2) throw std::invalid_argument("ch_coefficients: k_max out of range");
    int len = k_max + 3;
    std::vector<Q> B = bernoulli_recursive(len);
    LaurentSeries out{-2, Series(len, Q(0))};
    for (int s = 0; s < len; ++s) {
        Q acc = 0;
        for (int i = 0; i <= s; ++i)
            for (int j = 0; i + j <= s; ++j) {
                int l = s - i - j;
                Q ti = 1, tj = 1, al = 1;
                for (int x = 0; x < i; ++x) ti *= t1;
                for (int x = 0; x < j; ++x) tj *= t2;
                for (int x = 0; x < l; ++x) al *= a;
                acc += B[i] * ti / factorial(i) * B[j] * tj / factorial(j) * al / factorial(l);
            }
        out.c[s] = acc / (t1 * t2);
    }
    return out;
}

GammaExpansion gamma_ratio_expansion(const Q& a, const Q& t1, const Q& t2, int K) {
    if (K < 0 || K > 4) throw std::invalid_argument("gamma_ratio_expansion: K out of range");
    Q hbar = -t1 - t2;
    if (is_zero(hbar)) throw std::domain_error("gamma_ratio_expansion: hbar = 0");
    int len = K + 3;  // g_{-2} .. g_K
    LaurentSeries ch = ch_coefficients(a, t1, t2, K);
    Series E = exp_series(-(t1 + t2), len);
    for (auto& x : E) x = -x;
    E[0] += 1;  // 1 - e^{-(t1+t2) z}
    Series g = mul(ch.c, E, len);
    for (auto& x : g) x /= hbar;
    GammaExpansion out;
    out.integrand = LaurentSeries{-2, g};
    out.ln_m1 = out.integrand.at(-1);
    out.ln = -out.integrand.at(0);
    for (int k = 1; k <= K; ++k) out.inv_u.push_back(factorial(k - 1) * out.integrand.at(k));
    return out;
}

}  // namespace fockalg
