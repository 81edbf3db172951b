#pragma once

#include <vector>

#include "fockalg/scalar.hpp"

namespace fockalg {

// Coefficients c_k of z^k for k >= low.
struct LaurentSeries {
    int low = -2;
    std::vector<Q> c;
    Q at(int k) const {
        int i = k - low;
        return (i >= 0 && i < static_cast<int>(c.size())) ? c[i] : Q(0);
    }
    int high() const { return low + static_cast<int>(c.size()) - 1; }
};

// B_0..B_n with B_1 = +1/2, from sum_{j <= m} C(m+1, j) B_j = 0 followed by the sign flip of B_1.
std::vector<Q> bernoulli_recursive(int n);
// j! [z^j] z / (1 - e^{-z}) by power-series division.
std::vector<Q> bernoulli_generating(int n);

// Laurent coefficients of e^{az} / ((1 - e^{-t1 z})(1 - e^{-t2 z})), k = -2..k_max.
LaurentSeries ch_coefficients(const Q& a, const Q& t1, const Q& t2, int k_max);            // series division
LaurentSeries ch_coefficients_bernoulli(const Q& a, const Q& t1, const Q& t2, int k_max);  // Bernoulli product

// (1/hbar) log of the double-gamma ratio in the basis ln^{(-1)} u, ln u, u^{-1}, ..., u^{-K}.
struct GammaExpansion {
    LaurentSeries integrand;  // g_k of e^{az}(1 - e^{-(t1+t2)z}) / (hbar (1 - e^{-t1 z})(1 - e^{-t2 z}))
    Q ln_m1;                  // coefficient of ln^{(-1)} u = u ln u - u
    Q ln;
    std::vector<Q> inv_u;     // inv_u[k - 1] multiplies u^{-k}
};
GammaExpansion gamma_ratio_expansion(const Q& a, const Q& t1, const Q& t2, int K);

// Scalar prefactor relating the normalized and the plain R-matrix.
inline GammaExpansion r_hat_prefactor(const Q& a, const Q& t1, const Q& t2, int K) {
    return gamma_ratio_expansion(a, t1, t2, K);
}

}  // namespace fockalg
