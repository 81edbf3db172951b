#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fockalg {

using Q = mpq_class;
using Z = mpz_class;

// Single knob for truncations and genericity checks.
constexpr int DEGREE_CAP = 8;

inline bool is_zero(const Q& x) { return sgn(x) == 0; }
// mpq_class(n, d) skips canonicalization
inline Q frac(long n, long d) {
    Q x(n, d);
    x.canonicalize();
    return x;
}
std::string to_string(const Q& x);
Q parse_rational(const std::string& s);

// Univariate polynomial over Q, coefficients lowest degree first, no trailing zeros.
class Poly {
public:
    std::vector<Q> c;

    Poly() = default;
    Poly(const Q& x);
    Poly(long x) : Poly(Q(x)) {}
    explicit Poly(std::vector<Q> coeffs);

    static Poly var();
    static Poly monomial(const Q& coef, int deg);

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    bool is_constant() const { return c.size() <= 1; }
    Q lead() const { return c.empty() ? Q(0) : c.back(); }
    Q coeff(int k) const { return (k >= 0 && k < static_cast<int>(c.size())) ? c[k] : Q(0); }

    Q operator()(const Q& x) const;
    Poly compose(const Poly& g) const;
    Poly derivative() const;
    Poly monic() const;
    // integer primitive associate with positive leading coefficient
    Poly primitive() const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly operator-() const;

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b) { return a.c == b.c; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    std::string str(const std::string& var = "u") const;

private:
    void trim();
};

void divmod(const Poly& a, const Poly& b, Poly& quot, Poly& rem);
Poly operator/(const Poly& a, const Poly& b);  // exact division, throws otherwise
Poly operator%(const Poly& a, const Poly& b);
Poly gcd(const Poly& a, const Poly& b);          // monic, primitive PRS
inline bool is_zero(const Poly& p) { return p.is_zero(); }

// Reduced quotient num/den with monic den.
class RatFunc {
public:
    RatFunc() : num_(), den_(Q(1)) {}
    RatFunc(const Q& x) : num_(x), den_(Q(1)) {}
    RatFunc(long x) : RatFunc(Q(x)) {}
    RatFunc(const Poly& p) : num_(p), den_(Q(1)) {}
    RatFunc(const Poly& n, const Poly& d);

    static RatFunc var() { return RatFunc(Poly::var()); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    bool is_polynomial() const { return den_.is_constant(); }
    Q constant_value() const;

    Q operator()(const Q& x) const;
    RatFunc substitute(const Poly& g) const;

    RatFunc& operator+=(const RatFunc& o);
    RatFunc& operator-=(const RatFunc& o);
    RatFunc& operator*=(const RatFunc& o);
    RatFunc& operator/=(const RatFunc& o);
    RatFunc operator-() const;

    friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
    friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
    friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
    friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    std::string str(const std::string& var = "u") const;

private:
    Poly num_, den_;
    void normalize();
};

inline bool is_zero(const RatFunc& f) { return f.is_zero(); }

// Coefficients of u^0, u^-1, ..., u^-K of f at u = infinity; requires deg num <= deg den.
std::vector<Q> expand_at_infinity(const RatFunc& f, int K);

// Interpolation through (x_i, y_i), then rational reconstruction with the given degree bounds.
std::optional<RatFunc> rational_reconstruct(const std::vector<Q>& xs, const std::vector<Q>& ys,
                                            int num_bound, int den_bound);
Poly newton_interpolate(const std::vector<Q>& xs, const std::vector<Q>& ys);

struct Params {
    Q t1, t2;
    std::vector<Q> a;
    Q q;
    std::uint64_t seed = 0;

    int rank() const { return static_cast<int>(a.size()); }
    Q hbar() const { return -t1 - t2; }
    Q e() const { return -t1 * t2; }
    Q tau1() const { return Q(-1) / (t1 * t2); }
    Q pt() const { return t1 * t2; }
    // tau of an insertion stored as a multiple of the unit
    Q tau(const Q& ins) const { return -ins / (t1 * t2); }
};

// Returns a description of the first violated invariant, if any.
std::optional<std::string> violated_invariant(const Params& p);
Params sample_params(std::uint64_t seed, int r);

// Seeded source of rationals with numerators in [-97, 97] and denominators in [1, 13].
class RationalSampler {
public:
    explicit RationalSampler(std::uint64_t seed);
    ~RationalSampler();
    RationalSampler(const RationalSampler&) = delete;
    RationalSampler& operator=(const RationalSampler&) = delete;
    Q next();
    Q next_nonzero();
    int next_int(int lo, int hi);

private:
    struct Impl;
    Impl* impl_;
};

}  // namespace fockalg
