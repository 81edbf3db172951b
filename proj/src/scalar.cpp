#include "fockalg/scalar.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

namespace fockalg {

std::string to_string(const Q& x) {
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Q parse_rational(const std::string& s) {
    Q x;
    if (x.set_str(s, 10) != 0) throw std::invalid_argument("not a rational: " + s);
    if (sgn(x.get_den()) == 0) throw std::invalid_argument("zero denominator: " + s);
    x.canonicalize();
    return x;
}

// ---------------- Poly ----------------

Poly::Poly(const Q& x) {
    if (!fockalg::is_zero(x)) c.push_back(x);
}

Poly::Poly(std::vector<Q> coeffs) : c(std::move(coeffs)) { trim(); }

Poly Poly::var() { return Poly(std::vector<Q>{Q(0), Q(1)}); }

Poly Poly::monomial(const Q& coef, int deg) {
    if (fockalg::is_zero(coef)) return Poly();
    std::vector<Q> v(deg + 1, Q(0));
    v[deg] = coef;
    return Poly(std::move(v));
}

void Poly::trim() {
    while (!c.empty() && fockalg::is_zero(c.back())) c.pop_back();
}

Q Poly::operator()(const Q& x) const {
    Q r = 0;
    for (int i = degree(); i >= 0; --i) r = r * x + c[i];
    return r;
}

Poly Poly::compose(const Poly& g) const {
    Poly r;
    for (int i = degree(); i >= 0; --i) r = r * g + Poly(c[i]);
    return r;
}

Poly Poly::derivative() const {
    std::vector<Q> v;
    for (int i = 1; i <= degree(); ++i) v.push_back(c[i] * i);
    return Poly(std::move(v));
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    Poly r = *this;
    Q l = lead();
    for (auto& x : r.c) x /= l;
    return r;
}

Poly Poly::primitive() const {
    if (is_zero()) return *this;
    Z l = 1;
    for (const auto& x : c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
    Z g = 0;
    for (const auto& x : c) {
        Z v = x.get_num() * (l / x.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    }
    Q s = Q(l) / Q(g);
    if (sgn(c.back()) < 0) s = -s;
    Poly r = *this;
    for (auto& x : r.c) x *= s;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c.size() > c.size()) c.resize(o.c.size(), Q(0));
    for (size_t i = 0; i < o.c.size(); ++i) c[i] += o.c[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c.size() > c.size()) c.resize(o.c.size(), Q(0));
    for (size_t i = 0; i < o.c.size(); ++i) c[i] -= o.c[i];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Q> v(a.c.size() + b.c.size() - 1, Q(0));
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j) v[i + j] += a.c[i] * b.c[j];
    return Poly(std::move(v));
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& x : r.c) x = -x;
    return r;
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        if (fockalg::is_zero(c[i])) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << c[i].get_str() << ")";
        if (i >= 1) os << "*" << var;
        if (i >= 2) os << "^" << i;
    }
    return os.str();
}

void divmod(const Poly& a, const Poly& b, Poly& quot, Poly& rem) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Q> r = a.c;
    int db = b.degree();
    int dq = a.degree() - db;
    std::vector<Q> q(dq >= 0 ? dq + 1 : 0, Q(0));
    Q lb = b.lead();
    for (int k = dq; k >= 0; --k) {
        Q f = r[k + db] / lb;
        q[k] = f;
        if (fockalg::is_zero(f)) continue;
        for (int j = 0; j <= db; ++j) r[k + j] -= f * b.c[j];
    }
    quot = Poly(std::move(q));
    if (static_cast<int>(r.size()) > db) r.resize(db > 0 ? db : 0);
    rem = Poly(std::move(r));
}

Poly operator/(const Poly& a, const Poly& b) {
    Poly q, r;
    divmod(a, b, q, r);
    if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
    return q;
}

Poly operator%(const Poly& a, const Poly& b) {
    Poly q, r;
    divmod(a, b, q, r);
    return r;
}

Poly gcd(const Poly& a0, const Poly& b0) {
    Poly a = a0.primitive(), b = b0.primitive();
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        Poly r = (a % b).primitive();
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

// ---------------- RatFunc ----------------

RatFunc::RatFunc(const Poly& n, const Poly& d) : num_(n), den_(d) {
    if (d.is_zero()) throw std::domain_error("rational function with zero denominator");
    normalize();
}

void RatFunc::normalize() {
    if (num_.is_zero()) {
        den_ = Poly(Q(1));
        return;
    }
    if (!den_.is_constant()) {
        Poly g = gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
    }
    Q l = den_.lead();
    if (l != 1) {
        for (auto& x : num_.c) x /= l;
        for (auto& x : den_.c) x /= l;
    }
}

Q RatFunc::constant_value() const {
    if (!is_constant()) throw std::domain_error("rational function is not constant");
    return num_.coeff(0);
}

Q RatFunc::operator()(const Q& x) const {
    Q d = den_(x);
    if (fockalg::is_zero(d)) throw std::domain_error("evaluation at a pole");
    return num_(x) / d;
}

RatFunc RatFunc::substitute(const Poly& g) const { return RatFunc(num_.compose(g), den_.compose(g)); }

RatFunc& RatFunc::operator+=(const RatFunc& o) {
    if (o.num_.is_zero()) return *this;
    if (den_ == o.den_) {
        num_ += o.num_;
        if (!den_.is_constant()) normalize();
        return *this;
    }
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
    if (num_.is_zero()) return *this;
    if (o.num_.is_zero()) return *this = RatFunc();
    if (den_.is_constant() && o.den_.is_constant()) {
        num_ *= o.num_;
        return *this;
    }
    num_ = num_ * o.num_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
    if (o.num_.is_zero()) throw std::domain_error("rational function division by zero");
    return *this *= RatFunc(o.den_, o.num_);
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

std::string RatFunc::str(const std::string& var) const {
    if (den_.is_constant()) return num_.str(var);
    return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

std::vector<Q> expand_at_infinity(const RatFunc& f, int K) {
    const Poly& n = f.num();
    const Poly& d = f.den();
    std::vector<Q> out(K + 1, Q(0));
    if (n.is_zero()) return out;
    int dn = n.degree(), dd = d.degree();
    if (dn > dd) throw std::domain_error("expansion at infinity has positive powers");
    // f = w^(dd-dn) N(w)/D(w), w = 1/u
    int shift = dd - dn;
    std::vector<Q> N(K + 1, Q(0)), D(K + 1, Q(0)), S(K + 1, Q(0));
    for (int i = 0; i <= K; ++i) {
        N[i] = n.coeff(dn - i);
        D[i] = d.coeff(dd - i);
    }
    for (int i = 0; i <= K; ++i) {
        Q acc = N[i];
        for (int j = 1; j <= i; ++j) acc -= D[j] * S[i - j];
        S[i] = acc / D[0];
    }
    for (int i = 0; i + shift <= K; ++i) out[i + shift] = S[i];
    return out;
}

Poly newton_interpolate(const std::vector<Q>& xs, const std::vector<Q>& ys) {
    size_t n = xs.size();
    std::vector<Q> dd = ys;
    for (size_t j = 1; j < n; ++j)
        for (size_t i = n - 1; i >= j; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
            if (i == j) break;
        }
    Poly r;
    for (size_t i = n; i-- > 0;) {
        r = r * (Poly::var() - Poly(xs[i])) + Poly(dd[i]);
    }
    return r;
}

std::optional<RatFunc> rational_reconstruct(const std::vector<Q>& xs, const std::vector<Q>& ys,
                                            int num_bound, int den_bound) {
    Poly p = newton_interpolate(xs, ys);
    Poly m(Q(1));
    for (const auto& x : xs) m *= Poly::var() - Poly(x);
    // extended Euclid on (m, p): r_i = s_i m + t_i p
    Poly r0 = m, r1 = p, t0, t1(Q(1));
    while (r1.degree() > num_bound) {
        Poly q, r;
        divmod(r0, r1, q, r);
        Poly t = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r);
        t0 = std::move(t1);
        t1 = std::move(t);
    }
    if (t1.is_zero() || t1.degree() > den_bound) return std::nullopt;
    for (size_t i = 0; i < xs.size(); ++i)
        if (fockalg::is_zero(t1(xs[i]))) return std::nullopt;
    return RatFunc(r1, t1);
}

// ---------------- Params ----------------

namespace {

constexpr int LATTICE_BOUND = 4 * DEGREE_CAP;

bool on_lattice(const Q& x, const Q& t1, const Q& t2, int bound) {
    for (int m = -bound; m <= bound; ++m)
        for (int n = -bound; n <= bound; ++n)
            if (x == m * t1 + n * t2) return true;
    return false;
}

bool t_lattice_degenerate(const Q& t1, const Q& t2) {
    // m t1 + n t2 = 0 with (m, n) != 0 means t1/t2 = -n/m
    Q ratio = t1 / t2;
    Z num = abs(ratio.get_num()), den = ratio.get_den();
    return num <= LATTICE_BOUND && den <= LATTICE_BOUND;
}

}  // namespace

std::optional<std::string> violated_invariant(const Params& p) {
    if (is_zero(p.t1 * p.t2)) return "t1*t2 != 0";
    if (is_zero(p.t1 + p.t2)) return "t1 + t2 != 0";
    if (t_lattice_degenerate(p.t1, p.t2)) return "m*t1 + n*t2 != 0 for small (m, n) != 0";
    for (int i = 0; i < p.rank(); ++i)
        for (int j = i + 1; j < p.rank(); ++j)
            if (on_lattice(p.a[i] - p.a[j], p.t1, p.t2, DEGREE_CAP))
                return "a_i - a_j off the t-lattice (i=" + std::to_string(i + 1) +
                       ", j=" + std::to_string(j + 1) + ")";
    Q pw = 1;
    for (int n = 1; n <= DEGREE_CAP; ++n) {
        pw *= p.q;
        if (pw == 1) return "q^n != 1 for n <= DEGREE_CAP";
    }
    if (is_zero(p.q)) return "q != 0";
    return std::nullopt;
}

struct RationalSampler::Impl {
    std::mt19937_64 rng;
};

RationalSampler::RationalSampler(std::uint64_t seed) : impl_(new Impl{std::mt19937_64(seed)}) {}
RationalSampler::~RationalSampler() { delete impl_; }

int RationalSampler::next_int(int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    return d(impl_->rng);
}

Q RationalSampler::next() {
    int n = next_int(-97, 97);
    int d = next_int(1, 13);
    Q x(n, d);
    x.canonicalize();
    return x;
}

Q RationalSampler::next_nonzero() {
    for (;;) {
        Q x = next();
        if (!is_zero(x)) return x;
    }
}

Params sample_params(std::uint64_t seed, int r) {
    if (r < 1) throw std::invalid_argument("rank must be positive");
    RationalSampler s(seed);
    Params p;
    p.seed = seed;
    int attempts = 0;
    auto bump = [&] {
        if (++attempts > 10000) throw std::logic_error("sample_params: resampling limit reached");
    };
    for (;;) {
        p.t1 = s.next();
        p.t2 = s.next();
        if (!is_zero(p.t1 * p.t2) && !is_zero(p.t1 + p.t2) && !t_lattice_degenerate(p.t1, p.t2))
            break;
        bump();
    }
    p.a.clear();
    for (int i = 0; i < r; ++i) {
        for (;;) {
            Q x = s.next();
            bool ok = true;
            for (const auto& y : p.a)
                if (on_lattice(x - y, p.t1, p.t2, DEGREE_CAP)) ok = false;
            if (ok) {
                p.a.push_back(x);
                break;
            }
            bump();
        }
    }
    for (;;) {
        p.q = s.next();
        Params probe = p;
        if (!violated_invariant(probe)) break;
        bump();
    }
    return p;
}

}  // namespace fockalg
