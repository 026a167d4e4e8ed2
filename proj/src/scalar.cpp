#include "tlj/scalar.hpp"

#include <cmath>
#include <deque>
#include <mutex>
#include <sstream>

namespace tlj {

namespace {

// Ordinary polynomials as coefficient vectors, index = exponent, back() != 0.
using Poly = std::vector<mpz_class>;

void poly_trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly to_poly(const LaurentPoly& l, long shift) {
    // l * q^shift must be an ordinary polynomial.
    Poly p;
    if (l.is_zero()) return p;
    p.resize(static_cast<std::size_t>(l.max_exp() + shift) + 1);
    for (const auto& [e, c] : l.terms()) p[static_cast<std::size_t>(e + shift)] = c;
    return p;
}

LaurentPoly from_poly(const Poly& p, long shift) {
    LaurentPoly l;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] != 0) l.set(static_cast<long>(i) + shift, p[i]);
    return l;
}

mpz_class poly_content(const Poly& p) {
    mpz_class g = 0;
    for (const auto& c : p) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

void poly_div_int(Poly& p, const mpz_class& d) {
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
}

Poly primitive_part(Poly p) {
    mpz_class c = poly_content(p);
    if (c > 1) poly_div_int(p, c);
    if (!p.empty() && p.back() < 0)
        for (auto& x : p) x = -x;
    return p;
}

// Pseudo-remainder of a by b (deg a >= deg b, b nonzero).
Poly pseudo_rem(Poly a, const Poly& b) {
    const mpz_class& lb = b.back();
    while (a.size() >= b.size()) {
        poly_trim(a);
        if (a.size() < b.size()) break;
        mpz_class la = a.back();
        std::size_t off = a.size() - b.size();
        for (auto& c : a) c *= lb;
        for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= la * b[i];
        poly_trim(a);
    }
    return a;
}

// Primitive gcd in Z[q] via the primitive PRS; result has positive leading
// coefficient, or is empty when both inputs are zero.
Poly poly_gcd_primitive(Poly a, Poly b) {
    poly_trim(a);
    poly_trim(b);
    if (a.empty()) return primitive_part(std::move(b));
    if (b.empty()) return primitive_part(std::move(a));
    a = primitive_part(std::move(a));
    b = primitive_part(std::move(b));
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        Poly r = pseudo_rem(a, b);
        a = std::move(b);
        b = primitive_part(std::move(r));
    }
    return a;
}

// Exact division in Z[q]; requires divisibility.
Poly poly_div_exact(const Poly& a, const Poly& b) {
    if (b.empty()) throw domain_error("polynomial division by zero");
    Poly rem = a;
    poly_trim(rem);
    Poly quot(rem.size() >= b.size() ? rem.size() - b.size() + 1 : 0);
    while (rem.size() >= b.size() && !rem.empty()) {
        mpz_class c;
        mpz_divexact(c.get_mpz_t(), rem.back().get_mpz_t(), b.back().get_mpz_t());
        std::size_t off = rem.size() - b.size();
        quot[off] = c;
        for (std::size_t i = 0; i < b.size(); ++i) rem[off + i] -= c * b[i];
        poly_trim(rem);
    }
    if (!rem.empty()) throw domain_error("inexact polynomial division");
    return quot;
}

// gcd of two Laurent polynomials, ignoring q-power units: primitive
// polynomial gcd times the gcd of integer contents.
LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    Poly pa = to_poly(a, -a.min_exp());
    Poly pb = to_poly(b, -b.min_exp());
    Poly g = poly_gcd_primitive(pa, pb);
    mpz_class c;
    mpz_gcd(c.get_mpz_t(), poly_content(pa).get_mpz_t(), poly_content(pb).get_mpz_t());
    for (auto& x : g) x *= c;
    return from_poly(g, 0);
}

// Exact division of Laurent a by Laurent g (divisibility up to q-powers assumed).
LaurentPoly laurent_div_exact(const LaurentPoly& a, const LaurentPoly& g) {
    if (a.is_zero()) return LaurentPoly();
    Poly pa = to_poly(a, -a.min_exp());
    Poly pg = to_poly(g, -g.min_exp());
    Poly q = poly_div_exact(pa, pg);
    return from_poly(q, a.min_exp() - g.min_exp());
}

} // namespace

Scalar::Scalar(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
    canonicalize();
}

Scalar Scalar::rational(const mpz_class& a, const mpz_class& b) {
    return Scalar(LaurentPoly(a), LaurentPoly(b));
}

void Scalar::canonicalize() {
    if (den_.is_zero()) throw domain_error("division by zero scalar");
    if (num_.is_zero()) {
        den_ = LaurentPoly(1);
        return;
    }
    // Shift the denominator to an ordinary polynomial with nonzero constant term.
    long dshift = -den_.min_exp();
    if (dshift != 0) {
        den_ = den_.shifted(dshift);
        num_ = num_.shifted(dshift);
    }
    if (!den_.is_one()) {
        long nval = num_.min_exp();
        Poly pn = to_poly(num_, -nval);
        Poly pd = to_poly(den_, 0);
        Poly g = poly_gcd_primitive(pn, pd);
        if (g.size() > 1) {
            pn = poly_div_exact(pn, g);
            pd = poly_div_exact(pd, g);
        }
        mpz_class c;
        mpz_gcd(c.get_mpz_t(), poly_content(pn).get_mpz_t(), poly_content(pd).get_mpz_t());
        if (c > 1) {
            poly_div_int(pn, c);
            poly_div_int(pd, c);
        }
        num_ = from_poly(pn, nval);
        den_ = from_poly(pd, 0);
    }
    if (den_.coeff(den_.min_exp()) < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    r.num_ = -r.num_;
    return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (den_ == o.den_) return Scalar(num_ + o.num_, den_);
    LaurentPoly g = laurent_gcd(den_, o.den_);
    if (g.is_one())
        return Scalar(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    LaurentPoly b1 = laurent_div_exact(den_, g);
    LaurentPoly d1 = laurent_div_exact(o.den_, g);
    return Scalar(num_ * d1 + o.num_ * b1, den_ * d1);
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    if (is_zero() || o.is_zero()) return Scalar();
    // Cross-cancel before multiplying to keep degrees down.
    LaurentPoly g1 = laurent_gcd(num_, o.den_);
    LaurentPoly g2 = laurent_gcd(o.num_, den_);
    LaurentPoly n1 = g1.is_one() ? num_ : laurent_div_exact(num_, g1);
    LaurentPoly d2 = g1.is_one() ? o.den_ : laurent_div_exact(o.den_, g1);
    LaurentPoly n2 = g2.is_one() ? o.num_ : laurent_div_exact(o.num_, g2);
    LaurentPoly d1 = g2.is_one() ? den_ : laurent_div_exact(den_, g2);
    return Scalar(n1 * n2, d1 * d2);
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::inverse() const {
    if (is_zero()) throw domain_error("inverse of zero scalar");
    return Scalar(den_, num_);
}

Scalar Scalar::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar r(1);
    Scalar base = *this;
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

bool Scalar::operator<(const Scalar& o) const {
    if (num_ != o.num_) return num_ < o.num_;
    return den_ < o.den_;
}

mpq_class Scalar::eval_exact(const mpq_class& at) const {
    mpq_class d = den_.eval(at);
    if (d == 0) throw eval_error("pole at evaluation point: denominator " + den_.str() + " vanishes");
    mpq_class n = num_.eval(at);
    mpq_class r = n / d;
    r.canonicalize();
    return r;
}

double Scalar::eval(const NumericParams& p) const {
    return eval_exact(mpq_class(p.q)).get_d();
}

std::string Scalar::str() const {
    if (is_laurent()) return num_.str();
    std::string n = num_.str();
    std::string d = den_.str();
    if (num_.term_count() > 1) n = "(" + n + ")";
    if (den_.term_count() > 1) d = "(" + d + ")";
    return n + "/" + d;
}

TPoly TPoly::monomial(int exp, Scalar coeff) {
    TPoly r;
    if (!coeff.is_zero()) {
        r.coeffs_.resize(static_cast<std::size_t>(exp) + 1);
        r.coeffs_[static_cast<std::size_t>(exp)] = std::move(coeff);
    }
    return r;
}

void TPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const Scalar& TPoly::coeff(int exp) const {
    static const Scalar zero;
    if (exp < 0 || exp >= static_cast<int>(coeffs_.size())) return zero;
    return coeffs_[static_cast<std::size_t>(exp)];
}

TPoly TPoly::operator-() const {
    TPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

TPoly TPoly::operator+(const TPoly& o) const {
    TPoly r = *this;
    if (o.coeffs_.size() > r.coeffs_.size()) r.coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) r.coeffs_[i] += o.coeffs_[i];
    r.trim();
    return r;
}

TPoly TPoly::operator-(const TPoly& o) const { return *this + (-o); }

TPoly TPoly::operator*(const TPoly& o) const {
    if (is_zero() || o.is_zero()) return TPoly();
    TPoly r;
    r.coeffs_.resize(coeffs_.size() + o.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            if (!o.coeffs_[j].is_zero()) r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    r.trim();
    return r;
}

TPoly TPoly::operator*(const Scalar& s) const {
    TPoly r = *this;
    for (auto& c : r.coeffs_) c *= s;
    r.trim();
    return r;
}

Scalar TPoly::subst_t(const Scalar& value) const {
    Scalar acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * value + *it;
    return acc;
}

mpq_class TPoly::eval_exact(const mpq_class& q_at, const mpq_class& t_at) const {
    mpq_class acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= t_at;
        acc += it->eval_exact(q_at);
    }
    acc.canonicalize();
    return acc;
}

double TPoly::eval(const NumericParams& p) const {
    return eval_exact(mpq_class(p.q), mpq_class(p.t)).get_d();
}

std::string TPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int e = degree(); e >= 0; --e) {
        const Scalar& c = coeffs_[static_cast<std::size_t>(e)];
        if (c.is_zero()) continue;
        std::string cs = c.str();
        bool neg = !cs.empty() && cs[0] == '-' && cs.find(' ') == std::string::npos &&
                   cs.find('/') == std::string::npos;
        if (first) {
            first = false;
        } else if (neg) {
            out << " - ";
            cs = cs.substr(1);
        } else {
            out << " + ";
        }
        if (e == 0) {
            out << cs;
        } else {
            if (cs != "1") {
                if (cs.find(' ') != std::string::npos || cs.find('/') != std::string::npos)
                    out << "(" << cs << ")*";
                else
                    out << cs << "*";
            }
            out << "t";
            if (e != 1) out << "^" << e;
        }
    }
    return out.str();
}

NumericParams NumericParams::make(double delta, double t) {
    if (!(delta >= 2.0)) throw domain_error("delta must be >= 2");
    if (!(t > 0.0 && t <= delta)) throw domain_error("t must satisfy 0 < t <= delta");
    NumericParams p;
    p.delta = delta;
    p.t = t;
    p.q = (delta + std::sqrt(delta * delta - 4.0)) / 2.0;
    if (std::abs(p.q + 1.0 / p.q - delta) > 1e-12)
        throw domain_error("q + 1/q does not reproduce delta to 1e-12");
    return p;
}

NumericParams NumericParams::make(double delta) { return make(delta, delta); }

namespace {
std::mutex qint_mutex;
// deques: growth must not invalidate references handed out earlier
std::deque<Scalar> qint_cache;   // qint_cache[m] = [m]_q
std::deque<TPoly> qint_t_cache;  // qint_t_cache[m] = [m] in t
} // namespace

const Scalar& qint(int m) {
    if (m <= 0) throw domain_error("qint requires m >= 1");
    std::lock_guard<std::mutex> lock(qint_mutex);
    if (qint_cache.empty()) {
        qint_cache.emplace_back(0);                                          // [0] = 0
        qint_cache.emplace_back(1);                                          // [1] = 1
        qint_cache.emplace_back(LaurentPoly::q() + LaurentPoly::monomial(-1, 1)); // [2] = q + 1/q
    }
    while (static_cast<int>(qint_cache.size()) <= m) {
        std::size_t k = qint_cache.size() - 1;
        qint_cache.push_back(qint_cache[2] * qint_cache[k] - qint_cache[k - 1]);
    }
    return qint_cache[static_cast<std::size_t>(m)];
}

const TPoly& qint_t(int m) {
    if (m <= 0) throw domain_error("qint_t requires m >= 1");
    std::lock_guard<std::mutex> lock(qint_mutex);
    if (qint_t_cache.empty()) {
        qint_t_cache.emplace_back();          // [0] = 0
        qint_t_cache.push_back(TPoly(1));     // [1] = 1
        qint_t_cache.push_back(TPoly::t());   // [2] = t
    }
    while (static_cast<int>(qint_t_cache.size()) <= m) {
        std::size_t k = qint_t_cache.size() - 1;
        qint_t_cache.push_back(TPoly::t() * qint_t_cache[k] - qint_t_cache[k - 1]);
    }
    return qint_t_cache[static_cast<std::size_t>(m)];
}

} // namespace tlj
