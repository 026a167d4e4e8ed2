#pragma once

#include <string>
#include <vector>

#include "tlj/laurent.hpp"

namespace tlj {

/// Numeric evaluation point. `delta` must be >= 2 (the generic TL algebra is
/// not semisimple below 2 and that range is out of scope); `q` is the root
/// >= 1 of q + 1/q = delta.
struct NumericParams {
    double delta = 2.5;
    double t = 2.0;
    double q = 2.0;

    static NumericParams make(double delta, double t);
    static NumericParams make(double delta); ///< t defaults to delta
};

/// Element of the field of rational functions in q with integer coefficients.
/// Kept in canonical form: numerator/denominator coprime in Z[q] with coprime
/// integer contents, denominator an ordinary polynomial with positive nonzero
/// constant term, zero represented as 0/1. Equality is representation equality.
class Scalar {
public:
    Scalar() : num_(), den_(1) {}
    Scalar(long n) : num_(n), den_(1) {}
    explicit Scalar(const mpz_class& n) : num_(n), den_(1) {}
    Scalar(LaurentPoly num, LaurentPoly den);
    explicit Scalar(LaurentPoly num) : num_(std::move(num)), den_(1) {}

    static Scalar q() { return Scalar(LaurentPoly::q()); }
    /// a/b as a constant.
    static Scalar rational(const mpz_class& a, const mpz_class& b);

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_laurent() const { return den_.is_one(); }

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    Scalar inverse() const;
    Scalar pow(long e) const;

    bool operator==(const Scalar& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    bool operator<(const Scalar& o) const; ///< arbitrary total order for map keys

    /// Exact value at a rational point. Throws eval_error at a pole, naming
    /// the vanishing denominator.
    mpq_class eval_exact(const mpq_class& at) const;
    double eval(const NumericParams& p) const;

    std::string str() const;

private:
    LaurentPoly num_;
    LaurentPoly den_;
    void canonicalize();
};

/// Polynomial in the formal variable t with Scalar coefficients
/// (coefficient index = power of t). Trailing zeros are trimmed.
class TPoly {
public:
    TPoly() = default;
    TPoly(long constant) { coeffs_.emplace_back(constant); trim(); }
    explicit TPoly(Scalar constant) { coeffs_.push_back(std::move(constant)); trim(); }
    explicit TPoly(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static TPoly t() { return monomial(1, Scalar(1)); }
    static TPoly monomial(int exp, Scalar coeff);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; } ///< -1 for zero
    const Scalar& coeff(int exp) const;
    const std::vector<Scalar>& coeffs() const { return coeffs_; }

    TPoly operator-() const;
    TPoly operator+(const TPoly& o) const;
    TPoly operator-(const TPoly& o) const;
    TPoly operator*(const TPoly& o) const;
    TPoly operator*(const Scalar& s) const;
    TPoly& operator+=(const TPoly& o) { return *this = *this + o; }
    TPoly& operator-=(const TPoly& o) { return *this = *this - o; }

    bool operator==(const TPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const TPoly& o) const { return !(*this == o); }

    /// Substitute a Scalar for t (used for the t = delta degenerations).
    Scalar subst_t(const Scalar& value) const;

    mpq_class eval_exact(const mpq_class& q_at, const mpq_class& t_at) const;
    double eval(const NumericParams& p) const;

    std::string str() const;

private:
    std::vector<Scalar> coeffs_;
    void trim();
};

/// m-th quantum integer [m]_q = (q^m - q^-m)/(q - q^-1). Always reduces to a
/// Laurent polynomial. m <= 0 is a domain error.
const Scalar& qint(int m);

/// [m] as an integer polynomial in t, via P1 = 1, P2 = t, P_{m+1} = t P_m - P_{m-1}.
/// This is [m]_w for w + 1/w = t without ever representing w.
const TPoly& qint_t(int m);

/// Loop parameter delta = [2]_q = q + q^-1.
inline const Scalar& delta_scalar() { return qint(2); }

inline double eval(const Scalar& x, const NumericParams& p) { return x.eval(p); }
inline double eval(const TPoly& x, const NumericParams& p) { return x.eval(p); }

} // namespace tlj
