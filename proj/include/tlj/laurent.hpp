#pragma once

#include <gmpxx.h>

#include <map>
#include <string>

#include "tlj/errors.hpp"

namespace tlj {

/// Laurent polynomial in the formal variable q with arbitrary-precision
/// integer coefficients. Exponents may be negative; zero coefficients are
/// never stored, so equality is map equality.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(long constant) { set(0, mpz_class(constant)); }
    explicit LaurentPoly(const mpz_class& constant) { set(0, constant); }

    static LaurentPoly monomial(long exp, mpz_class coeff) {
        LaurentPoly p;
        p.set(exp, std::move(coeff));
        return p;
    }
    /// The variable q itself.
    static LaurentPoly q() { return monomial(1, 1); }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const;

    /// Coefficient of q^exp (zero if absent).
    const mpz_class& coeff(long exp) const;
    void set(long exp, mpz_class value);

    long min_exp() const; ///< lowest exponent; requires nonzero
    long max_exp() const; ///< highest exponent; requires nonzero
    std::size_t term_count() const { return coeffs_.size(); }
    const std::map<long, mpz_class>& terms() const { return coeffs_; }

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;

    bool operator==(const LaurentPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }
    bool operator<(const LaurentPoly& o) const { return coeffs_ < o.coeffs_; }

    /// Multiply by q^k.
    LaurentPoly shifted(long k) const;

    /// gcd of all integer coefficients, nonnegative; 0 for the zero polynomial.
    mpz_class content() const;

    /// Exact value at a rational point (q ≠ 0 required if negative exponents occur).
    mpq_class eval(const mpq_class& at) const;

    std::string str() const; ///< human-readable, descending powers of q

private:
    std::map<long, mpz_class> coeffs_;
};

} // namespace tlj
