#include "tlj/laurent.hpp"

#include <sstream>

namespace tlj {

static const mpz_class kZero = 0;

bool LaurentPoly::is_one() const {
    return coeffs_.size() == 1 && coeffs_.begin()->first == 0 && coeffs_.begin()->second == 1;
}

const mpz_class& LaurentPoly::coeff(long exp) const {
    auto it = coeffs_.find(exp);
    return it == coeffs_.end() ? kZero : it->second;
}

void LaurentPoly::set(long exp, mpz_class value) {
    if (value == 0)
        coeffs_.erase(exp);
    else
        coeffs_[exp] = std::move(value);
}

long LaurentPoly::min_exp() const {
    if (is_zero()) throw domain_error("min_exp of zero polynomial");
    return coeffs_.begin()->first;
}

long LaurentPoly::max_exp() const {
    if (is_zero()) throw domain_error("max_exp of zero polynomial");
    return coeffs_.rbegin()->first;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : coeffs_) r.coeffs_.emplace(e, -c);
    return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.coeffs_) {
        auto it = r.coeffs_.find(e);
        if (it == r.coeffs_.end()) {
            r.coeffs_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) r.coeffs_.erase(it);
        }
    }
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.coeffs_) {
        auto it = r.coeffs_.find(e);
        if (it == r.coeffs_.end()) {
            r.coeffs_.emplace(e, -c);
        } else {
            it->second -= c;
            if (it->second == 0) r.coeffs_.erase(it);
        }
    }
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (const auto& [e1, c1] : coeffs_) {
        for (const auto& [e2, c2] : o.coeffs_) {
            long e = e1 + e2;
            auto it = r.coeffs_.find(e);
            if (it == r.coeffs_.end()) {
                mpz_class prod = c1 * c2;
                if (prod != 0) r.coeffs_.emplace(e, std::move(prod));
            } else {
                it->second += c1 * c2;
                if (it->second == 0) r.coeffs_.erase(it);
            }
        }
    }
    return r;
}

LaurentPoly LaurentPoly::shifted(long k) const {
    LaurentPoly r;
    for (const auto& [e, c] : coeffs_) r.coeffs_.emplace(e + k, c);
    return r;
}

mpz_class LaurentPoly::content() const {
    mpz_class g = 0;
    for (const auto& [e, c] : coeffs_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

mpq_class LaurentPoly::eval(const mpq_class& at) const {
    if (is_zero()) return mpq_class(0);
    long v = min_exp();
    // Horner on the ordinary part, highest exponent first.
    mpq_class acc = 0;
    long prev = max_exp() + 1;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        for (long k = it->first; k < prev - 1; ++k) acc *= at;
        acc *= at;
        acc += it->second;
        prev = it->first;
    }
    if (v != 0) {
        if (at == 0) throw eval_error("Laurent polynomial with negative exponents at q=0");
        mpq_class qv;
        mpz_pow_ui(qv.get_num_mpz_t(), at.get_num().get_mpz_t(), static_cast<unsigned long>(v > 0 ? v : -v));
        mpz_pow_ui(qv.get_den_mpz_t(), at.get_den().get_mpz_t(), static_cast<unsigned long>(v > 0 ? v : -v));
        qv.canonicalize();
        if (v < 0) qv = 1 / qv;
        acc *= qv;
    }
    acc.canonicalize();
    return acc;
}

std::string LaurentPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        const auto& [e, c] = *it;
        mpz_class a = c;
        if (first) {
            if (a < 0) { out << "-"; a = -a; }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (e == 0) {
            out << a.get_str();
        } else {
            if (a != 1) out << a.get_str() << "*";
            out << "q";
            if (e != 1) out << "^" << e;
        }
    }
    return out.str();
}

} // namespace tlj
