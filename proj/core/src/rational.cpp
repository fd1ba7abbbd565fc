#include "bn/rational.hpp"

#include <ostream>

#include "bn/errors.hpp"

namespace bn {

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw UsageError("Rational: division by zero");
    q_ /= o.q_;
    return *this;
}

Rational Rational::operator-() const {
    Rational r;
    r.q_ = -q_;
    return r;
}

Rational Rational::abs() const {
    Rational r;
    r.q_ = ::abs(q_);
    return r;
}

Rational Rational::inverse() const {
    if (is_zero()) throw UsageError("Rational: inverse of zero");
    Rational r;
    r.q_ = 1 / q_;
    return r;
}

Rational Rational::pow(unsigned long e) const {
    Rational base = *this, acc = 1;
    while (e) {
        if (e & 1) acc *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return acc;
}

std::string Rational::str() const {
    return q_.get_str();
}

std::string Rational::str_num_den() const {
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

Integer factorial(unsigned long n) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

Integer binomial(const Integer& n, unsigned long k) {
    Integer b;
    mpz_bin_ui(b.get_mpz_t(), n.get_mpz_t(), k);
    return b;
}

Integer pow2(unsigned long e) {
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, e);
    return p;
}

}  // namespace bn
