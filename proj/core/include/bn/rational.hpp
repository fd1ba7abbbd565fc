#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace bn {

using Integer = mpz_class;

/// Exact arbitrary-precision rational. Always canonical: gcd(num, den) = 1
/// and den > 0. All arithmetic is exact; there is no rounding anywhere.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}  // NOLINT: implicit by design
    Rational(const Integer& n) : q_(n) {}
    Rational(long n, long d) : q_(n, d) { canonicalize(); }
    Rational(const Integer& n, const Integer& d) : q_(n, d) { canonicalize(); }

    Integer num() const { return q_.get_num(); }
    Integer den() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const;

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }

    Rational abs() const;
    Rational inverse() const;
    Rational pow(unsigned long e) const;

    /// Minimal form: "3", "-3/8". Used for standalone scalar output.
    std::string str() const;
    /// Strict form: always "num/den", e.g. "3/1". Used inside polynomial text.
    std::string str_num_den() const;

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    void canonicalize() { q_.canonicalize(); }
    mpq_class q_;
};

Integer factorial(unsigned long n);
Integer binomial(const Integer& n, unsigned long k);
Integer pow2(unsigned long e);

}  // namespace bn
