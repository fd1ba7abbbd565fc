#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bn/poly.hpp"

namespace bn {

/// Arithmetic in the prime field F_p, p an odd prime < 2^32.
class Fp {
public:
    explicit Fp(std::uint64_t p);

    std::uint64_t p() const { return p_; }
    std::uint64_t add(std::uint64_t x, std::uint64_t y) const { return (x + y) % p_; }
    std::uint64_t sub(std::uint64_t x, std::uint64_t y) const { return (x + p_ - y % p_) % p_; }
    std::uint64_t neg(std::uint64_t x) const { return x % p_ == 0 ? 0 : p_ - x % p_; }
    std::uint64_t mul(std::uint64_t x, std::uint64_t y) const;
    std::uint64_t pow(std::uint64_t x, std::uint64_t e) const;
    std::uint64_t inv(std::uint64_t x) const;

    /// Canonical representative of an Integer in [0, p).
    std::uint64_t reduce(const Integer& z) const;
    /// Reduction of a rational; throws InternalCheckError when the
    /// denominator is divisible by p.
    std::uint64_t reduce(const Rational& q) const;

private:
    std::uint64_t p_;
};

/// Coefficient-wise reduction of a GradedPoly into F_p.
struct ModPoly {
    std::uint64_t modulus = 0;
    RingPtr ring;
    std::map<Monomial, std::uint64_t, MonoCmp> terms;

    bool is_zero() const { return terms.empty(); }
    std::uint64_t coeff(const Monomial& m) const;
    std::string to_text() const;

    friend bool operator==(const ModPoly& a, const ModPoly& b);
};

/// Requires an odd prime modulus (verified) and all coefficient
/// denominators coprime to it.
ModPoly reduce_mod_p(const GradedPoly& p, std::uint64_t modulus);

/// Determinant of a square matrix over F_p (row-major), by elimination.
std::uint64_t det_mod_p(const Fp& f, std::vector<std::uint64_t> m, std::size_t n);

}  // namespace bn
