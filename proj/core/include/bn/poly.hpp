#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bn/rational.hpp"
#include "bn/ring.hpp"

namespace bn {

/// Exponent vector aligned with the ring's variable order. Entries are
/// non-negative; the abstract monomial stores no zero exponents, here they
/// are simply zero slots of a dense vector.
struct Monomial {
    std::vector<int32_t> e;

    Monomial() = default;
    explicit Monomial(std::size_t nvars) : e(nvars, 0) {}
    explicit Monomial(std::vector<int32_t> exps) : e(std::move(exps)) {}

    int32_t exp(std::size_t i) const { return e[i]; }
    bool is_constant() const;
    bool divides(const Monomial& m) const;
    Monomial operator*(const Monomial& m) const;
    /// Componentwise difference; caller guarantees divisibility.
    Monomial operator/(const Monomial& m) const;

    friend bool operator==(const Monomial& x, const Monomial& y) { return x.e == y.e; }
};

long weighted_degree(const Monomial& m, const Ring& ring);

/// Canonical monomial order: graded lexicographic on exponent vectors
/// (weighted degree first, then lex). Polynomial equality is structural
/// equality of term maps under this order, and text serialization iterates
/// it in descending order, so equal polynomials print identically.
struct MonoCmp {
    const Ring* ring = nullptr;
    bool operator()(const Monomial& x, const Monomial& y) const;
};

/// Sparse exact polynomial over a weighted ring. Immutable by convention:
/// operations return new values; no zero coefficients are ever stored.
class GradedPoly {
public:
    using TermMap = std::map<Monomial, Rational, MonoCmp>;

    explicit GradedPoly(RingPtr ring);
    static GradedPoly zero(RingPtr ring) { return GradedPoly(std::move(ring)); }
    static GradedPoly constant(RingPtr ring, Rational c);
    static GradedPoly var(RingPtr ring, std::string_view name, int32_t exp = 1);
    static GradedPoly term(RingPtr ring, Monomial m, Rational c);

    const RingPtr& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    Rational coeff(const Monomial& m) const;
    Rational coeff(std::vector<int32_t> exps) const { return coeff(Monomial(std::move(exps))); }
    /// The constant value of a constant polynomial (0 if zero).
    Rational const_value() const;

    /// Largest monomial in the canonical order, with its coefficient.
    std::pair<Monomial, Rational> leading_term() const;

    /// Max weighted degree over terms; -1 for the zero polynomial.
    long weighted_deg() const;
    /// Degree in a single variable.
    long degree_in(std::string_view name) const;
    bool is_homogeneous() const;
    /// Weighted degree when homogeneous and non-zero, otherwise nullopt.
    std::optional<long> homogeneous_degree() const;
    bool depends_on(std::string_view name) const;

    GradedPoly operator-() const;
    GradedPoly& operator+=(const GradedPoly& o);
    GradedPoly& operator-=(const GradedPoly& o);
    friend GradedPoly operator+(GradedPoly a, const GradedPoly& b) { return a += b; }
    friend GradedPoly operator-(GradedPoly a, const GradedPoly& b) { return a -= b; }
    friend GradedPoly operator*(const GradedPoly& a, const GradedPoly& b);
    friend GradedPoly operator*(const GradedPoly& a, const Rational& s);
    friend GradedPoly operator*(const Rational& s, const GradedPoly& a) { return a * s; }
    GradedPoly pow(unsigned long e) const;

    friend bool operator==(const GradedPoly& a, const GradedPoly& b);
    friend bool operator!=(const GradedPoly& a, const GradedPoly& b) { return !(a == b); }

    /// Substitution homomorphism. Assigned variables are replaced by values
    /// living in `target`; unassigned variables pass through and must exist
    /// in `target` by name. With target == ring() this is an endomorphism.
    GradedPoly specialize(const std::map<std::string, GradedPoly>& assign,
                          const RingPtr& target) const;
    /// Rational-valued substitution staying in the same ring.
    GradedPoly specialize(const std::map<std::string, Rational>& assign) const;

    /// Canonical text form: terms in descending canonical order, each as
    /// num/den*v^i*..., joined by " + ". The zero polynomial prints "0/1".
    std::string to_text() const;

    void add_term(const Monomial& m, const Rational& c);

private:
    RingPtr ring_;
    TermMap terms_;
};

/// Single-divisor polynomial division: f = q*d + r where no term of r is
/// divisible by the leading monomial of d.
struct DivRem {
    GradedPoly quotient;
    GradedPoly remainder;
};
DivRem divrem(const GradedPoly& f, const GradedPoly& d);

/// Exact division; throws InternalCheckError when a remainder survives.
GradedPoly div_exact(const GradedPoly& f, const GradedPoly& d);

/// Coefficients M_j of b^j a^(K-2j) in a homogeneous weighted-degree-K
/// polynomial of the canonical ring, j = 0..floor(K/2). Terms containing
/// the weight-3 variable are ignored.
std::vector<Rational> extract_m_coeffs(const GradedPoly& w, long K);

}  // namespace bn
