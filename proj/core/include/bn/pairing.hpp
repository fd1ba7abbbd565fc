#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "bn/linalg.hpp"
#include "bn/poly.hpp"

namespace bn::pairing {

/// Printed generators of the relation ideal I_g for g = 3 (zeta3, eta4,
/// eta5) and g = 4 (zeta4, zeta5, zeta6); homogeneous of weighted degrees
/// (3,4,5) resp. (4,5,6).
struct IdealPresentation {
    int g = 0;
    std::vector<std::string> names;
    std::vector<GradedPoly> generators;
};
const IdealPresentation& ideal_presentation(int g);

struct IdealExpression {
    std::vector<GradedPoly> coeffs;  // one per generator
    bool unique = false;
};

/// Normal forms and intersection pairings in Q[a,b,g]/I_g for g in {3,4},
/// by per-degree dense linear algebra (no Groebner machinery): in weighted
/// degree d the ideal's slice is the span of generator*monomial products,
/// and the quotient basis is the complement under RREF. The top weighted
/// degree 3g-3 is checked to be one-dimensional at construction.
class QuotientEngine {
public:
    explicit QuotientEngine(int g);

    int g() const { return g_; }
    long top_degree() const { return 3L * g_ - 3; }

    /// Coordinates of p's normal form on the quotient basis of its degree.
    std::vector<Rational> reduce(const GradedPoly& p) const;
    std::vector<Monomial> quotient_basis(long degree) const;
    bool in_ideal(const GradedPoly& p) const;

    /// Homogeneous coefficient polynomials realizing p = sum q_i * gen_i.
    /// Throws UsageError when p is not in the ideal. Free coordinates, if
    /// any, are pinned to zero and `unique` reports whether none existed.
    IdealExpression express_in_ideal(const GradedPoly& p) const;

    /// Coordinate in the (one-dimensional) top-degree quotient.
    Rational top_coordinate(const GradedPoly& p) const;

    /// Fixes the normalization scalar lambda by declaring the pairing of
    /// one reference class. Pairings are lambda * top_coordinate.
    void set_normalization(const GradedPoly& reference, const Rational& value);
    bool normalized() const { return normalized_; }

    Rational pair_monomial(long m, long n, long p) const;
    Rational evaluate(const GradedPoly& p) const;

private:
    struct DegreeData {
        std::vector<Monomial> monomials;      // canonical ascending
        std::vector<std::vector<Rational>> reducer;  // RREF rows of the ideal slice
        std::vector<std::size_t> pivot_cols;
        std::vector<std::size_t> basis_cols;
    };
    const DegreeData& slice(long degree) const;
    std::vector<Rational> coords_of(const GradedPoly& p, const DegreeData& dd) const;

    int g_;
    std::vector<DegreeData> slices_;  // degree 0..3g-3
    bool normalized_ = false;
    Rational lambda_;
};

/// Lemma-style residue of the intersection number (a^m b^n g^p) mod an odd
/// prime genus: -1 (returned as g-1) iff p = 0 and m in {g-1, 2g-2, 3g-3},
/// else 0. Requires m + 2n + 3p = 3g-3.
std::uint64_t lemma51_residue(long m, long n, long p, long g);

/// Pluggable evaluator of intersection numbers (a^m b^n g^p) at genus g.
class IntersectionEngine {
public:
    virtual ~IntersectionEngine() = default;
    virtual std::string name() const = 0;
    virtual bool available(long g) const = 0;
    virtual Rational pair(long m, long n, long p, long g) const = 0;
};

/// Hook for a closed-form engine valid at every genus. Ships unconfigured:
/// every query throws EngineNotConfiguredError until a formula
/// implementation is installed.
class ThaddeusEngine final : public IntersectionEngine {
public:
    std::string name() const override { return "thaddeus"; }
    bool available(long) const override;
    Rational pair(long m, long n, long p, long g) const override;
};

/// Adapter exposing a normalized QuotientEngine through the same interface.
class QuotientIntersectionEngine final : public IntersectionEngine {
public:
    explicit QuotientIntersectionEngine(std::shared_ptr<const QuotientEngine> engine);
    std::string name() const override { return "quotient"; }
    bool available(long g) const override;
    Rational pair(long m, long n, long p, long g) const override;

private:
    std::shared_ptr<const QuotientEngine> engine_;
};

/// Sum of coeff * pairing over the monomials of a homogeneous class of
/// weighted degree 3g-3.
Rational evaluate_class(const GradedPoly& cls, long g, const IntersectionEngine& engine);

/// The g = 3 engine normalized by the declared reference datum: the
/// pairing of the top-dimensional class P_2 (r = 1) equals 1.
std::shared_ptr<const QuotientEngine> normalized_g3_engine();

}  // namespace bn::pairing
