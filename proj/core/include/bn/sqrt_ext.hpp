#pragma once

#include <string>

#include "bn/poly.hpp"

namespace bn {

/// Ring extension by a formal square root: a designated variable s with the
/// reduction s^2 -> base. After reduce() every exponent of s is 0 or 1.
/// symmetrize(f) = f + f|_{s -> -s}, which cancels all odd s-terms; combined
/// with reduce() the result is s-free.
class SqrtExt {
public:
    SqrtExt(RingPtr ext_ring, std::string sqrt_var, std::string base_var);

    const RingPtr& ring() const { return ring_; }

    GradedPoly reduce(const GradedPoly& p) const;
    GradedPoly mul(const GradedPoly& x, const GradedPoly& y) const { return reduce(x * y); }
    GradedPoly pow(const GradedPoly& x, unsigned long e) const;
    GradedPoly symmetrize(const GradedPoly& p) const;
    bool s_free(const GradedPoly& p) const;
    /// Drops the s-variable from an s-free polynomial, landing in `target`.
    GradedPoly project(const GradedPoly& p, const RingPtr& target) const;

private:
    RingPtr ring_;
    int s_idx_;
    int base_idx_;
};

}  // namespace bn
