#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bn {

/// A polynomial ring descriptor: an ordered set of variables with integer
/// weights. Weighted degree of a monomial is the weight-dot-exponent sum.
/// The canonical cohomology ring uses a, b, g with weights 1, 2, 3
/// (cohomological degrees 2, 4, 6). Auxiliary rings (z, a, b, s, ...) are
/// further instances of the same type.
struct Ring {
    std::vector<std::string> vars;
    std::vector<int> weights;

    std::size_t size() const { return vars.size(); }
    /// Index of a variable by print name, -1 if absent.
    int index_of(std::string_view name) const;

    friend bool operator==(const Ring& x, const Ring& y) {
        return x.vars == y.vars && x.weights == y.weights;
    }
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::pair<std::string, int>> vars_with_weights);

/// Two rings are compatible when structurally equal (same names, weights,
/// order), regardless of pointer identity.
bool same_ring(const RingPtr& x, const RingPtr& y);

/// The canonical ring Q[a, b, g], weights (1, 2, 3).
const RingPtr& abg_ring();

}  // namespace bn
