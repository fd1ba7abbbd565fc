#include "bn/sqrt_ext.hpp"

#include "bn/errors.hpp"

namespace bn {

SqrtExt::SqrtExt(RingPtr ext_ring, std::string sqrt_var, std::string base_var)
    : ring_(std::move(ext_ring)),
      s_idx_(ring_->index_of(sqrt_var)),
      base_idx_(ring_->index_of(base_var)) {
    if (s_idx_ < 0 || base_idx_ < 0)
        throw UsageError("SqrtExt: extension ring lacks " + sqrt_var + " or " + base_var);
}

GradedPoly SqrtExt::reduce(const GradedPoly& p) const {
    if (!same_ring(p.ring(), ring_)) throw RingMismatchError("SqrtExt: wrong ring");
    GradedPoly out(ring_);
    for (const auto& [m, c] : p.terms()) {
        int32_t se = m.e[s_idx_];
        if (se < 2) {
            out.add_term(m, c);
            continue;
        }
        Monomial r = m;
        r.e[s_idx_] = se & 1;
        r.e[base_idx_] += se / 2;
        out.add_term(r, c);
    }
    return out;
}

GradedPoly SqrtExt::pow(const GradedPoly& x, unsigned long e) const {
    GradedPoly acc = GradedPoly::constant(ring_, 1);
    GradedPoly base = x;
    while (e) {
        if (e & 1) acc = mul(acc, base);
        e >>= 1;
        if (e) base = mul(base, base);
    }
    return acc;
}

GradedPoly SqrtExt::symmetrize(const GradedPoly& p) const {
    GradedPoly out(ring_);
    for (const auto& [m, c] : p.terms()) {
        if (m.e[s_idx_] % 2 == 0)
            out.add_term(m, c + c);
        // odd s-terms cancel against the s -> -s partner
    }
    return reduce(out);
}

bool SqrtExt::s_free(const GradedPoly& p) const { return !p.depends_on(ring_->vars[s_idx_]); }

GradedPoly SqrtExt::project(const GradedPoly& p, const RingPtr& target) const {
    if (!s_free(p))
        throw InternalCheckError("SqrtExt: square-root contamination in a result expected s-free");
    GradedPoly out(target);
    for (const auto& [m, c] : p.terms()) {
        Monomial t(target->size());
        for (std::size_t i = 0; i < ring_->size(); ++i) {
            if (m.e[i] == 0) continue;
            int idx = target->index_of(ring_->vars[i]);
            if (idx < 0) throw RingMismatchError("SqrtExt: variable absent from target ring");
            t.e[idx] = m.e[i];
        }
        out.add_term(t, c);
    }
    return out;
}

}  // namespace bn
