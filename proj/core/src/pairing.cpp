#include "bn/pairing.hpp"

#include <algorithm>

#include "bn/errors.hpp"
#include "bn/porteous.hpp"
#include "bn/primes.hpp"

namespace bn::pairing {

namespace {

GradedPoly parse_terms(std::vector<std::tuple<long, int, int, int>> terms) {
    GradedPoly p(abg_ring());
    for (auto& [coeff, ea, eb, eg] : terms)
        p.add_term(Monomial({ea, eb, eg}), Rational(coeff));
    return p;
}

IdealPresentation build_presentation(int g) {
    IdealPresentation pr;
    pr.g = g;
    if (g == 3) {
        pr.names = {"zeta3", "eta4", "eta5"};
        pr.generators = {
            parse_terms({{1, 3, 0, 0}, {5, 1, 1, 0}, {4, 0, 0, 1}}),
            parse_terms({{1, 4, 0, 0}, {2, 2, 1, 0}, {-3, 0, 2, 0}}),
            parse_terms({{2, 5, 0, 0}, {7, 3, 1, 0}}),
        };
    } else if (g == 4) {
        pr.names = {"zeta4", "zeta5", "zeta6"};
        pr.generators = {
            parse_terms({{1, 4, 0, 0}, {14, 2, 1, 0}, {9, 0, 2, 0}, {16, 1, 0, 1}}),
            parse_terms({{1, 5, 0, 0}, {30, 3, 1, 0}, {89, 1, 2, 0}, {40, 2, 0, 1}, {88, 0, 1, 1}}),
            parse_terms({{1, 6, 0, 0}, {55, 4, 1, 0}, {439, 2, 2, 0}, {225, 0, 3, 0},
                         {80, 3, 0, 1}, {688, 1, 1, 1}, {160, 0, 0, 2}}),
        };
    } else {
        throw UsageError("ideal_presentation: only g = 3 and g = 4 are presented");
    }
    return pr;
}

std::vector<Monomial> monomials_of_degree(long d) {
    std::vector<Monomial> out;
    for (int32_t eg = 0; 3 * eg <= d; ++eg)
        for (int32_t eb = 0; 3 * eg + 2 * eb <= d; ++eb)
            out.push_back(Monomial({static_cast<int32_t>(d - 3 * eg - 2 * eb), eb, eg}));
    std::sort(out.begin(), out.end(), MonoCmp{abg_ring().get()});
    return out;
}

}  // namespace

const IdealPresentation& ideal_presentation(int g) {
    static const IdealPresentation g3 = build_presentation(3);
    static const IdealPresentation g4 = build_presentation(4);
    if (g == 3) return g3;
    if (g == 4) return g4;
    throw UsageError("ideal_presentation: only g = 3 and g = 4 are presented");
}

QuotientEngine::QuotientEngine(int g) : g_(g) {
    const IdealPresentation& pr = ideal_presentation(g);
    for (std::size_t i = 0; i < pr.generators.size(); ++i) {
        auto deg = pr.generators[i].homogeneous_degree();
        if (!deg) throw InternalCheckError("QuotientEngine: generator not homogeneous");
    }

    slices_.resize(static_cast<std::size_t>(top_degree()) + 1);
    for (long d = 0; d <= top_degree(); ++d) {
        DegreeData& dd = slices_[static_cast<std::size_t>(d)];
        dd.monomials = monomials_of_degree(d);
        std::map<Monomial, std::size_t, MonoCmp> index{MonoCmp{abg_ring().get()}};
        for (std::size_t j = 0; j < dd.monomials.size(); ++j) index.emplace(dd.monomials[j], j);

        std::vector<std::vector<Rational>> rows;
        for (const GradedPoly& gen : pr.generators) {
            long dg = *gen.homogeneous_degree();
            if (dg > d) continue;
            for (const Monomial& mu : monomials_of_degree(d - dg)) {
                GradedPoly prod = gen * GradedPoly::term(abg_ring(), mu, 1);
                std::vector<Rational> row(dd.monomials.size(), Rational(0));
                for (const auto& [m, c] : prod.terms()) row[index.at(m)] = c;
                rows.push_back(std::move(row));
            }
        }
        if (!rows.empty()) {
            RatMatrix mat(rows.size(), dd.monomials.size());
            for (std::size_t i = 0; i < rows.size(); ++i)
                for (std::size_t j = 0; j < dd.monomials.size(); ++j) mat.at(i, j) = rows[i][j];
            dd.pivot_cols = mat.rref();
            dd.reducer.assign(dd.pivot_cols.size(), {});
            for (std::size_t i = 0; i < dd.pivot_cols.size(); ++i) {
                dd.reducer[i].resize(dd.monomials.size());
                for (std::size_t j = 0; j < dd.monomials.size(); ++j)
                    dd.reducer[i][j] = mat.at(i, j);
            }
        }
        std::size_t next_pivot = 0;
        for (std::size_t j = 0; j < dd.monomials.size(); ++j) {
            if (next_pivot < dd.pivot_cols.size() && dd.pivot_cols[next_pivot] == j)
                ++next_pivot;
            else
                dd.basis_cols.push_back(j);
        }
    }

    if (slices_.back().basis_cols.size() != 1)
        throw InternalCheckError(
            "QuotientEngine: top-degree quotient is not one-dimensional");
}

const QuotientEngine::DegreeData& QuotientEngine::slice(long degree) const {
    if (degree < 0 || degree > top_degree())
        throw UsageError("QuotientEngine: degree out of range");
    return slices_[static_cast<std::size_t>(degree)];
}

std::vector<Rational> QuotientEngine::coords_of(const GradedPoly& p,
                                                const DegreeData& dd) const {
    std::vector<Rational> v(dd.monomials.size(), Rational(0));
    std::map<Monomial, std::size_t, MonoCmp> index{MonoCmp{abg_ring().get()}};
    for (std::size_t j = 0; j < dd.monomials.size(); ++j) index.emplace(dd.monomials[j], j);
    for (const auto& [m, c] : p.terms()) v[index.at(m)] = c;
    // eliminate pivot coordinates against the RREF rows
    for (std::size_t i = 0; i < dd.pivot_cols.size(); ++i) {
        Rational f = v[dd.pivot_cols[i]];
        if (f.is_zero()) continue;
        for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * dd.reducer[i][j];
    }
    std::vector<Rational> coords;
    coords.reserve(dd.basis_cols.size());
    for (std::size_t j : dd.basis_cols) coords.push_back(v[j]);
    return coords;
}

std::vector<Rational> QuotientEngine::reduce(const GradedPoly& p) const {
    if (!same_ring(p.ring(), abg_ring()))
        throw UsageError("QuotientEngine: expects the canonical ring");
    if (p.is_zero()) return {};
    auto deg = p.homogeneous_degree();
    if (!deg) throw UsageError("QuotientEngine: input must be homogeneous");
    return coords_of(p, slice(*deg));
}

std::vector<Monomial> QuotientEngine::quotient_basis(long degree) const {
    const DegreeData& dd = slice(degree);
    std::vector<Monomial> basis;
    basis.reserve(dd.basis_cols.size());
    for (std::size_t j : dd.basis_cols) basis.push_back(dd.monomials[j]);
    return basis;
}

bool QuotientEngine::in_ideal(const GradedPoly& p) const {
    for (const Rational& c : reduce(p))
        if (!c.is_zero()) return false;
    return true;
}

IdealExpression QuotientEngine::express_in_ideal(const GradedPoly& p) const {
    if (!in_ideal(p)) throw UsageError("express_in_ideal: polynomial is not in the ideal");
    auto deg = p.homogeneous_degree();
    if (!deg) throw UsageError("express_in_ideal: input must be homogeneous and non-zero");
    const long d = *deg;
    const IdealPresentation& pr = ideal_presentation(g_);

    // unknowns: coefficients of q_i on the monomials of degree d - deg(gen_i)
    struct Slot {
        std::size_t gen;
        Monomial mu;
    };
    std::vector<Slot> slots;
    for (std::size_t i = 0; i < pr.generators.size(); ++i) {
        long dg = *pr.generators[i].homogeneous_degree();
        if (dg > d) continue;
        for (const Monomial& mu : monomials_of_degree(d - dg)) slots.push_back({i, mu});
    }
    std::vector<Monomial> rows = monomials_of_degree(d);
    std::map<Monomial, std::size_t, MonoCmp> index{MonoCmp{abg_ring().get()}};
    for (std::size_t j = 0; j < rows.size(); ++j) index.emplace(rows[j], j);

    RatMatrix a(rows.size(), slots.size());
    for (std::size_t s = 0; s < slots.size(); ++s) {
        GradedPoly prod = pr.generators[slots[s].gen] * GradedPoly::term(abg_ring(), slots[s].mu, 1);
        for (const auto& [m, c] : prod.terms()) a.at(index.at(m), s) = c;
    }
    std::vector<Rational> b(rows.size(), Rational(0));
    for (const auto& [m, c] : p.terms()) b[index.at(m)] = c;

    IdealExpression out;
    out.coeffs.assign(pr.generators.size(), GradedPoly(abg_ring()));
    auto unique_solution = solve_unique(a, b);
    std::vector<Rational> x;
    if (unique_solution) {
        out.unique = true;
        x = std::move(*unique_solution);
    } else {
        // consistent but underdetermined: pin free coordinates to zero
        out.unique = false;
        RatMatrix aug(rows.size(), slots.size() + 1);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            for (std::size_t j = 0; j < slots.size(); ++j) aug.at(i, j) = a.at(i, j);
            aug.at(i, slots.size()) = b[i];
        }
        auto pivots = aug.rref();
        x.assign(slots.size(), Rational(0));
        for (std::size_t row = 0; row < pivots.size(); ++row) {
            if (pivots[row] == slots.size())
                throw InternalCheckError("express_in_ideal: inconsistent system for an ideal member");
            x[pivots[row]] = aug.at(row, slots.size());
        }
    }
    for (std::size_t s = 0; s < slots.size(); ++s)
        out.coeffs[slots[s].gen].add_term(slots[s].mu, x[s]);
    return out;
}

Rational QuotientEngine::top_coordinate(const GradedPoly& p) const {
    auto deg = p.homogeneous_degree();
    if (!deg || *deg != top_degree())
        throw UsageError("QuotientEngine: class is not of top weighted degree");
    return reduce(p)[0];
}

void QuotientEngine::set_normalization(const GradedPoly& reference, const Rational& value) {
    Rational t = top_coordinate(reference);
    if (t.is_zero())
        throw UsageError("QuotientEngine: reference class vanishes in the quotient");
    lambda_ = value / t;
    normalized_ = true;
}

Rational QuotientEngine::pair_monomial(long m, long n, long p) const {
    if (m < 0 || n < 0 || p < 0 || m + 2 * n + 3 * p != top_degree())
        throw UsageError("pair_monomial: degree mismatch (need m+2n+3p = 3g-3)");
    if (!normalized_)
        throw UsageError("pair_monomial: engine carries no normalization datum (g=4 "
                         "pairings are defined only up to scale)");
    GradedPoly mono = GradedPoly::term(
        abg_ring(),
        Monomial({static_cast<int32_t>(m), static_cast<int32_t>(n), static_cast<int32_t>(p)}), 1);
    return lambda_ * top_coordinate(mono);
}

Rational QuotientEngine::evaluate(const GradedPoly& p) const {
    if (!normalized_) throw UsageError("QuotientEngine: not normalized");
    return lambda_ * top_coordinate(p);
}

std::uint64_t lemma51_residue(long m, long n, long p, long g) {
    if (g < 3 || !is_prime(static_cast<std::uint64_t>(g)))
        throw UsageError("lemma51_residue: g must be an odd prime");
    if (m < 0 || n < 0 || p < 0 || m + 2 * n + 3 * p != 3 * g - 3)
        throw UsageError("lemma51_residue: degree mismatch (need m+2n+3p = 3g-3)");
    if (p == 0 && (m == g - 1 || m == 2 * g - 2 || m == 3 * g - 3))
        return static_cast<std::uint64_t>(g - 1);  // -1 mod g
    return 0;
}

bool ThaddeusEngine::available(long) const { return false; }

Rational ThaddeusEngine::pair(long, long, long, long) const {
    throw EngineNotConfiguredError(
        "thaddeus engine not configured: no closed-form implementation installed");
}

QuotientIntersectionEngine::QuotientIntersectionEngine(
    std::shared_ptr<const QuotientEngine> engine)
    : engine_(std::move(engine)) {
    if (!engine_) throw UsageError("QuotientIntersectionEngine: null engine");
}

bool QuotientIntersectionEngine::available(long g) const {
    return g == engine_->g() && engine_->normalized();
}

Rational QuotientIntersectionEngine::pair(long m, long n, long p, long g) const {
    if (g != engine_->g())
        throw UsageError("quotient engine: wrong genus " + std::to_string(g));
    return engine_->pair_monomial(m, n, p);
}

Rational evaluate_class(const GradedPoly& cls, long g, const IntersectionEngine& engine) {
    if (!engine.available(g))
        throw EngineNotConfiguredError("evaluate_class: engine '" + engine.name() +
                                       "' unavailable at genus " + std::to_string(g));
    auto deg = cls.homogeneous_degree();
    if (!deg || *deg != 3 * g - 3)
        throw UsageError("evaluate_class: class is not homogeneous of weighted degree 3g-3");
    Rational acc = 0;
    for (const auto& [m, c] : cls.terms())
        acc += c * engine.pair(m.e[0], m.e[1], m.e[2], g);
    return acc;
}

std::shared_ptr<const QuotientEngine> normalized_g3_engine() {
    auto engine = std::make_shared<QuotientEngine>(3);
    engine->set_normalization(porteous::virtual_class(1, 2).poly, Rational(1));
    return engine;
}

}  // namespace bn::pairing
