#include "bn/poly.hpp"

#include <algorithm>
#include <sstream>

#include "bn/errors.hpp"

namespace bn {

bool Monomial::is_constant() const {
    return std::all_of(e.begin(), e.end(), [](int32_t x) { return x == 0; });
}

bool Monomial::divides(const Monomial& m) const {
    if (e.size() != m.e.size()) return false;
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] > m.e[i]) return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& m) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < e.size(); ++i) r.e[i] += m.e[i];
    return r;
}

Monomial Monomial::operator/(const Monomial& m) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < e.size(); ++i) r.e[i] -= m.e[i];
    return r;
}

long weighted_degree(const Monomial& m, const Ring& ring) {
    long d = 0;
    for (std::size_t i = 0; i < m.e.size(); ++i) d += static_cast<long>(m.e[i]) * ring.weights[i];
    return d;
}

bool MonoCmp::operator()(const Monomial& x, const Monomial& y) const {
    long dx = weighted_degree(x, *ring), dy = weighted_degree(y, *ring);
    if (dx != dy) return dx < dy;
    return std::lexicographical_compare(x.e.begin(), x.e.end(), y.e.begin(), y.e.end());
}

GradedPoly::GradedPoly(RingPtr ring)
    : ring_(std::move(ring)), terms_(MonoCmp{ring_.get()}) {
    if (!ring_) throw UsageError("GradedPoly: null ring");
}

GradedPoly GradedPoly::constant(RingPtr ring, Rational c) {
    GradedPoly p(std::move(ring));
    p.add_term(Monomial(p.ring_->size()), c);
    return p;
}

GradedPoly GradedPoly::var(RingPtr ring, std::string_view name, int32_t exp) {
    GradedPoly p(std::move(ring));
    int idx = p.ring_->index_of(name);
    if (idx < 0) throw UsageError("GradedPoly: no variable named " + std::string(name));
    Monomial m(p.ring_->size());
    m.e[idx] = exp;
    p.add_term(m, 1);
    return p;
}

GradedPoly GradedPoly::term(RingPtr ring, Monomial m, Rational c) {
    GradedPoly p(std::move(ring));
    if (m.e.size() != p.ring_->size()) throw UsageError("GradedPoly: exponent arity mismatch");
    p.add_term(m, c);
    return p;
}

Rational GradedPoly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational GradedPoly::const_value() const {
    if (is_zero()) return 0;
    if (terms_.size() != 1 || !terms_.begin()->first.is_constant())
        throw UsageError("GradedPoly: not a constant");
    return terms_.begin()->second;
}

std::pair<Monomial, Rational> GradedPoly::leading_term() const {
    if (is_zero()) throw UsageError("GradedPoly: leading term of zero");
    auto it = std::prev(terms_.end());
    return {it->first, it->second};
}

long GradedPoly::weighted_deg() const {
    if (is_zero()) return -1;
    return weighted_degree(std::prev(terms_.end())->first, *ring_);
}

long GradedPoly::degree_in(std::string_view name) const {
    int idx = ring_->index_of(name);
    if (idx < 0) throw UsageError("GradedPoly: no variable named " + std::string(name));
    long d = -1;
    for (const auto& [m, c] : terms_) d = std::max<long>(d, m.e[idx]);
    return d;
}

bool GradedPoly::is_homogeneous() const {
    if (is_zero()) return true;
    long d = weighted_degree(terms_.begin()->first, *ring_);
    for (const auto& [m, c] : terms_)
        if (weighted_degree(m, *ring_) != d) return false;
    return true;
}

std::optional<long> GradedPoly::homogeneous_degree() const {
    if (is_zero() || !is_homogeneous()) return std::nullopt;
    return weighted_degree(terms_.begin()->first, *ring_);
}

bool GradedPoly::depends_on(std::string_view name) const {
    int idx = ring_->index_of(name);
    if (idx < 0) return false;
    for (const auto& [m, c] : terms_)
        if (m.e[idx] != 0) return true;
    return false;
}

void GradedPoly::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

GradedPoly GradedPoly::operator-() const {
    GradedPoly r(ring_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

static void check_same_ring(const GradedPoly& a, const GradedPoly& b) {
    if (!same_ring(a.ring(), b.ring()))
        throw RingMismatchError("GradedPoly: operands live in different rings");
}

GradedPoly& GradedPoly::operator+=(const GradedPoly& o) {
    check_same_ring(*this, o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

GradedPoly& GradedPoly::operator-=(const GradedPoly& o) {
    check_same_ring(*this, o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

GradedPoly operator*(const GradedPoly& a, const GradedPoly& b) {
    check_same_ring(a, b);
    GradedPoly r(a.ring_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

GradedPoly operator*(const GradedPoly& a, const Rational& s) {
    GradedPoly r(a.ring_);
    if (s.is_zero()) return r;
    for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, c * s);
    return r;
}

GradedPoly GradedPoly::pow(unsigned long e) const {
    GradedPoly acc = constant(ring_, 1);
    GradedPoly base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return acc;
}

bool operator==(const GradedPoly& a, const GradedPoly& b) {
    if (!same_ring(a.ring(), b.ring())) return false;
    if (a.terms_.size() != b.terms_.size()) return false;
    auto it = a.terms_.begin();
    auto jt = b.terms_.begin();
    for (; it != a.terms_.end(); ++it, ++jt)
        if (!(it->first == jt->first) || it->second != jt->second) return false;
    return true;
}

GradedPoly GradedPoly::specialize(const std::map<std::string, GradedPoly>& assign,
                                  const RingPtr& target) const {
    std::vector<const GradedPoly*> values(ring_->size(), nullptr);
    std::vector<int> passthrough(ring_->size(), -1);
    for (const auto& [name, value] : assign) {
        int idx = ring_->index_of(name);
        if (idx < 0) continue;  // assignments to absent variables are inert
        if (!same_ring(value.ring(), target))
            throw RingMismatchError("specialize: value not in target ring");
        values[idx] = &value;
    }
    for (std::size_t i = 0; i < ring_->size(); ++i) {
        if (values[i]) continue;
        passthrough[i] = target->index_of(ring_->vars[i]);
        if (passthrough[i] < 0)
            throw RingMismatchError("specialize: unassigned variable " + ring_->vars[i] +
                                    " absent from target ring");
    }

    GradedPoly result(target);
    for (const auto& [m, c] : terms_) {
        GradedPoly term_val = GradedPoly::constant(target, c);
        Monomial carried(target->size());
        for (std::size_t i = 0; i < ring_->size(); ++i) {
            if (m.e[i] == 0) continue;
            if (values[i])
                term_val = term_val * values[i]->pow(m.e[i]);
            else
                carried.e[passthrough[i]] += m.e[i];
        }
        if (!carried.is_constant()) term_val = term_val * GradedPoly::term(target, carried, 1);
        result += term_val;
    }
    return result;
}

GradedPoly GradedPoly::specialize(const std::map<std::string, Rational>& assign) const {
    std::map<std::string, GradedPoly> lifted;
    for (const auto& [name, value] : assign)
        lifted.emplace(name, GradedPoly::constant(ring_, value));
    return specialize(lifted, ring_);
}

std::string GradedPoly::to_text() const {
    if (is_zero()) return "0/1";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!first) os << " + ";
        first = false;
        os << it->second.str_num_den();
        for (std::size_t i = 0; i < ring_->size(); ++i) {
            int32_t e = it->first.e[i];
            if (e == 0) continue;
            os << "*" << ring_->vars[i];
            if (e > 1) os << "^" << e;
        }
    }
    return os.str();
}

DivRem divrem(const GradedPoly& f, const GradedPoly& d) {
    check_same_ring(f, d);
    if (d.is_zero()) throw UsageError("divrem: division by zero polynomial");
    auto [dm, dc] = d.leading_term();
    GradedPoly q(f.ring()), r(f.ring()), p = f;
    while (!p.is_zero()) {
        auto [pm, pc] = p.leading_term();
        if (dm.divides(pm)) {
            GradedPoly t = GradedPoly::term(f.ring(), pm / dm, pc / dc);
            q += t;
            p -= t * d;
        } else {
            GradedPoly t = GradedPoly::term(f.ring(), pm, pc);
            r += t;
            p -= t;
        }
    }
    return {std::move(q), std::move(r)};
}

GradedPoly div_exact(const GradedPoly& f, const GradedPoly& d) {
    DivRem qr = divrem(f, d);
    if (!qr.remainder.is_zero())
        throw InternalCheckError("div_exact: division left a remainder");
    return std::move(qr.quotient);
}

std::vector<Rational> extract_m_coeffs(const GradedPoly& w, long K) {
    if (!same_ring(w.ring(), abg_ring()))
        throw UsageError("extract_m_coeffs: expects the canonical ring");
    auto deg = w.homogeneous_degree();
    if (!w.is_zero() && (!deg || *deg != K))
        throw UsageError("extract_m_coeffs: input not homogeneous of the stated degree");
    std::vector<Rational> m(static_cast<std::size_t>(K / 2) + 1, Rational(0));
    for (long j = 0; 2 * j <= K; ++j)
        m[static_cast<std::size_t>(j)] =
            w.coeff({static_cast<int32_t>(K - 2 * j), static_cast<int32_t>(j), 0});
    return m;
}

}  // namespace bn
