#include "bn/fp.hpp"

#include <sstream>

#include "bn/errors.hpp"
#include "bn/primes.hpp"

namespace bn {

Fp::Fp(std::uint64_t p) : p_(p) {
    if (p < 3 || p >= (1ull << 32) || !is_prime(p))
        throw UsageError("Fp: modulus must be an odd prime below 2^32");
}

std::uint64_t Fp::mul(std::uint64_t x, std::uint64_t y) const { return (x % p_) * (y % p_) % p_; }

std::uint64_t Fp::pow(std::uint64_t x, std::uint64_t e) const {
    std::uint64_t r = 1, b = x % p_;
    while (e) {
        if (e & 1) r = r * b % p_;
        b = b * b % p_;
        e >>= 1;
    }
    return r;
}

std::uint64_t Fp::inv(std::uint64_t x) const {
    x %= p_;
    if (x == 0) throw UsageError("Fp: inverse of zero");
    return pow(x, p_ - 2);
}

std::uint64_t Fp::reduce(const Integer& z) const {
    Integer r = z % static_cast<unsigned long>(p_);
    if (r < 0) r += static_cast<unsigned long>(p_);
    return r.get_ui();
}

std::uint64_t Fp::reduce(const Rational& q) const {
    std::uint64_t den = reduce(q.den());
    if (den == 0)
        throw InternalCheckError("Fp: denominator divisible by the modulus " + std::to_string(p_));
    return mul(reduce(q.num()), inv(den));
}

std::uint64_t ModPoly::coeff(const Monomial& m) const {
    auto it = terms.find(m);
    return it == terms.end() ? 0 : it->second;
}

std::string ModPoly::to_text() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        if (!first) os << " + ";
        first = false;
        os << it->second;
        for (std::size_t i = 0; i < ring->size(); ++i) {
            int32_t e = it->first.e[i];
            if (e == 0) continue;
            os << "*" << ring->vars[i];
            if (e > 1) os << "^" << e;
        }
    }
    return os.str();
}

bool operator==(const ModPoly& a, const ModPoly& b) {
    if (a.modulus != b.modulus || !same_ring(a.ring, b.ring)) return false;
    if (a.terms.size() != b.terms.size()) return false;
    auto it = a.terms.begin();
    auto jt = b.terms.begin();
    for (; it != a.terms.end(); ++it, ++jt)
        if (!(it->first == jt->first) || it->second != jt->second) return false;
    return true;
}

ModPoly reduce_mod_p(const GradedPoly& p, std::uint64_t modulus) {
    Fp f(modulus);
    ModPoly out;
    out.modulus = modulus;
    out.ring = p.ring();
    out.terms = std::map<Monomial, std::uint64_t, MonoCmp>(MonoCmp{out.ring.get()});
    for (const auto& [m, c] : p.terms()) {
        std::uint64_t v = f.reduce(c);
        if (v != 0) out.terms.emplace(m, v);
    }
    return out;
}

std::uint64_t det_mod_p(const Fp& f, std::vector<std::uint64_t> m, std::size_t n) {
    if (m.size() != n * n) throw UsageError("det_mod_p: not square");
    auto at = [&](std::size_t i, std::size_t j) -> std::uint64_t& { return m[i * n + j]; };
    std::uint64_t det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && at(piv, col) == 0) ++piv;
        if (piv == n) return 0;
        if (piv != col) {
            for (std::size_t j = col; j < n; ++j) std::swap(at(piv, j), at(col, j));
            det = f.neg(det);
        }
        det = f.mul(det, at(col, col));
        std::uint64_t ipiv = f.inv(at(col, col));
        for (std::size_t i = col + 1; i < n; ++i) {
            if (at(i, col) == 0) continue;
            std::uint64_t factor = f.mul(at(i, col), ipiv);
            for (std::size_t j = col; j < n; ++j)
                at(i, j) = f.sub(at(i, j), f.mul(factor, at(col, j)));
        }
    }
    return det;
}

}  // namespace bn
