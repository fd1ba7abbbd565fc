#include "bn/chern.hpp"

#include "bn/errors.hpp"
#include "bn/fp.hpp"
#include "bn/primes.hpp"
#include "bn/sqrt_ext.hpp"

namespace bn::chern {

namespace {

const GradedPoly& zero_poly() {
    static const GradedPoly z(abg_ring());
    return z;
}

GradedPoly var_a() { return GradedPoly::var(abg_ring(), "a"); }
GradedPoly var_b() { return GradedPoly::var(abg_ring(), "b"); }
GradedPoly var_g() { return GradedPoly::var(abg_ring(), "g"); }

// (a^2 - b)/4, the square of the discriminant half.
GradedPoly quarter_disc() {
    GradedPoly a = var_a();
    return (a * a - var_b()) * Rational(1, 4);
}

void check_rn(int r, int N) {
    if (r < 1) throw UsageError("chern: r must be >= 1");
    if (N < 0) throw UsageError("chern: N must be >= 0");
}

}  // namespace

const GradedPoly& ChernTable::at(long n) const {
    if (n < 0) return zero_poly();
    if (n > N) throw UsageError("ChernTable: index beyond table");
    return c[static_cast<std::size_t>(n)];
}

const GradedPoly& TildeCSeq::at(long n) const {
    if (n < 0) return zero_poly();
    if (n > N) throw UsageError("TildeCSeq: index beyond table");
    return c[static_cast<std::size_t>(n)];
}

ChernTable full_table(int r, int N) {
    check_rn(r, N);
    ChernTable t;
    t.r = r;
    t.N = N;
    t.variant = Variant::full;
    t.c.assign(static_cast<std::size_t>(N) + 1, zero_poly());
    t.c[0] = GradedPoly::constant(abg_ring(), 1);

    GradedPoly a = var_a(), gam = var_g(), q = quarter_disc();
    GradedPoly a2 = a * a, q2 = q * q;
    auto cc = [&](long i) -> const GradedPoly& { return i < 0 ? zero_poly() : t.c[i]; };

    for (long n = -3; n + 4 <= N; ++n) {
        GradedPoly sum =
            (a * Rational(2 * n + 6 - r)) * cc(n + 3) +
            (a2 * Rational(n + 2 - r) + q * Rational(2 * n + 5 - 2 * r)) * cc(n + 2) +
            (a * q * Rational(2 * n + 3 - 3 * r) + gam * Rational(1, 2)) * cc(n + 1) +
            (q2 * Rational(n + 1 - 2 * r)) * cc(n);
        t.c[n + 4] = sum * Rational(-1, n + 4);
    }
    return t;
}

ChernTable gamma0_table(int r, int N) {
    check_rn(r, N);
    ChernTable t;
    t.r = r;
    t.N = N;
    t.variant = Variant::gamma0;
    t.c.assign(static_cast<std::size_t>(N) + 1, zero_poly());
    t.c[0] = GradedPoly::constant(abg_ring(), 1);
    if (N >= 1) t.c[1] = var_a() * Rational(r);

    GradedPoly a = var_a(), q = quarter_disc();
    for (long n = 0; n + 2 <= N; ++n) {
        GradedPoly sum = (a * Rational(n + 1 - r)) * t.c[n + 1] +
                         (q * Rational(n + 1 - 2 * r)) * t.c[n];
        t.c[n + 2] = sum * Rational(-1, n + 2);
    }
    return t;
}

TildeCSeq alpha0_table(int r, int N) {
    check_rn(r, N);
    TildeCSeq t;
    t.r = r;
    t.N = N;
    t.c.assign(static_cast<std::size_t>(N) + 1, zero_poly());
    t.c[0] = GradedPoly::constant(abg_ring(), 1);

    GradedPoly b = var_b();
    for (long n = 0; n + 2 <= N; ++n)
        t.c[n + 2] = b * t.c[n] * Rational(n + 1 - 2 * r, 4 * (n + 2));
    return t;
}

GradedPoly tilde_c_closed_form(int n, int r) {
    if (r < 1) throw UsageError("tilde_c_closed_form: r must be >= 1");
    if (n < r) throw UsageError("tilde_c_closed_form: requires n >= r");
    Integer num = 1;
    for (int i = 2 * r - 1; i >= 1; i -= 2) num *= i;  // (2r-1)!!
    num *= factorial(static_cast<unsigned long>(2 * n - 2 * r));
    if (r % 2 == 1) num = -num;

    Integer den = pow2(static_cast<unsigned long>(2 * n - r));
    for (int i = 0; i < r; ++i) den *= (n - i);  // n(n-1)...(n-r+1)
    Integer frn = factorial(static_cast<unsigned long>(n - r));
    den *= frn * frn;
    den *= pow2(2 * static_cast<unsigned long>(n));  // (b/4)^n

    return GradedPoly::var(abg_ring(), "b", n) * Rational(num, den);
}

Rational tilde_c_at4(long j, int r) {
    if (j < 0) return 0;
    if (j % 2 == 1) return 0;
    // with b = 4, the two-step recurrence is (m+2) v_{m+2} = (m+1-2r) v_m
    Rational v = 1;
    for (long m = 0; m + 2 <= j; m += 2) v *= Rational(m + 1 - 2 * r, m + 2);
    return v;
}

std::uint64_t tilde_c_mod_p(int n, int r, std::uint64_t p) {
    if (p <= std::uint64_t(std::max(2 * r - 1, n)))
        throw UsageError("tilde_c_mod_p: requires p > max{2r-1, n}");
    Fp f(p);
    return f.reduce(tilde_c_at4(2L * n, r));
}

std::uint64_t binomial_e(std::uint64_t p, int r, int n) {
    Fp f(p);
    Integer top = (Integer(static_cast<unsigned long>(p)) + 2 * r - 1) / 2;
    return f.reduce(binomial(top, static_cast<unsigned long>(n)));
}

GradedPoly c2r_product(int r) {
    if (r < 1) throw UsageError("c2r_product: r must be >= 1");
    GradedPoly b = var_b();
    GradedPoly prod = GradedPoly::constant(abg_ring(), 1);
    for (int i = 1; i <= r; ++i) {
        long odd = 2L * i - 1;
        prod = prod * (GradedPoly::constant(abg_ring(), 1) - b * Rational(odd * odd));
    }
    Integer den = pow2(2 * static_cast<unsigned long>(r)) *
                  factorial(2 * static_cast<unsigned long>(r));
    return prod * Rational(Integer(1), den);
}

ChernTable oracle_via_char_classes(int r, int N) {
    check_rn(r, N);
    static const RingPtr ext_ring = make_ring({{"a", 1}, {"b", 2}, {"g", 3}, {"s", 1}});
    SqrtExt ext(ext_ring, "s", "b");

    GradedPoly a = GradedPoly::var(ext_ring, "a");
    GradedPoly b = GradedPoly::var(ext_ring, "b");
    GradedPoly gam = GradedPoly::var(ext_ring, "g");
    GradedPoly s = GradedPoly::var(ext_ring, "s");
    GradedPoly a_minus_s = a - s;
    GradedPoly b2 = b * b;
    GradedPoly odd_part = a * b * s + gam * s * Rational(2);

    // ch_n(F-E), n >= 1. The displayed formula, cleared of negative powers
    // of sqrt(b) by multiplying through with n! s^4 and symmetrizing:
    //   n! 2^{n+1} b^2 ch_n = (2r-1) b^2 (a-s)^n - (a b s + 2 g s)(a-s)^n
    //                         - 2 n b g (a-s)^{n-1} + (s -> -s partner).
    std::vector<GradedPoly> ch(static_cast<std::size_t>(N) + 1, zero_poly());
    GradedPoly pow_prev = GradedPoly::constant(ext_ring, 1);  // (a-s)^{n-1}
    GradedPoly pow_cur = a_minus_s;                           // (a-s)^n
    for (int n = 1; n <= N; ++n) {
        GradedPoly numerator = (b2 * Rational(2 * r - 1) - odd_part) * pow_cur -
                               pow_prev * b * gam * Rational(2 * n);
        GradedPoly sym = ext.symmetrize(numerator);
        GradedPoly cleared = div_exact(ext.project(sym, abg_ring()), var_b() * var_b());
        Integer scale = factorial(static_cast<unsigned long>(n)) *
                        pow2(static_cast<unsigned long>(n) + 1);
        ch[n] = cleared * Rational(Integer(1), scale);
        pow_prev = pow_cur;
        pow_cur = pow_cur * a_minus_s;
    }

    // c(t) = exp(sum_j (-1)^{j-1} (j-1)! ch_j t^j), expanded via c' = L' c.
    ChernTable t;
    t.r = r;
    t.N = N;
    t.variant = Variant::full;
    t.c.assign(static_cast<std::size_t>(N) + 1, zero_poly());
    t.c[0] = GradedPoly::constant(abg_ring(), 1);
    std::vector<GradedPoly> ell(static_cast<std::size_t>(N) + 1, zero_poly());
    for (int j = 1; j <= N; ++j) {
        Rational sign = (j % 2 == 1) ? Rational(1) : Rational(-1);
        ell[j] = ch[j] * (sign * Rational(factorial(static_cast<unsigned long>(j) - 1)));
    }
    for (int n = 1; n <= N; ++n) {
        GradedPoly sum(abg_ring());
        for (int j = 1; j <= n; ++j) sum += ell[j] * t.c[n - j] * Rational(j);
        t.c[n] = sum * Rational(1, n);
    }
    return t;
}

std::shared_ptr<const ChernTable> ChernCache::table(int r, Variant v, int N) {
    check_rn(r, N);
    std::scoped_lock lock(mu_);
    auto key = std::make_pair(r, static_cast<int>(v));
    auto it = tables_.find(key);
    if (it != tables_.end() && it->second->N >= N) return it->second;
    int target = it == tables_.end() ? N : std::max(N, it->second->N);
    std::shared_ptr<const ChernTable> fresh;
    switch (v) {
        case Variant::full:
            fresh = std::make_shared<const ChernTable>(full_table(r, target));
            break;
        case Variant::gamma0:
            fresh = std::make_shared<const ChernTable>(gamma0_table(r, target));
            break;
        case Variant::alpha0: {
            TildeCSeq seq = alpha0_table(r, target);
            ChernTable t;
            t.r = r;
            t.N = target;
            t.variant = Variant::alpha0;
            t.c = std::move(seq.c);
            fresh = std::make_shared<const ChernTable>(std::move(t));
            break;
        }
    }
    tables_[key] = fresh;
    return fresh;
}

}  // namespace bn::chern
