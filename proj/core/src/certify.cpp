#include "bn/certify.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>

#include "bn/errors.hpp"
#include "bn/fp.hpp"
#include "bn/poly.hpp"
#include "bn/porteous.hpp"
#include "bn/primes.hpp"

namespace bn::certify {

namespace {

void check_rk(int r, int k) {
    if (r < 1 || k < 1) throw UsageError("certify: r, k must be >= 1");
}

long K_of(int r, int k) { return static_cast<long>(k) * (k + 2 * r - 1); }

void require_odd_prime(long g) {
    if (g < 3 || !is_prime(static_cast<std::uint64_t>(g)))
        throw UsageError("certify: genus must be an odd prime, got " + std::to_string(g));
}

}  // namespace

const char* to_string(TestKind t) {
    switch (t) {
        case TestKind::w0: return "w0";
        case TestKind::w_ell: return "w_ell";
        default: return "none";
    }
}

const char* to_string(Verdict v) {
    return v == Verdict::nonzero ? "nonzero" : "inconclusive";
}

Thresholds thresholds(int r, int k) {
    check_rk(r, k);
    Thresholds t;
    t.r = r;
    t.k = k;
    t.K = K_of(r, k);
    t.g0 = (t.K + 2) / 3 + 1;  // ceil(K/3) + 1
    // smallest integer >= K/3 + 1 equals g0, so the prime threshold is
    // the first prime at or above it
    t.g_prime = static_cast<long>(next_prime_geq(static_cast<std::uint64_t>(t.g0)));
    long q = 2;
    while (!(2 * q > static_cast<long>(k + 2 * r - 2) * (k - 1) && 3 * q > t.K + 3 &&
             q > 2L * k + 2 * r - 1))
        q = static_cast<long>(next_prime_gt(static_cast<std::uint64_t>(q)));
    t.g_thm = q;
    t.teixidor = (k % 2 == 0) ? t.K / 2 : (static_cast<long>(k) + 1) * (k + 2 * r - 1) / 2 + 1;
    return t;
}

std::pair<long, long> expected_dim(long g, long d, long k) {
    if (d > k + 2 * g - 2)
        throw UsageError("expected_dim: requires d <= k+2g-2");
    long beta = 4 * g - 3 - k * (k - d + 2 * g - 2);
    return {beta, beta - g};
}

std::vector<Integer> w_coeffs(int r, int k, long g) {
    check_rk(r, k);
    if (g < 2L * k + 2 * r - 1)
        throw UsageError("w_coeffs: requires g >= 2k+2r-1");
    const long K = K_of(r, k);
    GradedPoly pk = porteous::pk_gamma0(r, k);
    Integer prefactor_base = factorial(static_cast<unsigned long>(g - 1)) *
                             pow2(static_cast<unsigned long>(g - 1));
    Integer prefactor;
    mpz_pow_ui(prefactor.get_mpz_t(), prefactor_base.get_mpz_t(), static_cast<unsigned long>(k));

    // integrality must hold for every coefficient of the scaled class,
    // not only the ones extracted below
    for (const auto& [m, c] : pk.terms()) {
        Rational scaled = c * Rational(prefactor);
        if (!scaled.is_integer())
            throw InternalCheckError("w_coeffs: prefactor failed to clear a denominator");
    }

    std::vector<Rational> coeffs = extract_m_coeffs(pk, K);
    std::vector<Integer> m;
    m.reserve(coeffs.size());
    for (const Rational& c : coeffs) m.push_back((c * Rational(prefactor)).num());
    return m;
}

namespace {

struct ModData {
    Fp f;
    std::vector<std::uint64_t> mbar;   // reduced M_j, index-safe via at()
    std::vector<std::uint64_t> mprime;

    explicit ModData(long g) : f(static_cast<std::uint64_t>(g)) {}
    std::uint64_t at(long j) const {
        if (j < 0 || j >= static_cast<long>(mbar.size())) return 0;
        return mbar[static_cast<std::size_t>(j)];
    }
};

ModData reduce_coeffs(const std::vector<Integer>& M, long g) {
    ModData d(g);
    d.mbar.reserve(M.size());
    for (const Integer& z : M) d.mbar.push_back(d.f.reduce(z));
    long half = (g - 1) / 2;
    d.mprime.reserve(static_cast<std::size_t>(half));
    for (long i = 0; i < half; ++i)
        d.mprime.push_back(d.f.add(d.at(i), d.f.add(d.at(i + half), d.at(i + g - 1))));
    return d;
}

// Eq-style congruence values: (w_0) = -(M_0 + M_{(g-1)/2} + M_{g-1}),
// (w_ell) = -(M_{(g-1)/2 - ell} + M_{g-1-ell}), all mod g.
std::uint64_t w0_value(const ModData& d, long g) {
    return d.f.neg(d.f.add(d.at(0), d.f.add(d.at((g - 1) / 2), d.at(g - 1))));
}
std::uint64_t well_value(const ModData& d, long g, long ell) {
    return d.f.neg(d.f.add(d.at((g - 1) / 2 - ell), d.at(g - 1 - ell)));
}

}  // namespace

QPolyReport q_poly(int r, int k, long g) {
    check_rk(r, k);
    require_odd_prime(g);
    const long K = K_of(r, k);
    if (!(3 * g > K + 3 && g > 2L * k + 2 * r - 1))
        throw UsageError("q_poly: requires g > max{K/3+1, 2k+2r-1}");

    ModData d = reduce_coeffs(w_coeffs(r, k, g), g);
    QPolyReport rep;
    rep.g = g;
    rep.coeffs = d.mprime;
    for (std::uint64_t c : rep.coeffs)
        if (c != 0) rep.nonzero = true;

    auto eval_q = [&](std::uint64_t x) {
        std::uint64_t acc = 0, pw = 1;
        for (std::uint64_t c : rep.coeffs) {
            acc = d.f.add(acc, d.f.mul(c, pw));
            pw = d.f.mul(pw, x);
        }
        return acc;
    };

    ModPoly pkb = reduce_mod_p(porteous::pk_beta(r, k), static_cast<std::uint64_t>(g));
    auto eval_pkb = [&](std::uint64_t x) {
        std::uint64_t acc = 0;
        for (const auto& [m, c] : pkb.terms)
            acc = d.f.add(acc, d.f.mul(c, d.f.pow(x, static_cast<std::uint64_t>(m.e[1]))));
        return acc;
    };

    // Wilson: ((g-1)! 2^{g-1})^k == (-1)^k mod g, so q(x^2) picks up the
    // sign of k relative to P_k itself.
    bool flip = (k % 2 == 1);
    rep.matches_pk_at_squares = true;
    std::vector<bool> seen(static_cast<std::size_t>(g), false);
    int roots = 0;
    for (long x = 1; x < g; ++x) {
        std::uint64_t sq = d.f.mul(static_cast<std::uint64_t>(x), static_cast<std::uint64_t>(x));
        std::uint64_t qv = eval_q(sq);
        std::uint64_t pv = eval_pkb(sq);
        if (qv != (flip ? d.f.neg(pv) : pv)) rep.matches_pk_at_squares = false;
        if (qv == 0 && sq != 0 && !seen[sq]) {
            seen[sq] = true;
            ++roots;
        }
    }
    rep.distinct_nonzero_square_roots = roots;
    return rep;
}

Certificate certify(int r, int k, long g, Mode mode) {
    check_rk(r, k);
    require_odd_prime(g);
    const long K = K_of(r, k);
    if (g < 2L * k + 2 * r - 1)
        throw UsageError("certify: requires g >= 2k+2r-1 so that w is defined");
    const long e = 3 * g - 3 - K;
    if (e < 0)
        throw UsageError("certify: expected dimension negative at this genus (3g-3 < K)");
    if (mode == Mode::theorem36) {
        bool bound_ok = 2 * g > static_cast<long>(k + 2 * r - 2) * (k - 1) &&
                        3 * g > K + 3 && g > 2L * k + 2 * r - 1;
        if (!bound_ok)
            throw UsageError("certify: genus below the theorem36 three-way bound");
    }

    Certificate cert;
    cert.r = r;
    cert.k = k;
    cert.g = g;
    Integer base = factorial(static_cast<unsigned long>(g - 1)) *
                   pow2(static_cast<unsigned long>(g - 1));
    mpz_pow_ui(cert.prefactor.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(k));
    cert.M = w_coeffs(r, k, g);

    ModData d = reduce_coeffs(cert.M, g);
    cert.Mprime = d.mprime;

    auto fire = [&](TestKind t, long ell, std::uint64_t value) {
        cert.test = t;
        cert.ell = ell;
        cert.value = value;
        cert.verdict = Verdict::nonzero;
        cert.valid_for_all_genus_ge = g;
    };

    if (mode == Mode::direct) {
        std::uint64_t v0 = w0_value(d, g);
        if (v0 != 0) {
            fire(TestKind::w0, 0, v0);
            return cert;
        }
        for (long ell = 1; 2 * ell <= e; ++ell) {
            std::uint64_t v = well_value(d, g, ell);
            if (v != 0) {
                fire(TestKind::w_ell, ell, v);
                return cert;
            }
        }
        return cert;  // inconclusive: mod-g tests are one-sided
    }

    // theorem36 mode, following the proof: test (w_0) via M'_0; otherwise
    // take the smallest k0 >= k+r with M'_{k0} != 0 and test w_{(g-1)/2-k0}.
    if (d.mprime.empty()) return cert;
    if (d.mprime[0] != 0) {
        fire(TestKind::w0, 0, w0_value(d, g));
        return cert;
    }
    long half = (g - 1) / 2;
    for (long k0 = static_cast<long>(k) + r; k0 < half; ++k0) {
        if (d.mprime[static_cast<std::size_t>(k0)] == 0) continue;
        long ell = half - k0;
        if (ell < 1 || 2 * ell > e) return cert;  // inadmissible; never "zero"
        cert.k0 = k0;
        fire(TestKind::w_ell, ell, well_value(d, g, ell));
        return cert;
    }
    return cert;
}

unsigned thread_budget() {
    if (const char* env = std::getenv("BN_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

std::vector<ScanRow> scan(int r_lo, int r_hi, int k_lo, int k_hi, const ScanPolicy& policy,
                          unsigned threads) {
    if (r_lo > r_hi || k_lo > k_hi) return {};
    check_rk(r_lo, k_lo);

    std::vector<std::pair<int, int>> cells;
    for (int r = r_lo; r <= r_hi; ++r)
        for (int k = k_lo; k <= k_hi; ++k) cells.emplace_back(r, k);
    std::vector<ScanRow> rows(cells.size());

    auto run_cell = [&](std::size_t idx) {
        auto [r, k] = cells[idx];
        ScanRow row;
        row.th = thresholds(r, k);
        long g = row.th.g_prime;
        int attempts = policy.until_success ? policy.max_attempts : 1;
        for (int a = 0; a < attempts; ++a) {
            // advance past any prime where w is not defined
            while (g < 3 || g < 2L * k + 2 * r - 1)
                g = static_cast<long>(next_prime_gt(static_cast<std::uint64_t>(g)));
            Certificate cert = certify(r, k, g, Mode::direct);
            row.certified_g = g;
            row.test = cert.test;
            row.ell = cert.ell;
            row.value = cert.value;
            row.verdict = cert.verdict;
            if (cert.verdict == Verdict::nonzero) break;
            g = static_cast<long>(next_prime_gt(static_cast<std::uint64_t>(g)));
        }
        rows[idx] = std::move(row);
    };

    unsigned nthreads = std::max(1u, std::min<unsigned>(threads, cells.size()));
    if (nthreads == 1) {
        for (std::size_t i = 0; i < cells.size(); ++i) run_cell(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(nthreads);
        for (unsigned t = 0; t < nthreads; ++t) {
            pool.emplace_back([&] {
                for (std::size_t i = next.fetch_add(1); i < cells.size(); i = next.fetch_add(1))
                    run_cell(i);
            });
        }
        for (auto& th : pool) th.join();
    }
    return rows;  // cells were generated in (r, k) order; rows match
}

}  // namespace bn::certify
