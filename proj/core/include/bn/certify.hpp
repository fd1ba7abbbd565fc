#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bn/rational.hpp"

namespace bn::certify {

/// Genus thresholds attached to a cell (r, k), K = k(k+2r-1):
///   g0       = ceil(K/3) + 1, the smallest genus with non-negative
///              expected dimension;
///   g_prime  = smallest prime >= K/3 + 1;
///   g_thm    = smallest prime > max{(k+2r-2)(k-1)/2, K/3+1, 2k+2r-1};
///   teixidor = K/2 for k even, (k+1)(k+2r-1)/2 + 1 for k odd.
struct Thresholds {
    int r = 0, k = 0;
    long K = 0;
    long g0 = 0;
    long g_prime = 0;
    long g_thm = 0;
    long teixidor = 0;
};
Thresholds thresholds(int r, int k);

/// (beta(2,d,k), beta(2,d,k) - g) with beta = 4g-3-k(k-d+2g-2).
/// Requires d <= k+2g-2.
std::pair<long, long> expected_dim(long g, long d, long k);

enum class Mode { direct, theorem36 };
enum class TestKind { w0, w_ell, none };
enum class Verdict { nonzero, inconclusive };

const char* to_string(TestKind t);
const char* to_string(Verdict v);

/// A non-vanishing certificate for b(r,k) at an odd prime genus g.
/// M_j are the integer coefficients of b^j a^{K-2j} in
/// w = ((g-1)! 2^{g-1})^k P_k; M'_i their mod-g fold-down. A nonzero
/// verdict propagates to every genus >= g.
struct Certificate {
    int r = 0, k = 0;
    long g = 0;
    Integer prefactor;
    std::vector<Integer> M;             // j = 0..K/2
    std::vector<std::uint64_t> Mprime;  // 0 <= i < (g-1)/2
    TestKind test = TestKind::none;
    long ell = 0;                       // for test == w_ell
    long k0 = -1;                       // theorem36 mode: the chosen index
    std::uint64_t value = 0;            // the congruence value that fired
    Verdict verdict = Verdict::inconclusive;
    long valid_for_all_genus_ge = 0;    // = g when verdict == nonzero
};

/// Exact integer coefficients M_j. Requires g >= 2k+2r-1 (the prefactor
/// then clears every denominator); violation of integrality is an
/// InternalCheckError.
std::vector<Integer> w_coeffs(int r, int k, long g);

/// q(b) = sum M'_i b^i over F_g, with its structural checks: q not
/// identically zero, the count of distinct non-zero roots among squares,
/// and the evaluation identity q(x^2) == (-1)^k P_k(1,x^2,0) mod g for
/// every x in [1, g-1]. (The (-1)^k is Wilson's theorem acting on the
/// prefactor.) Requires g prime, g > max{K/3+1, 2k+2r-1}.
struct QPolyReport {
    long g = 0;
    std::vector<std::uint64_t> coeffs;
    bool nonzero = false;
    int distinct_nonzero_square_roots = 0;
    bool matches_pk_at_squares = false;
};
QPolyReport q_poly(int r, int k, long g);

Certificate certify(int r, int k, long g, Mode mode);

/// Direct-mode sweep over a rectangle of cells at g = g_prime(r,k); with
/// until_success, later primes are tried (advancing past any g where w is
/// not defined) until a certificate fires or attempts run out.
struct ScanPolicy {
    bool until_success = false;
    int max_attempts = 8;
};
struct ScanRow {
    Thresholds th;
    long certified_g = 0;
    TestKind test = TestKind::none;
    long ell = 0;
    std::uint64_t value = 0;
    Verdict verdict = Verdict::inconclusive;
};
std::vector<ScanRow> scan(int r_lo, int r_hi, int k_lo, int k_hi, const ScanPolicy& policy,
                          unsigned threads);

/// BN_THREADS when set and positive, otherwise hardware concurrency.
unsigned thread_budget();

}  // namespace bn::certify
