#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "bn/poly.hpp"

namespace bn::chern {

enum class Variant { full, gamma0, alpha0 };

/// The sequence c_0..c_N of Chern-class polynomials of the degeneracy
/// problem for a given r. c_0 = 1, c_1 = r*a, every c_n homogeneous of
/// weighted degree n; c_n is taken as 0 for n < 0.
struct ChernTable {
    int r = 0;
    int N = 0;
    Variant variant = Variant::full;
    std::vector<GradedPoly> c;  // c[0..N], canonical ring

    const GradedPoly& at(long n) const;
};

/// Full three-variable table from the five-term recurrence. The seeds
/// c_1..c_3 are produced by running the recurrence at n = -3, -2, -1 with
/// zero padding below c_0 = 1; nothing is hand-entered.
ChernTable full_table(int r, int N);

/// Two-variable table from the three-term recurrence at gamma = 0,
/// seeds c_0 = 1, c_1 = r*a.
ChernTable gamma0_table(int r, int N);

/// The alpha = 0 sequence: c~_0 = 1, c~_1 = 0,
/// (n+2) c~_{n+2} = (b/4)(n+1-2r) c~_n. Univariate in b.
struct TildeCSeq {
    int r = 0;
    int N = 0;
    std::vector<GradedPoly> c;

    const GradedPoly& at(long n) const;
};
TildeCSeq alpha0_table(int r, int N);

/// Closed form of c~_{2n} for n >= r:
/// (-1)^r (2r-1)!! (2n-2r)! / (2^{2n-r} n(n-1)...(n-r+1) ((n-r)!)^2) (b/4)^n.
GradedPoly tilde_c_closed_form(int n, int r);

/// Exact rational value c~_j(b = 4); zero for odd j.
Rational tilde_c_at4(long j, int r);

/// c~_{2n}(b = 4) mod p, requires p > max{2r-1, n}.
std::uint64_t tilde_c_mod_p(int n, int r, std::uint64_t p);

/// e_n = binomial((p+2r-1)/2, n) mod p, the coefficient of t^n in
/// (1+t)^{(p+2r-1)/2}.
std::uint64_t binomial_e(std::uint64_t p, int r, int n);

/// c_{2r}(1, b, 0) = (1/(2^{2r} (2r)!)) * prod_{i=1}^{r} (1 - (2i-1)^2 b).
GradedPoly c2r_product(int r);

/// Independent route to the full table: Chern characters assembled in a
/// formal square-root extension (s^2 = b), symmetrized, then converted to
/// Chern classes through the exponential of the log-derivative series.
ChernTable oracle_via_char_classes(int r, int N);

/// Memoized table access, safe for concurrent readers; tables are
/// immutable once published.
class ChernCache {
public:
    std::shared_ptr<const ChernTable> table(int r, Variant v, int N);

private:
    std::mutex mu_;
    std::map<std::pair<int, int>, std::shared_ptr<const ChernTable>> tables_;
};

}  // namespace bn::chern
