#pragma once

#include <cstdint>
#include <vector>

#include "bn/chern.hpp"
#include "bn/poly_matrix.hpp"

namespace bn::porteous {

/// The virtual class P_k for (r, k): the k x k determinant with entry
/// (i, j) = c_{k+2r-1-i+j} (1-based), first row c_{k+2r-1}..c_{2k+2r-2},
/// last row c_{2r}..c_{k+2r-1}. Homogeneous of weighted degree
/// K = k(k+2r-1); independent of the genus.
struct VirtualClass {
    int r = 0;
    int k = 0;
    long K = 0;
    PolyMatrix matrix;
    GradedPoly poly;
};

/// Porteous matrix over any table holding c_{2r}..c_{2k+2r-2}.
PolyMatrix porteous_matrix(const chern::ChernTable& table, int k);

VirtualClass virtual_class(int r, int k);

/// P_k(a, b, 0), assembled from the gamma = 0 table. Agrees with the
/// gamma = 0 specialization of the full determinant (substitution is a
/// ring homomorphism, so it commutes with det).
GradedPoly pk_gamma0(int r, int k);

/// P_k(1, b, 0); degree in b is exactly K/2.
GradedPoly pk_beta(int r, int k);

/// Exact factorization check of
///   P_k(1,b,0) = c * prod_{i=1}^{r} (b - 1/(2i-1)^2)^k
///                  * prod_{i=1}^{k-1} (b - 1/(2r+2i-1)^2)^{k-i}
/// by polynomial long division; verified means zero remainder and a
/// non-zero constant quotient. The constant is reported, never asserted
/// against a closed form.
struct FactorizationReport {
    int r = 0, k = 0;
    Rational constant;
    bool verified = false;
    std::vector<std::pair<Rational, int>> multiplicities;  // root -> multiplicity
};
FactorizationReport verify_factorization(int r, int k);

/// Hankel block A_{u,v} of the alpha = 0 sequence at b = 4: square of size
/// u-v+1 with entry (i, j) = c~_{2(u-i+j)} (1-based). Exact entries.
struct HankelBlock {
    int u = 0, v = 0, r = 0;
    std::size_t size = 0;
    std::vector<Rational> entries;  // row-major
};
HankelBlock hankel_block(int u, int v, int r);

/// det A_{u,v} mod p; requires p > max{2u-v, 2r+2u-2v-1}, u >= v >= r.
std::uint64_t hankel_det_mod_p(int u, int v, int r, std::uint64_t p);

/// Schur polynomial evaluated at all-ones, by the content/hook product
/// over exact integers. partition is weakly decreasing, non-negative.
Integer schur_ones_exact(const std::vector<int>& partition, int nvars);

/// The rectangular case of the Hankel comparison: partition
/// (u-v+1)^u in (p+2r-1)/2 variables, reduced mod p.
std::uint64_t schur_ones(int u, int v, int r, std::uint64_t p);

/// P_k(0,4,0) mod p together with its checkerboard block decomposition:
/// k odd:  det = det A_{(k+2r-1)/2, r} * det A_{(k+2r-1)/2, r+1};
/// k even: det = (-1)^{k/2} det A_{(k+2r)/2, r+1} * det A_{(k+2r-2)/2, r}
/// (sorting rows and columns by parity uses two different permutations
/// when k is even, which contributes the sign). Requires p > k+2r-2.
struct BlockDecomposition {
    std::uint64_t value = 0;       // P_k(0,4,0) mod p, by direct determinant
    std::uint64_t via_blocks = 0;  // sign * det A * det A'
    int sign = 1;
    bool agrees = false;
};
BlockDecomposition pk_alpha0_beta4_mod_p(int r, int k, std::uint64_t p);

}  // namespace bn::porteous
