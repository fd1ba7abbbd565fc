#include "bn/porteous.hpp"

#include "bn/errors.hpp"
#include "bn/fp.hpp"

namespace bn::porteous {

namespace {

void check_rk(int r, int k) {
    if (r < 1 || k < 1) throw UsageError("porteous: r, k must be >= 1");
}

}  // namespace

PolyMatrix porteous_matrix(const chern::ChernTable& table, int k) {
    const int r = table.r;
    if (table.N < 2 * k + 2 * r - 2)
        throw UsageError("porteous_matrix: table too short");
    PolyMatrix m(static_cast<std::size_t>(k), static_cast<std::size_t>(k), abg_ring());
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k; ++j)
            m.at(i - 1, j - 1) = table.at(k + 2 * r - 1 - i + j);
    return m;
}

VirtualClass virtual_class(int r, int k) {
    check_rk(r, k);
    chern::ChernTable table = chern::full_table(r, 2 * k + 2 * r - 2);
    PolyMatrix m = porteous_matrix(table, k);
    GradedPoly det = det_poly_matrix(m);
    return VirtualClass{r, k, static_cast<long>(k) * (k + 2 * r - 1), std::move(m),
                        std::move(det)};
}

GradedPoly pk_gamma0(int r, int k) {
    check_rk(r, k);
    chern::ChernTable table = chern::gamma0_table(r, 2 * k + 2 * r - 2);
    return det_poly_matrix(porteous_matrix(table, k));
}

GradedPoly pk_beta(int r, int k) {
    return pk_gamma0(r, k).specialize({{"a", Rational(1)}});
}

FactorizationReport verify_factorization(int r, int k) {
    check_rk(r, k);
    FactorizationReport rep;
    rep.r = r;
    rep.k = k;

    GradedPoly b = GradedPoly::var(abg_ring(), "b");
    GradedPoly product = GradedPoly::constant(abg_ring(), 1);
    auto root = [](long odd) { return Rational(1, odd * odd); };
    for (int i = 1; i <= r; ++i) {
        rep.multiplicities.emplace_back(root(2L * i - 1), k);
        product = product * (b - GradedPoly::constant(abg_ring(), root(2L * i - 1))).pow(k);
    }
    for (int i = 1; i <= k - 1; ++i) {
        rep.multiplicities.emplace_back(root(2L * r + 2 * i - 1), k - i);
        product =
            product * (b - GradedPoly::constant(abg_ring(), root(2L * r + 2 * i - 1))).pow(k - i);
    }

    DivRem qr = divrem(pk_beta(r, k), product);
    if (!qr.remainder.is_zero())
        throw InternalCheckError("verify_factorization: division left a remainder");
    rep.constant = qr.quotient.const_value();  // throws if quotient non-constant
    rep.verified = !rep.constant.is_zero();
    return rep;
}

HankelBlock hankel_block(int u, int v, int r) {
    if (!(u >= v && v >= r && r >= 1))
        throw UsageError("hankel_block: requires u >= v >= r >= 1");
    HankelBlock blk;
    blk.u = u;
    blk.v = v;
    blk.r = r;
    blk.size = static_cast<std::size_t>(u - v + 1);
    blk.entries.reserve(blk.size * blk.size);
    for (int i = 1; i <= u - v + 1; ++i)
        for (int j = 1; j <= u - v + 1; ++j)
            blk.entries.push_back(chern::tilde_c_at4(2L * (u - i + j), r));
    return blk;
}

std::uint64_t hankel_det_mod_p(int u, int v, int r, std::uint64_t p) {
    if (p <= std::uint64_t(std::max(2 * u - v, 2 * r + 2 * u - 2 * v - 1)))
        throw UsageError("hankel_det_mod_p: requires p > max{2u-v, 2r+2u-2v-1}");
    HankelBlock blk = hankel_block(u, v, r);
    Fp f(p);
    std::vector<std::uint64_t> m;
    m.reserve(blk.entries.size());
    for (const Rational& q : blk.entries) m.push_back(f.reduce(q));
    return det_mod_p(f, std::move(m), blk.size);
}

Integer schur_ones_exact(const std::vector<int>& partition, int nvars) {
    for (std::size_t i = 0; i < partition.size(); ++i) {
        if (partition[i] < 0 || (i > 0 && partition[i] > partition[i - 1]))
            throw UsageError("schur_ones_exact: not a partition");
    }
    if (static_cast<int>(partition.size()) > nvars) {
        // more rows than variables: empty SSYT set unless trailing rows are 0
        for (std::size_t i = static_cast<std::size_t>(nvars); i < partition.size(); ++i)
            if (partition[i] > 0) return 0;
    }
    // content/hook product: prod_cells (N + j - i) / hook(i, j)
    std::vector<int> conj;  // column lengths
    if (!partition.empty()) {
        conj.assign(static_cast<std::size_t>(partition[0]), 0);
        for (int row_len : partition)
            for (int j = 0; j < row_len; ++j) conj[static_cast<std::size_t>(j)] += 1;
    }
    Integer num = 1, den = 1;
    for (std::size_t i = 0; i < partition.size(); ++i) {
        for (int j = 0; j < partition[i]; ++j) {
            long content = static_cast<long>(j) - static_cast<long>(i);
            num *= Integer(nvars + content);
            long arm = partition[i] - 1 - j;
            long leg = conj[static_cast<std::size_t>(j)] - 1 - static_cast<long>(i);
            den *= Integer(arm + leg + 1);
        }
    }
    Integer q, rem;
    mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (rem != 0) throw InternalCheckError("schur_ones_exact: hook product not integral");
    return q;
}

std::uint64_t schur_ones(int u, int v, int r, std::uint64_t p) {
    if (p <= std::uint64_t(std::max(2 * u - v, 2 * r + 2 * u - 2 * v - 1)))
        throw UsageError("schur_ones: requires p > max{2u-v, 2r+2u-2v-1}");
    if (!(u >= v && v >= r && r >= 1))
        throw UsageError("schur_ones: requires u >= v >= r >= 1");
    int nvars = static_cast<int>((p + 2 * r - 1) / 2);
    std::vector<int> partition(static_cast<std::size_t>(u), u - v + 1);
    Fp f(p);
    return f.reduce(schur_ones_exact(partition, nvars));
}

BlockDecomposition pk_alpha0_beta4_mod_p(int r, int k, std::uint64_t p) {
    check_rk(r, k);
    if (p <= std::uint64_t(k + 2 * r - 2))
        throw UsageError("pk_alpha0_beta4_mod_p: requires p > k+2r-2");
    Fp f(p);

    // direct route: the Porteous determinant at (a, b) = (0, 4), mod p
    std::vector<std::uint64_t> m;
    m.reserve(static_cast<std::size_t>(k) * k);
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k; ++j)
            m.push_back(f.reduce(chern::tilde_c_at4(k + 2 * r - 1 - i + j, r)));
    BlockDecomposition out;
    out.value = det_mod_p(f, std::move(m), static_cast<std::size_t>(k));

    // empty parity class (k = 1): the corresponding block is 0x0, det = 1
    auto block_det = [&](int u, int v) -> std::uint64_t {
        if (u - v + 1 <= 0) return 1;
        return hankel_det_mod_p(u, v, r, p);
    };
    std::uint64_t blocks;
    if (k % 2 == 1) {
        out.sign = 1;
        blocks = f.mul(block_det((k + 2 * r - 1) / 2, r),
                       block_det((k + 2 * r - 1) / 2, r + 1));
    } else {
        out.sign = (k / 2) % 2 == 0 ? 1 : -1;
        blocks = f.mul(block_det((k + 2 * r) / 2, r + 1),
                       block_det((k + 2 * r - 2) / 2, r));
    }
    out.via_blocks = out.sign == 1 ? blocks : f.neg(blocks);
    out.agrees = out.value == out.via_blocks;
    return out;
}

}  // namespace bn::porteous
