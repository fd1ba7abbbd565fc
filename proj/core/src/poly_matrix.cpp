#include "bn/poly_matrix.hpp"

#include "bn/errors.hpp"

namespace bn {

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, RingPtr ring)
    : rows_(rows), cols_(cols), ring_(std::move(ring)) {
    if (rows_ == 0 || cols_ == 0) throw UsageError("PolyMatrix: empty dimensions");
    e_.assign(rows_ * cols_, GradedPoly(ring_));
}

PolyMatrix PolyMatrix::identity(std::size_t n, const RingPtr& ring) {
    PolyMatrix m(n, n, ring);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = GradedPoly::constant(ring, 1);
    return m;
}

PolyMatrix PolyMatrix::scaled_row(std::size_t row, const Rational& s) const {
    PolyMatrix m = *this;
    for (std::size_t j = 0; j < cols_; ++j) m.at(row, j) = m.at(row, j) * s;
    return m;
}

GradedPoly det_poly_matrix(const PolyMatrix& input) {
    if (input.rows() != input.cols())
        throw UsageError("det_poly_matrix: matrix is not square");
    const std::size_t n = input.rows();
    PolyMatrix m = input;
    GradedPoly prev_pivot = GradedPoly::constant(m.ring(), 1);
    bool negate = false;

    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k).is_zero()) {
            std::size_t piv = k + 1;
            while (piv < n && m.at(piv, k).is_zero()) ++piv;
            if (piv == n) return GradedPoly(m.ring());  // whole column zero
            for (std::size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(piv, j));
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                GradedPoly num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                m.at(i, j) = div_exact(num, prev_pivot);
            }
            m.at(i, k) = GradedPoly(m.ring());
        }
        prev_pivot = m.at(k, k);
    }
    GradedPoly det = m.at(n - 1, n - 1);
    return negate ? -det : det;
}

namespace {

GradedPoly det_cofactor_rec(const PolyMatrix& m, std::vector<std::size_t>& cols,
                            std::size_t row) {
    const std::size_t n = m.rows();
    if (row == n) return GradedPoly::constant(m.ring(), 1);
    GradedPoly acc(m.ring());
    for (std::size_t pos = 0; pos < cols.size(); ++pos) {
        std::size_t c = cols[pos];
        if (m.at(row, c).is_zero()) continue;
        std::vector<std::size_t> rest;
        rest.reserve(cols.size() - 1);
        for (std::size_t q = 0; q < cols.size(); ++q)
            if (q != pos) rest.push_back(cols[q]);
        GradedPoly sub = det_cofactor_rec(m, rest, row + 1);
        GradedPoly term = m.at(row, c) * sub;
        if (pos % 2 == 1) term = -term;
        acc += term;
    }
    return acc;
}

}  // namespace

GradedPoly det_cofactor(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw UsageError("det_cofactor: matrix is not square");
    std::vector<std::size_t> cols(m.cols());
    for (std::size_t j = 0; j < cols.size(); ++j) cols[j] = j;
    return det_cofactor_rec(m, cols, 0);
}

GradedPoly char_poly(const PolyMatrix& m, std::string_view z_name) {
    if (m.rows() != m.cols()) throw UsageError("char_poly: matrix is not square");
    PolyMatrix zi = m;
    GradedPoly z = GradedPoly::var(m.ring(), z_name);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            zi.at(i, j) = (i == j) ? z - m.at(i, j) : -m.at(i, j);
    return det_poly_matrix(zi);
}

}  // namespace bn
