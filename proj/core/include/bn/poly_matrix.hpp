#pragma once

#include <vector>

#include "bn/poly.hpp"

namespace bn {

/// Rectangular matrix of polynomials sharing one ring.
class PolyMatrix {
public:
    PolyMatrix(std::size_t rows, std::size_t cols, RingPtr ring);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const RingPtr& ring() const { return ring_; }
    GradedPoly& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const GradedPoly& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    static PolyMatrix identity(std::size_t n, const RingPtr& ring);
    PolyMatrix scaled_row(std::size_t row, const Rational& s) const;

private:
    std::size_t rows_, cols_;
    RingPtr ring_;
    std::vector<GradedPoly> e_;
};

/// Exact determinant by fraction-free Bareiss elimination over the
/// polynomial ring; every interior division is exact. Square input only.
GradedPoly det_poly_matrix(const PolyMatrix& m);

/// Laplace cofactor expansion, kept as an independent oracle for small
/// sizes (exponential, intended for n <= 5 cross-checks).
GradedPoly det_cofactor(const PolyMatrix& m);

/// det(zI - M) for square M whose ring contains the variable `z_name`.
GradedPoly char_poly(const PolyMatrix& m, std::string_view z_name);

}  // namespace bn
