#include "bn/linalg.hpp"

#include "bn/errors.hpp"

namespace bn {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), a_(rows * cols, Rational(0)) {}

std::vector<std::size_t> RatMatrix::rref() {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
        std::size_t piv = row;
        while (piv < rows_ && at(piv, col).is_zero()) ++piv;
        if (piv == rows_) continue;
        if (piv != row)
            for (std::size_t j = 0; j < cols_; ++j) std::swap(at(piv, j), at(row, j));
        Rational inv = at(row, col).inverse();
        for (std::size_t j = col; j < cols_; ++j) at(row, j) *= inv;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == row || at(i, col).is_zero()) continue;
            Rational f = at(i, col);
            for (std::size_t j = col; j < cols_; ++j) at(i, j) -= f * at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t RatMatrix::rank() const {
    RatMatrix copy = *this;
    return copy.rref().size();
}

std::optional<std::vector<Rational>> solve_unique(const RatMatrix& a,
                                                  const std::vector<Rational>& b) {
    if (b.size() != a.rows()) throw UsageError("solve_unique: size mismatch");
    RatMatrix aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b[i];
    }
    auto pivots = aug.rref();
    // Inconsistent if the augmented column is a pivot.
    for (std::size_t p : pivots)
        if (p == a.cols()) return std::nullopt;
    // Unique only if every variable column is a pivot.
    if (pivots.size() != a.cols()) return std::nullopt;
    std::vector<Rational> x(a.cols(), Rational(0));
    for (std::size_t row = 0; row < pivots.size(); ++row) x[pivots[row]] = aug.at(row, a.cols());
    return x;
}

}  // namespace bn
