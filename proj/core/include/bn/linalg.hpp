#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "bn/rational.hpp"

namespace bn {

/// Dense exact-rational matrix, just big enough for the per-degree linear
/// algebra of the quotient-ring engine. Row-major.
class RatMatrix {
public:
    RatMatrix(std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    /// In-place reduced row echelon form; returns pivot column indices.
    std::vector<std::size_t> rref();
    std::size_t rank() const;

private:
    std::size_t rows_, cols_;
    std::vector<Rational> a_;
};

/// Unique solution of A x = b when it exists and is unique, else nullopt
/// (either inconsistent or underdetermined).
std::optional<std::vector<Rational>> solve_unique(const RatMatrix& a,
                                                  const std::vector<Rational>& b);

}  // namespace bn
