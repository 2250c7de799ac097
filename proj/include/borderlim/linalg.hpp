#pragma once

#include "borderlim/rational.hpp"

#include <optional>
#include <vector>

namespace borderlim {

// Dense exact matrix, just enough linear algebra for the library: rank via
// fraction-free elimination, solving, inversion, determinant.
class QMatrix {
  public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    static QMatrix identity(std::size_t n);
    QMatrix transpose() const;
    QMatrix operator*(const QMatrix& o) const;
    bool operator==(const QMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_; }

    // Rank over the rationals by Bareiss fraction-free elimination on the
    // denominator-cleared integer matrix.
    std::size_t rank() const;

    Rational determinant() const;  // square only
    std::optional<QMatrix> inverse() const;

    // One solution of A x = b with free variables set to zero; nullopt when
    // inconsistent.
    std::optional<std::vector<Rational>> solve(const std::vector<Rational>& b) const;

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> data_;
};

} // namespace borderlim
