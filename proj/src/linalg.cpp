#include "borderlim/linalg.hpp"

#include "borderlim/errors.hpp"

namespace borderlim {

QMatrix QMatrix::identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

QMatrix QMatrix::transpose() const {
    QMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
    if (cols_ != o.rows_) throw error("matrix dimension mismatch in product");
    QMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            if (at(i, k) == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
        }
    return r;
}

std::size_t QMatrix::rank() const {
    if (rows_ == 0 || cols_ == 0) return 0;
    // clear denominators per row, then run Bareiss on integers
    std::vector<std::vector<Integer>> m(rows_, std::vector<Integer>(cols_));
    for (std::size_t i = 0; i < rows_; ++i) {
        Integer lcm = 1;
        for (std::size_t j = 0; j < cols_; ++j) {
            Integer d = denominator(at(i, j));
            lcm = boost::multiprecision::lcm(lcm, d);
        }
        for (std::size_t j = 0; j < cols_; ++j)
            m[i][j] = numerator(at(i, j)) * (lcm / denominator(at(i, j)));
    }

    std::size_t rank = 0;
    Integer prev = 1;
    for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows_ && m[pivot][col] == 0) ++pivot;
        if (pivot == rows_) continue;
        std::swap(m[rank], m[pivot]);
        for (std::size_t i = rank + 1; i < rows_; ++i) {
            for (std::size_t j = col + 1; j < cols_; ++j)
                m[i][j] = (m[rank][col] * m[i][j] - m[i][col] * m[rank][j]) / prev;
            m[i][col] = 0;
        }
        prev = m[rank][col];
        ++rank;
    }
    return rank;
}

namespace {

// row echelon on an augmented rational matrix; returns pivot column per row
std::vector<std::size_t> echelon(QMatrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && m.at(p, col) == 0) ++p;
        if (p == m.rows()) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(row, j), m.at(p, j));
        Rational inv = m.at(row, col);
        for (std::size_t j = col; j < m.cols(); ++j) m.at(row, j) /= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col) == 0) continue;
            Rational f = m.at(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

Rational QMatrix::determinant() const {
    if (rows_ != cols_) throw error("determinant of a non-square matrix");
    QMatrix m = *this;
    Rational det = 1;
    for (std::size_t col = 0; col < cols_; ++col) {
        std::size_t p = col;
        while (p < rows_ && m.at(p, col) == 0) ++p;
        if (p == rows_) return 0;
        if (p != col) {
            for (std::size_t j = 0; j < cols_; ++j) std::swap(m.at(col, j), m.at(p, j));
            det = -det;
        }
        det *= m.at(col, col);
        Rational inv = m.at(col, col);
        for (std::size_t i = col + 1; i < rows_; ++i) {
            if (m.at(i, col) == 0) continue;
            Rational f = m.at(i, col) / inv;
            for (std::size_t j = col; j < cols_; ++j) m.at(i, j) -= f * m.at(col, j);
        }
    }
    return det;
}

std::optional<QMatrix> QMatrix::inverse() const {
    if (rows_ != cols_) throw error("inverse of a non-square matrix");
    QMatrix aug(rows_, 2 * cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_ + i) = 1;
    }
    auto pivots = echelon(aug);
    if (pivots.size() != rows_ || pivots.back() >= cols_) return std::nullopt;
    QMatrix inv(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) inv.at(i, j) = aug.at(i, cols_ + j);
    return inv;
}

std::optional<std::vector<Rational>> QMatrix::solve(const std::vector<Rational>& b) const {
    if (b.size() != rows_) throw error("right-hand side has wrong length");
    QMatrix aug(rows_, cols_ + 1);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_) = b[i];
    }
    auto pivots = echelon(aug);
    if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;  // 0 = 1 row
    std::vector<Rational> x(cols_, Rational(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, cols_);
    return x;
}

} // namespace borderlim
