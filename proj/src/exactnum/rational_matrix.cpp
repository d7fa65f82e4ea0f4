#include "ueaspin/rational_matrix.hpp"

#include <stdexcept>
#include <utility>

namespace ueaspin {

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Rational(1);
  return m;
}

RationalMatrix RationalMatrix::from_columns(const std::vector<RationalVector>& columns, std::size_t rows) {
  RationalMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw std::invalid_argument("RationalMatrix::from_columns: ragged columns");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("RationalMatrix: shape mismatch");
  RationalMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        if (!rhs(k, j).is_zero()) out(i, j) += a * rhs(k, j);
      }
    }
  }
  return out;
}

RationalVector RationalMatrix::operator*(const RationalVector& v) const {
  if (cols_ != v.size()) throw std::invalid_argument("RationalMatrix: shape mismatch");
  RationalVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      if (!v[k].is_zero() && !(*this)(i, k).is_zero()) out[i] += (*this)(i, k) * v[k];
    }
  }
  return out;
}

namespace {

// Gauss-Jordan on an augmented matrix. Returns the pivot columns found among
// the first `pivot_cols` columns.
std::vector<std::size_t> gauss_jordan(RationalMatrix& m, std::size_t pivot_cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < pivot_cols && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && m(sel, col).is_zero()) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(sel, c), m(row, c));
    }
    const Rational inv = Rational(1) / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) {
      if (!m(row, c).is_zero()) m(row, c) *= inv;
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const Rational f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) {
        if (!m(row, c).is_zero()) m(r, c) -= f * m(row, c);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t RationalMatrix::rank() const {
  RationalMatrix copy = *this;
  return gauss_jordan(copy, cols_).size();
}

std::optional<RationalMatrix> RationalMatrix::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("RationalMatrix::inverse: not square");
  const std::size_t n = rows_;
  RationalMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = (*this)(i, j);
    aug(i, n + i) = Rational(1);
  }
  if (gauss_jordan(aug, n).size() != n) return std::nullopt;
  RationalMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  }
  return inv;
}

std::optional<RationalVector> RationalMatrix::solve(const RationalVector& rhs) const {
  if (rows_ != cols_ || rhs.size() != rows_) throw std::invalid_argument("RationalMatrix::solve: shape mismatch");
  const std::size_t n = rows_;
  RationalMatrix aug(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = (*this)(i, j);
    aug(i, n) = rhs[i];
  }
  if (gauss_jordan(aug, n).size() != n) return std::nullopt;
  RationalVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = aug(i, n);
  return x;
}

void EchelonBasis::reduce(RationalVector& v) const {
  for (const auto& [pivot, row] : rows_) {
    if (v[pivot].is_zero()) continue;
    const Rational f = v[pivot];
    for (std::size_t c = pivot; c < dimension_; ++c) {
      if (!row[c].is_zero()) v[c] -= f * row[c];
    }
  }
}

bool EchelonBasis::insert(RationalVector v) {
  if (v.size() != dimension_) throw std::invalid_argument("EchelonBasis: wrong vector length");
  reduce(v);
  std::size_t pivot = 0;
  while (pivot < dimension_ && v[pivot].is_zero()) ++pivot;
  if (pivot == dimension_) return false;
  const Rational inv = Rational(1) / v[pivot];
  for (std::size_t c = pivot; c < dimension_; ++c) {
    if (!v[c].is_zero()) v[c] *= inv;
  }
  // Keep existing rows reduced against the new pivot so reduce() stays a
  // single forward pass.
  for (auto& [p, row] : rows_) {
    if (row[pivot].is_zero()) continue;
    const Rational f = row[pivot];
    for (std::size_t c = pivot; c < dimension_; ++c) {
      if (!v[c].is_zero()) row[c] -= f * v[c];
    }
  }
  rows_.emplace(pivot, std::move(v));
  return true;
}

bool EchelonBasis::contains(RationalVector v) const {
  if (v.size() != dimension_) throw std::invalid_argument("EchelonBasis: wrong vector length");
  reduce(v);
  for (const auto& c : v) {
    if (!c.is_zero()) return false;
  }
  return true;
}

}  // namespace ueaspin
