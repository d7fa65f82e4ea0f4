#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "ueaspin/rational.hpp"

namespace ueaspin {

using RationalVector = std::vector<Rational>;

/// Dense row-major matrix over the rationals with exact Gauss-Jordan
/// elimination.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RationalMatrix identity(std::size_t n);
  /// Matrix whose columns are the given vectors (all of length `rows`).
  static RationalMatrix from_columns(const std::vector<RationalVector>& columns, std::size_t rows);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  [[nodiscard]] RationalMatrix operator*(const RationalMatrix& rhs) const;
  [[nodiscard]] RationalVector operator*(const RationalVector& v) const;
  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

  [[nodiscard]] std::size_t rank() const;
  /// Inverse of a square matrix; std::nullopt when singular.
  [[nodiscard]] std::optional<RationalMatrix> inverse() const;
  /// Unique solution of a square system; std::nullopt when singular.
  [[nodiscard]] std::optional<RationalVector> solve(const RationalVector& rhs) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Incrementally maintained echelon basis; answers "does this vector enlarge
/// the span?" exactly.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t dimension) : dimension_(dimension) {}

  /// Adds v if it is independent of the vectors seen so far; returns whether
  /// it was added.
  bool insert(RationalVector v);
  [[nodiscard]] bool contains(RationalVector v) const;
  [[nodiscard]] std::size_t rank() const { return rows_.size(); }

 private:
  void reduce(RationalVector& v) const;
  std::size_t dimension_;
  std::map<std::size_t, RationalVector> rows_;  // pivot column -> row with leading 1
};

}  // namespace ueaspin
