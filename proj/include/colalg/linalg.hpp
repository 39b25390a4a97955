#pragma once

#include <cstdint>
#include <vector>

#include "colalg/element.hpp"

namespace colalg {

/// Dense matrix of exact scalars, row-major. Small by construction (dims <= a few hundred).
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const Scalar& zero = Scalar(0))
      : rows_(rows), cols_(cols), data_(rows * cols, zero) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void append_row(const std::vector<Scalar>& row);

  /// In-place reduced row echelon form; pivots normalized to 1, zero rows dropped.
  /// Returns the pivot columns in increasing order.
  std::vector<std::size_t> rref();
  std::size_t rank() const;
  /// Basis of {v : M v = 0}, one vector per free column, in canonical echelon form.
  std::vector<std::vector<Scalar>> nullspace() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> data_;
};

/// Subspace of an n-dimensional space, held as a canonical reduced echelon basis:
/// pivots normalized to 1, pivot columns strictly increasing, pivot columns
/// cleared in every other row. Two spans are equal iff their bases are equal.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim) {}
  static Subspace span(std::size_t ambient_dim, const std::vector<GradedElement>& vectors);
  static Subspace whole(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<GradedElement>& basis() const { return basis_; }

  bool contains(const GradedElement& v) const;
  bool contains(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;
  /// Re-run canonicalization on the current basis (idempotent).
  Subspace canonicalized() const { return span(ambient_, basis_); }

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  std::size_t ambient_ = 0;
  std::vector<GradedElement> basis_;
};

}  // namespace colalg
