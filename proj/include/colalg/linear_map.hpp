#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "colalg/element.hpp"
#include "colalg/report.hpp"

namespace colalg {

/// Linear map between graded spaces, stored column-wise: column j is the
/// image of the j-th domain basis vector. Evenness is a checked property,
/// not a construction invariant, so odd maps can be represented and rejected.
class EvenLinearMap {
 public:
  EvenLinearMap() = default;
  EvenLinearMap(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

  static EvenLinearMap identity(std::size_t n);
  static EvenLinearMap homothety(std::size_t n, const Scalar& s);
  static EvenLinearMap zero(std::size_t n) { return EvenLinearMap(n, n); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return columns_.size(); }
  bool is_square() const { return rows_ == cols(); }

  Scalar entry(std::size_t row, std::size_t col) const;
  void set(std::size_t row, std::size_t col, const Scalar& v);
  const GradedElement& column(std::size_t col) const { return columns_[col]; }
  void set_column(std::size_t col, GradedElement image) { columns_[col] = std::move(image); }

  GradedElement operator()(const GradedElement& x) const;
  GradedElement on_basis(std::uint32_t j) const { return columns_[j]; }

  /// (this o other)(x) = this(other(x)).
  EvenLinearMap compose(const EvenLinearMap& other) const;
  EvenLinearMap transformed(const std::function<Scalar(const Scalar&)>& f) const;

  /// Rank over the coefficient field.
  std::size_t rank() const;
  bool injective() const { return rank() == cols(); }

  /// Pass iff every nonzero entry (i, j) joins basis vectors of equal degree.
  AxiomReport check_even(const GradedBasis& codomain, const GradedBasis& domain) const;
  AxiomReport check_even(const GradedBasis& basis) const { return check_even(basis, basis); }

  friend bool operator==(const EvenLinearMap&, const EvenLinearMap&) = default;

 private:
  std::size_t rows_ = 0;
  std::vector<GradedElement> columns_;
};

}  // namespace colalg
