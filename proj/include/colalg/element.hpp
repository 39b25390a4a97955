#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "colalg/grading.hpp"
#include "colalg/scalar.hpp"

namespace colalg {

struct BasisEntry {
  std::string name;
  GroupElement degree;

  friend bool operator==(const BasisEntry&, const BasisEntry&) = default;
};

/// Ordered homogeneous basis of a graded space.
class GradedBasis {
 public:
  GradedBasis() = default;
  /// Throws InputError on duplicate names.
  explicit GradedBasis(std::vector<BasisEntry> entries);

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const BasisEntry& operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<BasisEntry>& entries() const { return entries_; }
  const GroupElement& degree(std::size_t i) const { return entries_[i].degree; }
  const std::string& name(std::size_t i) const { return entries_[i].name; }
  std::optional<std::size_t> find(const std::string& name) const;

  friend bool operator==(const GradedBasis&, const GradedBasis&) = default;

 private:
  std::vector<BasisEntry> entries_;
};

/// A (coefficient, basis index) term.
struct Term {
  std::uint32_t index;
  Scalar coef;
};

/// Sparse vector over a graded basis: terms sorted by index, no zero coefficients.
class GradedElement {
 public:
  GradedElement() = default;
  static GradedElement basis(std::uint32_t index, const Scalar& one = Scalar(1));

  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  Scalar coef(std::uint32_t index) const;

  /// this += s * other
  void add_scaled(const GradedElement& other, const Scalar& s);
  void add_scaled(const std::vector<Term>& other, const Scalar& s);
  void add_term(std::uint32_t index, const Scalar& s);
  GradedElement& operator+=(const GradedElement& o);
  GradedElement& operator-=(const GradedElement& o);
  GradedElement& operator*=(const Scalar& s);
  friend GradedElement operator+(GradedElement a, const GradedElement& b) { return a += b; }
  friend GradedElement operator-(GradedElement a, const GradedElement& b) { return a -= b; }
  friend GradedElement operator*(const Scalar& s, GradedElement a) { return a *= s; }
  friend GradedElement operator-(GradedElement a) { return a *= Scalar(-1); }

  friend bool operator==(const GradedElement& a, const GradedElement& b);
  friend bool operator!=(const GradedElement& a, const GradedElement& b) { return !(a == b); }

  /// Degree if all terms share one degree; nullopt for zero or mixed elements.
  std::optional<GroupElement> degree(const GradedBasis& basis) const;

  /// "2*e1 - 1/2*e3", or "0".
  std::string to_string(const GradedBasis& basis) const;
  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

}  // namespace colalg
