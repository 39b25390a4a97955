#pragma once

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "colalg/element.hpp"

namespace colalg {

/// Sparse structure-constant tensor of arity 2 or 3.
///
/// Each slot has its own index range (so module actions such as M x L x L -> M
/// fit the same type). Algebra-valued ops map basis tuples to elements of an
/// output space of dimension out_dim; scalar-valued ops (bilinear forms) have
/// out_dim == 0 and store their value as the coefficient of index 0.
///
/// Constants are kept sorted by the row-major flattening of the argument tuple,
/// which is lexicographic tuple order.
class MultilinearOp {
 public:
  struct Entry {
    std::uint64_t key;
    std::vector<Term> out;
  };

  MultilinearOp() = default;
  MultilinearOp(std::string name, std::vector<std::size_t> slot_dims, std::size_t out_dim);
  /// Square op on a single n-dimensional space.
  static MultilinearOp on_space(std::string name, std::size_t arity, std::size_t n, bool scalar_valued = false);

  const std::string& name() const { return name_; }
  std::size_t arity() const { return slot_dims_.size(); }
  const std::vector<std::size_t>& slot_dims() const { return slot_dims_; }
  std::size_t out_dim() const { return out_dim_; }
  bool scalar_valued() const { return out_dim_ == 0; }
  std::size_t nonzero_count() const;
  bool is_zero() const { return entries_.empty(); }

  /// Add c to the constant (args -> out). Throws InputError on index range errors.
  void add(std::span<const std::uint32_t> args, std::uint32_t out, const Scalar& c);
  void add(std::initializer_list<std::uint32_t> args, std::uint32_t out, const Scalar& c) {
    add(std::span<const std::uint32_t>(args.begin(), args.size()), out, c);
  }
  void add_scalar(std::span<const std::uint32_t> args, const Scalar& c) { add(args, 0, c); }
  void add_element(std::span<const std::uint32_t> args, const GradedElement& value);

  /// Value on a basis tuple (empty when zero).
  const std::vector<Term>& on_basis(std::span<const std::uint32_t> args) const;
  const std::vector<Term>& on_basis(std::uint32_t a, std::uint32_t b) const;
  const std::vector<Term>& on_basis(std::uint32_t a, std::uint32_t b, std::uint32_t c) const;

  /// Multilinear evaluation. Throws InputError on arity mismatch.
  GradedElement apply(std::span<const GradedElement* const> args) const;
  GradedElement operator()(const GradedElement& a, const GradedElement& b) const;
  GradedElement operator()(const GradedElement& a, const GradedElement& b, const GradedElement& c) const;
  Scalar apply_scalar(const GradedElement& a, const GradedElement& b) const;

  const std::vector<Entry>& entries() const { return entries_; }
  std::vector<std::uint32_t> unflatten(std::uint64_t key) const;
  std::uint64_t flatten(std::span<const std::uint32_t> args) const;

  /// Visit every nonzero constant as (args, out index, coefficient).
  void for_each(const std::function<void(std::span<const std::uint32_t>, std::uint32_t, const Scalar&)>& f) const;

  /// Apply f to every coefficient (dropping zeros), e.g. reduction mod p.
  MultilinearOp transformed(const std::function<Scalar(const Scalar&)>& f) const;
  MultilinearOp renamed(std::string name) const;

  friend bool operator==(const MultilinearOp& a, const MultilinearOp& b);

 private:
  void check_args(std::span<const std::uint32_t> args) const;

  std::string name_;
  std::vector<std::size_t> slot_dims_;
  std::size_t out_dim_ = 0;
  std::vector<Entry> entries_;
};

/// Build an algebra-valued op on an n-dimensional space by evaluating f on every basis tuple.
MultilinearOp tabulate(std::string name, std::size_t arity, std::size_t n,
                       const std::function<GradedElement(std::span<const std::uint32_t>)>& f);

}  // namespace colalg
