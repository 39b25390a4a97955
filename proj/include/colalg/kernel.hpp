#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "colalg/element.hpp"
#include "colalg/report.hpp"

namespace colalg {

/// One multilinear equation lhs(t) = rhs(t), quantified over basis tuples t
/// drawn from per-position candidate index lists.
struct Equation {
  std::string id;
  std::vector<std::vector<std::uint32_t>> domains;
  /// Optional tuple filter; filtered-out tuples are not counted as checked.
  std::function<bool(std::span<const std::uint32_t>)> filter;
  std::function<void(std::span<const std::uint32_t>, GradedElement& lhs, GradedElement& rhs)> eval;
  /// lhs/rhs hold a scalar as the coefficient of index 0.
  bool scalar = false;

  std::uint64_t tuple_count() const;
  /// Tuple number k in row-major order over the domains.
  void tuple_at(std::uint64_t k, std::vector<std::uint32_t>& out) const;
};

inline constexpr std::size_t kDefaultWitnessCap = 16;
inline constexpr std::size_t kUnlimited = std::numeric_limits<std::size_t>::max();

struct KernelOptions {
  std::size_t cap = kDefaultWitnessCap;
  bool parallel = true;
  /// Basis for rendering lhs/rhs when values live in another space than the tuple entries.
  const GradedBasis* value_basis = nullptr;
};

/// Candidate list 0..n-1.
std::vector<std::uint32_t> index_range(std::size_t n);
std::vector<std::uint32_t> index_range(std::size_t begin, std::size_t end);

/// Evaluate every equation on every tuple. Witnesses are ordered by
/// (equation, tuple) and truncated at the cap; counts are always exact.
/// The parallel path splits each equation's tuple space into contiguous
/// per-thread blocks, so its output is identical to the serial one.
AxiomReport run_equations(const std::string& subject, const std::vector<Equation>& eqs, const GradedBasis& basis,
                          const KernelOptions& opts = {});
AxiomReport run_equations_serial(const std::string& subject, const std::vector<Equation>& eqs,
                                 const GradedBasis& basis, std::size_t cap = kDefaultWitnessCap,
                                 const GradedBasis* value_basis = nullptr);

}  // namespace colalg
