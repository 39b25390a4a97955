#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "colalg/algebra.hpp"
#include "colalg/linalg.hpp"
#include "colalg/operators.hpp"

namespace colalg {

struct StructureSubspaces {
  Subspace left_center;   // {c : [c, L] = 0}
  Subspace right_center;  // {c : [L, c] = 0}
  Subspace center;
  Subspace leibniz_kernel;
};

/// Centers and Leibniz kernel of bracket2. Throws PreconditionError if LEIBNIZ2 fails.
StructureSubspaces structure_subspaces(const GradedAlgebraObject& L, std::size_t cap = 16, bool parallel = true);

/// Spanning set of the Leibniz kernel: [e_i, e_j] + eps(e_i, e_j)[e_j, e_i] for i <= j.
/// On an odd diagonal the generator vanishes, matching R_[x,x] = 0 only for eps(x,x) = 1.
std::vector<GradedElement> leibniz_generators(const GradedAlgebraObject& L);

/// Echelon basis of the even maps theta with theta(op(..)) = op(theta x, ..) = ... in every slot.
/// Arity 2 reads on product2 when present, else bracket2; arity 3 on bracket3.
std::vector<EvenLinearMap> centroid_space(const GradedAlgebraObject& L, std::size_t arity);

/// Unknown layout shared by centroid_space and search_operators: even entries (row, col), row-major.
std::vector<std::pair<std::uint32_t, std::uint32_t>> even_entries(const GradedBasis& basis);

struct SearchConfig {
  std::uint32_t prime = 3;
  bool allow_char2 = false;
  Predicate predicate = Predicate::CENTROID2;
  std::optional<Scalar> weight;
  /// Op override as in OperatorOptions.
  std::string op;
  /// Largest admissible p^(number of even entries).
  std::uint64_t budget = 1u << 22;
  std::size_t result_cap = 1u << 16;
  bool parallel = true;
};

struct SearchResult {
  /// The algebra as searched (reduced to GF(p) when the input was rational).
  GradedAlgebraObject algebra;
  /// Matching maps in enumeration order, at most result_cap of them.
  std::vector<EvenLinearMap> maps;
  std::uint64_t candidates = 0;
  /// Exact number of matches, also beyond the cap.
  std::uint64_t matches = 0;
  bool truncated() const { return matches > maps.size(); }
};

/// Exhaustive enumeration of even maps over GF(p): digit order 0..p-1, first even entry most
/// significant. Throws InputError for a bad prime, an incompatible field or an exceeded budget.
SearchResult search_operators(const GradedAlgebraObject& L, const SearchConfig& cfg);
/// Same enumeration on one thread.
SearchResult search_operators_serial(const GradedAlgebraObject& L, const SearchConfig& cfg);
/// Same enumeration filtered by check_operator. Slow; kept as the test oracle for the dense kernels.
SearchResult search_operators_reference(const GradedAlgebraObject& L, const SearchConfig& cfg);

}  // namespace colalg
