#pragma once

#include <optional>
#include <string>
#include <vector>

#include "colalg/algebra.hpp"
#include "colalg/kernel.hpp"

namespace colalg {

enum class Predicate {
  AVERAGING,
  CENTROID2,
  NIJENHUIS,
  REYNOLDS2,
  ROTA_BAXTER2,
  CENTROID3,
  REYNOLDS3,
  ROTA_BAXTER3,
  MORPHISM,
  INVOLUTION_ANTIAUTO,
};

std::string to_string(Predicate p);
std::optional<Predicate> parse_predicate(const std::string& text);
const std::vector<Predicate>& all_predicates();
bool needs_weight(Predicate p);
/// 2 or 3 for predicates on a single op; 0 for MORPHISM (all ops).
std::size_t predicate_arity(Predicate p);

struct OperatorOptions {
  std::optional<Scalar> weight;
  /// Op the predicate is read on. Binary default: product2 if present, else bracket2.
  std::string op;
  std::size_t cap = kDefaultWitnessCap;
  bool parallel = true;
};

/// Op name a binary/ternary predicate reads on this object.
std::string predicate_op(const GradedAlgebraObject& obj, Predicate p, const std::string& requested = {});

/// Throws InputError for an odd or wrongly shaped map, or a missing/unexpected weight.
std::vector<Equation> operator_equations(const GradedAlgebraObject& obj, const EvenLinearMap& m, Predicate p,
                                         const OperatorOptions& opts = {});
AxiomReport check_operator(const GradedAlgebraObject& obj, const EvenLinearMap& m, Predicate p,
                           const OperatorOptions& opts = {});

/// alpha(op(x, ...)) = op'(alpha x, ...) for each named op (empty: every op of src, which dst must share).
AxiomReport check_morphism(const GradedAlgebraObject& src, const GradedAlgebraObject& dst, const EvenLinearMap& alpha,
                           const std::vector<std::string>& ops = {}, const OperatorOptions& opts = {});

}  // namespace colalg
