#pragma once

#include <optional>
#include <string>
#include <vector>

#include "colalg/algebra.hpp"
#include "colalg/kernel.hpp"
#include "colalg/report.hpp"

namespace colalg {

enum class Identity {
  ASSOC,
  EPS_COMM,
  EPS_SKEW2,
  LEIBNIZ2,
  LIE_COLOR,
  RIGHT_LEIBNIZ_COMPAT,
  LEIBNIZ_POISSON,
  TERNARY_LEIBNIZ,
  TERNARY_LIE,
  TERNARY_RIGHT_LEIBNIZ,
  TERNARY_LEIBNIZ_POISSON,
  LTS,
  JTS,
  TRIALGEBRA,
  DIALGEBRA,
  LEFT_SYMMETRIC,
  COMSTRANS,
  ACTION,
  BIMODULE2,
  BIMODULE3,
  BIMODULE3_POISSON,
  REPRESENTATION3,
};

std::string to_string(Identity id);
std::optional<Identity> parse_identity(const std::string& text);
const std::vector<Identity>& all_identities();
bool is_module_identity(Identity id);

struct CheckOptions {
  /// COMSTRANS skewness: "printed" (default) or "amended".
  std::string variant;
  /// Replace the default op of single-op identities (e.g. ASSOC on "left").
  std::string op;
  std::size_t cap = kDefaultWitnessCap;
  bool parallel = true;
};

/// The equations an identity expands to on this object (over all basis tuples).
/// For module identities the object must carry a module block.
std::vector<Equation> identity_equations(const GradedAlgebraObject& obj, Identity id, const CheckOptions& opts = {});

/// Exhaustive check over basis tuples. Module identities dispatch to
/// check_bimodule / check_representation using the object's module block.
/// Throws InputError on a missing op or an unsupported setting.
AxiomReport check_identity(const GradedAlgebraObject& obj, Identity id, const CheckOptions& opts = {});
AxiomReport check_identity(const GradedAlgebraObject& obj, const std::string& id, const CheckOptions& opts = {});

/// kind is one of ACTION, BIMODULE2, BIMODULE3, BIMODULE3_POISSON.
/// Tuples range over the combined basis of L (+) M; module names carry the "m." prefix.
AxiomReport check_bimodule(const BimoduleObject& b, Identity kind, const CheckOptions& opts = {});

/// The five lambda/mu/rho equations over algebra 4-tuples times module basis.
AxiomReport check_representation(const RepresentationObject& r, const CheckOptions& opts = {});

}  // namespace colalg
