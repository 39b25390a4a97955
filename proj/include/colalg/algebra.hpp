#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "colalg/element.hpp"
#include "colalg/grading.hpp"
#include "colalg/linear_map.hpp"
#include "colalg/multilinear.hpp"
#include "colalg/report.hpp"
#include "colalg/scalar.hpp"

namespace colalg {

/// Recognized operation names and their arities.
std::optional<std::size_t> op_arity(const std::string& name);
/// Module action names; slot pattern over 'L' and 'M', output always in M.
std::optional<std::string> action_pattern(const std::string& name);

/// Module part of a bimodule: basis plus action tensors with mixed slot dims.
///   left_act     L x M -> M   (x * m)           right_act    M x L -> M   (m *' x)
///   mod_bracket2 M x M -> M   (bracket of the acted-on algebra in a color action)
///   act_MLL      M x L x L -> M                 act_LML, act_LLM likewise
///   mod_prod_left L x M -> M  (x . m)           mod_prod_right M x L -> M  (m . x)
///   lambda, mu, rho  L x L x M -> M  (representation form, see RepresentationObject)
struct ModuleData {
  GradedBasis basis;
  std::map<std::string, MultilinearOp> actions;

  bool has(const std::string& name) const { return actions.count(name) != 0; }
  const MultilinearOp& action(const std::string& name) const;
  friend bool operator==(const ModuleData&, const ModuleData&) = default;
};

/// A graded space carrying named structure-constant operations.
struct GradedAlgebraObject {
  Field field = Field::rationals();
  Bicharacter bicharacter;
  GradedBasis basis;
  std::map<std::string, MultilinearOp> ops;
  std::vector<std::string> claims;
  std::map<std::string, EvenLinearMap> maps;
  std::optional<ModuleData> module;
  std::string name;
  std::string comment;
  std::string variant;
  std::string provenance;

  const GradingGroup& group() const { return bicharacter.group(); }
  std::size_t dim() const { return basis.size(); }
  bool has_op(const std::string& n) const { return ops.count(n) != 0; }
  /// Throws InputError naming the missing op.
  const MultilinearOp& op(const std::string& n) const;
  void set_op(MultilinearOp op);
  const EvenLinearMap& map(const std::string& n) const;

  /// eps(deg e_i, deg e_j).
  Scalar eps(std::uint32_t i, std::uint32_t j) const;

  friend bool operator==(const GradedAlgebraObject&, const GradedAlgebraObject&) = default;
};

/// Cached eps over basis index pairs; sums of degrees factor by bimultiplicativity.
class EpsTable {
 public:
  EpsTable() = default;
  EpsTable(const Bicharacter& bc, const GradedBasis& basis);
  const Scalar& operator()(std::uint32_t i, std::uint32_t j) const { return values_[i * n_ + j]; }
  std::size_t size() const { return n_; }

 private:
  std::size_t n_ = 0;
  std::vector<Scalar> values_;
};

struct BimoduleObject {
  GradedAlgebraObject algebra;
  ModuleData module;
};

/// lambda(x, y, m) = lambda_{x,y}(m), mu(x, y, m) = mu_{x,y}(m), rho(x, y, m) = rho_{x,y}(m);
/// all three have slots (L, L, M) -> M.
struct RepresentationObject {
  GradedAlgebraObject algebra;
  GradedBasis module_basis;
  MultilinearOp lambda, mu, rho;
};

/// Split a document-level object carrying a module block.
BimoduleObject as_bimodule(const GradedAlgebraObject& obj);
GradedAlgebraObject with_module(const BimoduleObject& b);

/// L (+) M with module names prefixed "m." and every op extended by the actions:
/// bracket3 by act_*, product2 by mod_prod_*, bracket2 by left_act/right_act/mod_bracket2.
GradedAlgebraObject combined_object(const BimoduleObject& b);

/// Pass iff every nonzero constant of every op (and module action) lands in the sum degree.
AxiomReport grading_check(const GradedAlgebraObject& obj);

/// Reduce all constants, maps and bicharacter values into GF(p).
/// Throws InputError if a denominator is divisible by p.
GradedAlgebraObject reduce_mod(const GradedAlgebraObject& obj, std::uint32_t p);

/// Pattern-typed constructors for module tensors.
MultilinearOp make_action(const std::string& name, std::size_t n_alg, std::size_t n_mod);

}  // namespace colalg
