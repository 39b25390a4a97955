#include "colalg/algebra.hpp"

#include <stdexcept>

#include "colalg/errors.hpp"

namespace colalg {

std::optional<std::size_t> op_arity(const std::string& name) {
  static const std::map<std::string, std::size_t> kArity = {
      {"product2", 2}, {"bracket2", 2}, {"left", 2},        {"middle", 2},      {"right", 2},
      {"form2", 2},    {"bracket3", 3}, {"commutator3", 3}, {"translator3", 3},
  };
  auto it = kArity.find(name);
  if (it == kArity.end()) return std::nullopt;
  return it->second;
}

std::optional<std::string> action_pattern(const std::string& name) {
  static const std::map<std::string, std::string> kPattern = {
      {"left_act", "LM"},      {"right_act", "ML"},      {"mod_bracket2", "MM"},
      {"act_MLL", "MLL"},      {"act_LML", "LML"},       {"act_LLM", "LLM"},
      {"mod_prod_left", "LM"}, {"mod_prod_right", "ML"}, {"lambda", "LLM"},
      {"mu", "LLM"},           {"rho", "LLM"},
  };
  auto it = kPattern.find(name);
  if (it == kPattern.end()) return std::nullopt;
  return it->second;
}

MultilinearOp make_action(const std::string& name, std::size_t n_alg, std::size_t n_mod) {
  const auto pattern = action_pattern(name);
  if (!pattern) throw InputError("unknown module action '" + name + "'");
  std::vector<std::size_t> dims;
  for (char c : *pattern) dims.push_back(c == 'L' ? n_alg : n_mod);
  return MultilinearOp(name, dims, n_mod);
}

const MultilinearOp& ModuleData::action(const std::string& name) const {
  auto it = actions.find(name);
  if (it == actions.end()) throw InputError("module is missing action '" + name + "'");
  return it->second;
}

const MultilinearOp& GradedAlgebraObject::op(const std::string& n) const {
  auto it = ops.find(n);
  if (it == ops.end()) throw InputError("algebra" + (name.empty() ? "" : " '" + name + "'") + " has no op '" + n + "'");
  return it->second;
}

void GradedAlgebraObject::set_op(MultilinearOp o) {
  const std::string key = o.name();
  ops.insert_or_assign(key, std::move(o));
}

const EvenLinearMap& GradedAlgebraObject::map(const std::string& n) const {
  auto it = maps.find(n);
  if (it == maps.end()) throw InputError("algebra has no map '" + n + "'");
  return it->second;
}

Scalar GradedAlgebraObject::eps(std::uint32_t i, std::uint32_t j) const {
  return bicharacter(basis.degree(i), basis.degree(j));
}

EpsTable::EpsTable(const Bicharacter& bc, const GradedBasis& basis) : n_(basis.size()) {
  values_.reserve(n_ * n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) values_.push_back(bc(basis.degree(i), basis.degree(j)));
}

BimoduleObject as_bimodule(const GradedAlgebraObject& obj) {
  if (!obj.module) throw InputError("object has no module block");
  BimoduleObject b{obj, *obj.module};
  b.algebra.module.reset();
  return b;
}

GradedAlgebraObject with_module(const BimoduleObject& b) {
  GradedAlgebraObject obj = b.algebra;
  obj.module = b.module;
  return obj;
}

GradedAlgebraObject combined_object(const BimoduleObject& b) {
  const auto& A = b.algebra;
  const std::size_t n = A.dim();
  const std::size_t k = b.module.basis.size();
  std::vector<BasisEntry> entries = A.basis.entries();
  for (const auto& e : b.module.basis.entries()) entries.push_back({"m." + e.name, e.degree});

  GradedAlgebraObject out;
  out.field = A.field;
  out.bicharacter = A.bicharacter;
  out.basis = GradedBasis(std::move(entries));
  out.name = A.name + "(+)module";

  auto embed = [&](const std::string& op_name, const std::vector<std::string>& actions) {
    const std::size_t arity = *op_arity(op_name);
    MultilinearOp op = MultilinearOp::on_space(op_name, arity, n + k);
    if (A.has_op(op_name))
      A.op(op_name).for_each([&](std::span<const std::uint32_t> args, std::uint32_t o, const Scalar& c) {
        op.add(args, o, c);
      });
    for (const auto& an : actions) {
      if (!b.module.has(an)) continue;
      const std::string pattern = *action_pattern(an);
      b.module.action(an).for_each([&](std::span<const std::uint32_t> args, std::uint32_t o, const Scalar& c) {
        std::vector<std::uint32_t> shifted(args.begin(), args.end());
        for (std::size_t s = 0; s < shifted.size(); ++s)
          if (pattern[s] == 'M') shifted[s] += static_cast<std::uint32_t>(n);
        op.add(shifted, static_cast<std::uint32_t>(o + n), c);
      });
    }
    out.set_op(std::move(op));
  };

  if (A.has_op("bracket3")) embed("bracket3", {"act_MLL", "act_LML", "act_LLM"});
  if (A.has_op("product2")) embed("product2", {"mod_prod_left", "mod_prod_right"});
  if (A.has_op("bracket2")) embed("bracket2", {"left_act", "right_act", "mod_bracket2"});
  return out;
}

namespace {

void check_op_grading(const MultilinearOp& op, const GradingGroup& G, const std::vector<const GradedBasis*>& slots,
                      const GradedBasis* out_basis, AxiomReport& report) {
  op.for_each([&](std::span<const std::uint32_t> args, std::uint32_t o, const Scalar& c) {
    ++report.checked_count;
    GroupElement sum = G.zero();
    for (std::size_t s = 0; s < args.size(); ++s) sum = G.add(sum, slots[s]->degree(args[s]));
    const bool ok = out_basis ? sum == out_basis->degree(o) : G.is_zero(sum);
    if (ok) return;
    ++report.violation_count;
    Witness w;
    w.equation = op.name() + ": deg(out) = sum deg(args)";
    w.tuple.assign(args.begin(), args.end());
    for (std::size_t s = 0; s < args.size(); ++s) w.names.push_back(slots[s]->name(args[s]));
    if (out_basis) {
      w.tuple.push_back(o);
      w.names.push_back(out_basis->name(o));
      w.lhs.add_term(o, c);
      w.lhs_text = c.to_string() + "*" + out_basis->name(o) + " of degree " + G.element_to_string(out_basis->degree(o));
    } else {
      w.lhs.add_term(0, c);
      w.lhs_text = c.to_string();
    }
    w.rhs_text = "degree " + G.element_to_string(sum);
    report.witnesses.push_back(std::move(w));
  });
}

}  // namespace

AxiomReport grading_check(const GradedAlgebraObject& obj) {
  AxiomReport report;
  report.subject = "GRADING";
  const auto& G = obj.group();
  for (const auto& [name, op] : obj.ops) {
    std::vector<const GradedBasis*> slots(op.arity(), &obj.basis);
    check_op_grading(op, G, slots, op.scalar_valued() ? nullptr : &obj.basis, report);
  }
  if (obj.module) {
    for (const auto& [name, op] : obj.module->actions) {
      const std::string pattern = *action_pattern(name);
      std::vector<const GradedBasis*> slots;
      for (char c : pattern) slots.push_back(c == 'L' ? &obj.basis : &obj.module->basis);
      check_op_grading(op, G, slots, &obj.module->basis, report);
    }
  }
  return report;
}

GradedAlgebraObject reduce_mod(const GradedAlgebraObject& obj, std::uint32_t p) {
  GradedAlgebraObject out = obj;
  try {
    out.field = Field::prime(p, true);
    out.bicharacter = obj.bicharacter.reduce_mod(p);
    auto red = [p](const Scalar& s) { return s.reduce_mod(p); };
    for (auto& [name, op] : out.ops) op = op.transformed(red);
    for (auto& [name, m] : out.maps) m = m.transformed(red);
    if (out.module)
      for (auto& [name, op] : out.module->actions) op = op.transformed(red);
  } catch (const std::domain_error& e) {
    throw InputError("cannot reduce modulo " + std::to_string(p) + ": " + e.what());
  }
  return out;
}

}  // namespace colalg
