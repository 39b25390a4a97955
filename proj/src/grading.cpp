#include "colalg/grading.hpp"

#include <sstream>

#include "colalg/errors.hpp"

namespace colalg {

GradingGroup::GradingGroup(std::size_t free_rank, std::vector<std::int64_t> torsion)
    : free_rank_(free_rank), torsion_(std::move(torsion)) {
  for (auto m : torsion_)
    if (m < 2) throw InputError("torsion order " + std::to_string(m) + " is below 2");
}

void GradingGroup::check_length(const GroupElement& a) const {
  if (a.coords.size() != rank())
    throw InputError("group element has " + std::to_string(a.coords.size()) +
                     " coordinates, expected " + std::to_string(rank()));
}

GroupElement GradingGroup::element(std::vector<std::int64_t> coords) const {
  GroupElement g{std::move(coords)};
  check_length(g);
  for (std::size_t k = 0; k < torsion_.size(); ++k) {
    auto& c = g.coords[free_rank_ + k];
    c %= torsion_[k];
    if (c < 0) c += torsion_[k];
  }
  return g;
}

GroupElement GradingGroup::add(const GroupElement& a, const GroupElement& b) const {
  check_length(a);
  check_length(b);
  std::vector<std::int64_t> c(rank());
  for (std::size_t i = 0; i < rank(); ++i) c[i] = a.coords[i] + b.coords[i];
  return element(std::move(c));
}

GroupElement GradingGroup::negate(const GroupElement& a) const {
  check_length(a);
  std::vector<std::int64_t> c(rank());
  for (std::size_t i = 0; i < rank(); ++i) c[i] = -a.coords[i];
  return element(std::move(c));
}

bool GradingGroup::is_zero(const GroupElement& a) const {
  for (auto c : a.coords)
    if (c != 0) return false;
  return true;
}

std::string GradingGroup::element_to_string(const GroupElement& a) const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < a.coords.size(); ++i) os << (i ? "," : "") << a.coords[i];
  os << ')';
  return os.str();
}

std::string to_string(BuiltinBicharacter b) {
  switch (b) {
    case BuiltinBicharacter::Z2: return "Z2";
    case BuiltinBicharacter::Z2n: return "Z2n";
    case BuiltinBicharacter::Z2xZ2: return "Z2xZ2";
    case BuiltinBicharacter::ZxZ: return "ZxZ";
  }
  return {};
}

std::optional<BuiltinBicharacter> parse_builtin_bicharacter(const std::string& name) {
  if (name == "Z2") return BuiltinBicharacter::Z2;
  if (name == "Z2n") return BuiltinBicharacter::Z2n;
  if (name == "Z2xZ2") return BuiltinBicharacter::Z2xZ2;
  if (name == "ZxZ") return BuiltinBicharacter::ZxZ;
  return std::nullopt;
}

Bicharacter::Bicharacter(GradingGroup group, std::vector<std::vector<Scalar>> table)
    : group_(std::move(group)), table_(std::move(table)) {
  const std::size_t r = group_.rank();
  if (table_.size() != r)
    throw InputError("bicharacter table has " + std::to_string(table_.size()) + " rows, group rank is " +
                     std::to_string(r));
  for (std::size_t i = 0; i < r; ++i) {
    if (table_[i].size() != r)
      throw InputError("bicharacter table row " + std::to_string(i) + " has wrong length");
    for (std::size_t j = 0; j < r; ++j)
      if (table_[i][j].is_zero())
        throw InputError("bicharacter table entry [" + std::to_string(i) + "][" + std::to_string(j) +
                         "] is zero");
  }
}

Bicharacter Bicharacter::builtin(BuiltinBicharacter which, const Field& field, std::size_t n) {
  const Scalar one = field.one(), minus = -field.one();
  Bicharacter bc;
  switch (which) {
    case BuiltinBicharacter::Z2:
      bc = Bicharacter(GradingGroup(0, {2}), {{minus}});
      break;
    case BuiltinBicharacter::Z2n: {
      // (-1)^(sum a_i b_i)
      std::vector<std::vector<Scalar>> t(n, std::vector<Scalar>(n, one));
      for (std::size_t i = 0; i < n; ++i) t[i][i] = minus;
      bc = Bicharacter(GradingGroup(0, std::vector<std::int64_t>(n, 2)), std::move(t));
      break;
    }
    case BuiltinBicharacter::Z2xZ2:
      // (-1)^(i1 j2 - i2 j1)
      bc = Bicharacter(GradingGroup(0, {2, 2}), {{one, minus}, {minus, one}});
      break;
    case BuiltinBicharacter::ZxZ:
      // (-1)^((i1 + i2)(j1 + j2))
      bc = Bicharacter(GradingGroup(2, {}), {{minus, minus}, {minus, minus}});
      break;
  }
  bc.builtin_ = which;
  return bc;
}

Bicharacter Bicharacter::trivial(const Field&) { return Bicharacter(GradingGroup::trivial(), {}); }

Scalar Bicharacter::operator()(const GroupElement& a, const GroupElement& b) const {
  const std::size_t r = group_.rank();
  if (a.coords.size() != r || b.coords.size() != r)
    throw InputError("bicharacter argument has wrong coordinate length");
  Scalar result(1);
  bool have_field = false;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      const std::int64_t e = a.coords[i] * b.coords[j];
      if (!have_field) {
        // Seed the product in the table's field so the result is never a bare rational 1.
        result = table_[i][j].pow(0);
        have_field = true;
      }
      if (e != 0) result *= table_[i][j].pow(e);
    }
  return result;
}

AxiomReport Bicharacter::validate() const {
  AxiomReport report;
  report.subject = "BICHARACTER";
  const std::size_t r = group_.rank();
  const std::size_t fr = group_.free_rank();
  auto scalar_element = [](const Scalar& s) {
    GradedElement e;
    e.add_term(0, s);
    return e;
  };
  auto witness = [&](std::string eq, std::size_t i, std::size_t j, const Scalar& lhs) {
    Witness w;
    w.equation = std::move(eq);
    w.tuple = {static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)};
    w.names = {"g" + std::to_string(i), "g" + std::to_string(j)};
    w.lhs = scalar_element(lhs);
    w.rhs = scalar_element(Scalar(1));
    w.lhs_text = lhs.to_string();
    w.rhs_text = "1";
    ++report.violation_count;
    report.witnesses.push_back(std::move(w));
  };
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      ++report.checked_count;
      const Scalar skew = table_[i][j] * table_[j][i];
      if (!skew.is_one()) witness("skew: eps(g_i,g_j) eps(g_j,g_i) = 1", i, j, skew);
      if (i >= fr) {
        ++report.checked_count;
        const std::int64_t m = group_.torsion()[i - fr];
        const Scalar p = table_[i][j].pow(m);
        if (!p.is_one()) witness("torsion: eps(g_i,g_j)^m = 1", i, j, p);
      }
      if (j >= fr) {
        ++report.checked_count;
        const std::int64_t m = group_.torsion()[j - fr];
        const Scalar p = table_[i][j].pow(m);
        if (!p.is_one()) witness("torsion: eps(g_i,g_j)^m = 1 (second slot)", i, j, p);
      }
    }
  return report;
}

Bicharacter Bicharacter::reduce_mod(std::uint32_t p) const {
  Bicharacter bc = *this;
  for (auto& row : bc.table_)
    for (auto& v : row) v = v.reduce_mod(p);
  return bc;
}

}  // namespace colalg
