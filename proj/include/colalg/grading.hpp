#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "colalg/scalar.hpp"

namespace colalg {

struct AxiomReport;

/// Element of Z^r x Z_{m1} x ... x Z_{mk}; torsion coordinates are kept in [0, m_i).
struct GroupElement {
  std::vector<std::int64_t> coords;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

/// Finitely generated abelian group Z^free_rank x Z_{torsion[0]} x ...
class GradingGroup {
 public:
  GradingGroup() = default;
  /// Throws InputError if a torsion order is below 2.
  GradingGroup(std::size_t free_rank, std::vector<std::int64_t> torsion);

  static GradingGroup trivial() { return {}; }

  std::size_t free_rank() const { return free_rank_; }
  const std::vector<std::int64_t>& torsion() const { return torsion_; }
  std::size_t rank() const { return free_rank_ + torsion_.size(); }

  GroupElement zero() const { return {std::vector<std::int64_t>(rank(), 0)}; }
  /// Canonical representative; throws InputError on a length mismatch.
  GroupElement element(std::vector<std::int64_t> coords) const;
  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  GroupElement negate(const GroupElement& a) const;
  bool is_zero(const GroupElement& a) const;

  std::string element_to_string(const GroupElement& a) const;

  friend bool operator==(const GradingGroup&, const GradingGroup&) = default;

 private:
  void check_length(const GroupElement& a) const;

  std::size_t free_rank_ = 0;
  std::vector<std::int64_t> torsion_;
};

/// The builtin sign bicharacters of the standard examples.
enum class BuiltinBicharacter { Z2, Z2n, Z2xZ2, ZxZ };

std::string to_string(BuiltinBicharacter b);
std::optional<BuiltinBicharacter> parse_builtin_bicharacter(const std::string& name);

/// Bimultiplicative pairing eps : G x G -> K^*, stored by its values on the
/// canonical generators: table[i][j] = eps(g_i, g_j).
class Bicharacter {
 public:
  Bicharacter() = default;
  /// Throws InputError if the table is not (rank x rank) or has a zero entry.
  Bicharacter(GradingGroup group, std::vector<std::vector<Scalar>> table);

  /// Builtin tables over the given field. Z2n takes the number of Z_2 factors.
  static Bicharacter builtin(BuiltinBicharacter which, const Field& field, std::size_t n = 1);
  /// The constant bicharacter 1 on the trivial group.
  static Bicharacter trivial(const Field& field);

  const GradingGroup& group() const { return group_; }
  const std::vector<std::vector<Scalar>>& table() const { return table_; }
  const std::optional<BuiltinBicharacter>& builtin_tag() const { return builtin_; }

  /// prod_{i,j} table[i][j]^(a_i b_j). Throws InputError on coordinate length mismatch.
  Scalar operator()(const GroupElement& a, const GroupElement& b) const;

  /// Checks table[i][j] table[j][i] = 1 and table[i][j]^m = table[j][i]^m = 1
  /// for every torsion generator g_i of order m.
  AxiomReport validate() const;

  /// Reduce all values into GF(p).
  Bicharacter reduce_mod(std::uint32_t p) const;

  friend bool operator==(const Bicharacter& a, const Bicharacter& b) {
    return a.group_ == b.group_ && a.table_ == b.table_;
  }

 private:
  GradingGroup group_;
  std::vector<std::vector<Scalar>> table_;
  std::optional<BuiltinBicharacter> builtin_;
};

}  // namespace colalg
