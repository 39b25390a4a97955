#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "colalg/element.hpp"

namespace colalg {

/// One violated equation instance.
struct Witness {
  std::string equation;
  std::vector<std::uint32_t> tuple;
  std::vector<std::string> names;  // basis names of tuple entries
  GradedElement lhs;
  GradedElement rhs;
  std::string lhs_text;
  std::string rhs_text;

  friend bool operator==(const Witness&, const Witness&) = default;
};

/// Result of a checker. Passes iff no witnesses were found.
struct AxiomReport {
  std::string subject;  // identity or predicate id
  std::vector<Witness> witnesses;
  std::uint64_t checked_count = 0;
  std::uint64_t violation_count = 0;  // total, even beyond the witness cap

  bool pass() const { return violation_count == 0; }
  void merge(const AxiomReport& other, std::size_t cap);

  std::string render() const;
};

}  // namespace colalg
