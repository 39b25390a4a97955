#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "colalg/algebra.hpp"
#include "colalg/report.hpp"

namespace colalg {

struct AuditOptions {
  /// Drives the choice among searched operators and weights.
  std::uint64_t seed = 1;
  /// Per-row wall time in the report. Off by default because it breaks byte determinism.
  bool timing = false;
  std::size_t cap = 4;
  bool parallel = true;
  /// Largest GF(3) search space tried for operator-driven rows (3^12).
  std::uint64_t search_budget = 531441;
};

struct AuditRow {
  std::string theorem;
  std::string instance;
  /// "printed" / "amended" where the recipe has both readings, else empty.
  std::string variant;
  AxiomReport report;
  double millis = -1;

  std::string verdict() const { return report.pass() ? "pass" : "fail"; }
};

/// A recipe whose printed and amended readings were both run on the same input.
struct LedgerRow {
  std::string finding;
  std::string instance;
  std::size_t printed = 0;  // row indices
  std::size_t amended = 0;
};

struct AuditReport {
  std::vector<AuditRow> rows;
  std::vector<LedgerRow> ledger;
  /// Inputs that failed a recipe's hypotheses, per theorem.
  std::map<std::string, std::uint64_t> skipped;

  std::size_t failing_rows() const;
  std::size_t witness_count() const;
  std::string render_text() const;
  /// JSON; each report mirrors AxiomReport field for field.
  std::string render_machine() const;
};

/// Runs every construction on inputs drawn from the corpus and re-checks the claims itself.
AuditReport run_audit(const std::vector<GradedAlgebraObject>& corpus, const AuditOptions& opts = {});

}  // namespace colalg
