#pragma once

#include <stdexcept>
#include <string>

#include "colalg/report.hpp"

namespace colalg {

/// Malformed input: bad documents, shape mismatches, unknown identifiers.
/// Maps to CLI exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A construction's hypothesis does not hold on its input. Carries the
/// failing report so callers can print witnesses.
class PreconditionError : public std::runtime_error {
 public:
  PreconditionError(const std::string& what, AxiomReport report)
      : std::runtime_error(what), report_(std::move(report)) {}
  const AxiomReport& report() const { return report_; }

 private:
  AxiomReport report_;
};

/// A construction produced an object that fails its own claimed identity.
class ClaimError : public std::runtime_error {
 public:
  ClaimError(const std::string& what, AxiomReport report)
      : std::runtime_error(what), report_(std::move(report)) {}
  const AxiomReport& report() const { return report_; }

 private:
  AxiomReport report_;
};

}  // namespace colalg
