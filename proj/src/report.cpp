#include "colalg/report.hpp"

#include <sstream>

namespace colalg {

void AxiomReport::merge(const AxiomReport& other, std::size_t cap) {
  checked_count += other.checked_count;
  violation_count += other.violation_count;
  for (const auto& w : other.witnesses) {
    if (witnesses.size() >= cap) break;
    witnesses.push_back(w);
  }
}

std::string AxiomReport::render() const {
  std::ostringstream os;
  os << subject << ": " << (pass() ? "pass" : "FAIL") << " (" << checked_count << " checked";
  if (!pass()) os << ", " << violation_count << " violations";
  os << ")\n";
  for (const auto& w : witnesses) {
    os << "  [" << w.equation << "] (";
    for (std::size_t i = 0; i < w.names.size(); ++i) os << (i ? ", " : "") << w.names[i];
    os << "): lhs = " << w.lhs_text << ", rhs = " << w.rhs_text << '\n';
  }
  return os.str();
}

}  // namespace colalg
