#include "colalg/kernel.hpp"

#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace colalg {

std::uint64_t Equation::tuple_count() const {
  std::uint64_t total = 1;
  for (const auto& d : domains) total *= d.size();
  return total;
}

void Equation::tuple_at(std::uint64_t k, std::vector<std::uint32_t>& out) const {
  out.resize(domains.size());
  for (std::size_t i = domains.size(); i-- > 0;) {
    const auto& d = domains[i];
    out[i] = d[k % d.size()];
    k /= d.size();
  }
}

std::vector<std::uint32_t> index_range(std::size_t n) { return index_range(0, n); }

std::vector<std::uint32_t> index_range(std::size_t begin, std::size_t end) {
  std::vector<std::uint32_t> v;
  for (std::size_t i = begin; i < end; ++i) v.push_back(static_cast<std::uint32_t>(i));
  return v;
}

namespace {

struct Partial {
  std::vector<Witness> witnesses;
  std::uint64_t checked = 0;
  std::uint64_t violations = 0;
};

Witness make_witness(const Equation& eq, const std::vector<std::uint32_t>& tuple, GradedElement lhs,
                     GradedElement rhs, const GradedBasis& basis, const GradedBasis& values) {
  Witness w;
  w.equation = eq.id;
  w.tuple = tuple;
  for (auto i : tuple) w.names.push_back(i < basis.size() ? basis.name(i) : "#" + std::to_string(i));
  if (eq.scalar) {
    w.lhs_text = lhs.coef(0).to_string();
    w.rhs_text = rhs.coef(0).to_string();
  } else {
    w.lhs_text = lhs.to_string(values);
    w.rhs_text = rhs.to_string(values);
  }
  w.lhs = std::move(lhs);
  w.rhs = std::move(rhs);
  return w;
}

void run_block(const Equation& eq, std::uint64_t begin, std::uint64_t end, const GradedBasis& basis,
               const GradedBasis& values, std::size_t cap, Partial& out) {
  std::vector<std::uint32_t> tuple;
  GradedElement lhs, rhs;
  for (std::uint64_t k = begin; k < end; ++k) {
    eq.tuple_at(k, tuple);
    if (eq.filter && !eq.filter(tuple)) continue;
    ++out.checked;
    lhs = GradedElement();
    rhs = GradedElement();
    eq.eval(tuple, lhs, rhs);
    if (lhs == rhs) continue;
    ++out.violations;
    if (out.witnesses.size() < cap) out.witnesses.push_back(make_witness(eq, tuple, lhs, rhs, basis, values));
  }
}

void absorb(AxiomReport& report, Partial&& p, std::size_t cap) {
  report.checked_count += p.checked;
  report.violation_count += p.violations;
  for (auto& w : p.witnesses) {
    if (report.witnesses.size() >= cap) break;
    report.witnesses.push_back(std::move(w));
  }
}

}  // namespace

AxiomReport run_equations_serial(const std::string& subject, const std::vector<Equation>& eqs,
                                 const GradedBasis& basis, std::size_t cap, const GradedBasis* value_basis) {
  const GradedBasis& values = value_basis ? *value_basis : basis;
  AxiomReport report;
  report.subject = subject;
  for (const auto& eq : eqs) {
    Partial p;
    run_block(eq, 0, eq.tuple_count(), basis, values, cap, p);
    absorb(report, std::move(p), cap);
  }
  return report;
}

AxiomReport run_equations(const std::string& subject, const std::vector<Equation>& eqs, const GradedBasis& basis,
                          const KernelOptions& opts) {
#ifndef _OPENMP
  return run_equations_serial(subject, eqs, basis, opts.cap, opts.value_basis);
#else
  if (!opts.parallel) return run_equations_serial(subject, eqs, basis, opts.cap, opts.value_basis);
  const GradedBasis& values = opts.value_basis ? *opts.value_basis : basis;
  AxiomReport report;
  report.subject = subject;
  for (const auto& eq : eqs) {
    const std::uint64_t total = eq.tuple_count();
    const int threads = omp_get_max_threads();
    std::vector<Partial> parts(threads);
    std::exception_ptr error;
#pragma omp parallel num_threads(threads)
    {
      const int t = omp_get_thread_num();
      const int nt = omp_get_num_threads();
      const std::uint64_t begin = total * t / nt;
      const std::uint64_t end = total * (t + 1) / nt;
      try {
        run_block(eq, begin, end, basis, values, opts.cap, parts[t]);
      } catch (...) {
#pragma omp critical(colalg_kernel_error)
        if (!error) error = std::current_exception();
      }
    }
    if (error) std::rethrow_exception(error);
    for (auto& p : parts) absorb(report, std::move(p), opts.cap);
  }
  return report;
#endif
}

}  // namespace colalg
