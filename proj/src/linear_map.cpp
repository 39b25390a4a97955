#include "colalg/linear_map.hpp"

#include "colalg/errors.hpp"
#include "colalg/linalg.hpp"

namespace colalg {

EvenLinearMap EvenLinearMap::identity(std::size_t n) { return homothety(n, Scalar(1)); }

EvenLinearMap EvenLinearMap::homothety(std::size_t n, const Scalar& s) {
  EvenLinearMap m(n, n);
  for (std::size_t j = 0; j < n; ++j) m.set(j, j, s);
  return m;
}

Scalar EvenLinearMap::entry(std::size_t row, std::size_t col) const { return columns_.at(col).coef(row); }

void EvenLinearMap::set(std::size_t row, std::size_t col, const Scalar& v) {
  if (row >= rows_ || col >= cols()) throw InputError("map entry (" + std::to_string(row) + ", " +
                                                      std::to_string(col) + ") out of range");
  auto& c = columns_[col];
  c.add_term(static_cast<std::uint32_t>(row), v - c.coef(static_cast<std::uint32_t>(row)));
}

GradedElement EvenLinearMap::operator()(const GradedElement& x) const {
  GradedElement y;
  for (const auto& t : x.terms()) {
    if (t.index >= cols()) throw InputError("map applied to a vector outside its domain");
    y.add_scaled(columns_[t.index], t.coef);
  }
  return y;
}

EvenLinearMap EvenLinearMap::compose(const EvenLinearMap& other) const {
  if (other.rows_ != cols()) throw InputError("map composition shape mismatch");
  EvenLinearMap m(rows_, other.cols());
  for (std::size_t j = 0; j < other.cols(); ++j) m.columns_[j] = (*this)(other.columns_[j]);
  return m;
}

EvenLinearMap EvenLinearMap::transformed(const std::function<Scalar(const Scalar&)>& f) const {
  EvenLinearMap m(rows_, cols());
  for (std::size_t j = 0; j < cols(); ++j)
    for (const auto& t : columns_[j].terms()) m.columns_[j].add_term(t.index, f(t.coef));
  return m;
}

std::size_t EvenLinearMap::rank() const {
  Matrix m(0, rows_);
  for (const auto& col : columns_) {
    std::vector<Scalar> row(rows_, Scalar(0));
    for (const auto& t : col.terms()) row[t.index] = t.coef;
    m.append_row(row);
  }
  return m.rank();
}

AxiomReport EvenLinearMap::check_even(const GradedBasis& codomain, const GradedBasis& domain) const {
  if (codomain.size() != rows_ || domain.size() != cols()) throw InputError("map shape does not match bases");
  AxiomReport report;
  report.subject = "EVEN_MAP";
  for (std::size_t j = 0; j < cols(); ++j) {
    for (const auto& t : columns_[j].terms()) {
      ++report.checked_count;
      if (codomain.degree(t.index) == domain.degree(j)) continue;
      ++report.violation_count;
      Witness w;
      w.equation = "deg(row) = deg(col)";
      w.tuple = {t.index, static_cast<std::uint32_t>(j)};
      w.names = {codomain.name(t.index), domain.name(j)};
      w.lhs.add_term(t.index, t.coef);
      w.lhs_text = t.coef.to_string() + "*" + codomain.name(t.index);
      w.rhs_text = "0";
      report.witnesses.push_back(std::move(w));
    }
  }
  return report;
}

}  // namespace colalg
