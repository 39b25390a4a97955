#include "colalg/linalg.hpp"

#include <stdexcept>

namespace colalg {

void Matrix::append_row(const std::vector<Scalar>& row) {
  if (row.size() != cols_) throw std::logic_error("row length mismatch");
  data_.insert(data_.end(), row.begin(), row.end());
  ++rows_;
}

std::vector<std::size_t> Matrix::rref() {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t p = r;
    while (p < rows_ && (*this)(p, c).is_zero()) ++p;
    if (p == rows_) continue;
    if (p != r)
      for (std::size_t k = 0; k < cols_; ++k) std::swap((*this)(p, k), (*this)(r, k));
    const Scalar inv = (*this)(r, c).inverse();
    for (std::size_t k = c; k < cols_; ++k) (*this)(r, k) *= inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r || (*this)(i, c).is_zero()) continue;
      const Scalar f = (*this)(i, c);
      for (std::size_t k = c; k < cols_; ++k) (*this)(i, k) -= f * (*this)(r, k);
    }
    pivots.push_back(c);
    ++r;
  }
  data_.resize(r * cols_);
  rows_ = r;
  return pivots;
}

std::size_t Matrix::rank() const {
  Matrix m = *this;
  return m.rref().size();
}

std::vector<std::vector<Scalar>> Matrix::nullspace() const {
  Matrix m = *this;
  const auto pivots = m.rref();
  std::vector<bool> is_pivot(cols_, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Scalar> v(cols_, Scalar(0));
    v[f] = Scalar(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m(i, f);
    basis.push_back(std::move(v));
  }
  // Canonical echelon form of the solution span.
  Matrix b(0, cols_);
  for (auto& v : basis) b.append_row(v);
  b.rref();
  std::vector<std::vector<Scalar>> out;
  for (std::size_t i = 0; i < b.rows(); ++i) {
    std::vector<Scalar> row(cols_);
    for (std::size_t k = 0; k < cols_; ++k) row[k] = b(i, k);
    out.push_back(std::move(row));
  }
  return out;
}

namespace {

std::vector<Scalar> dense(const GradedElement& v, std::size_t n) {
  std::vector<Scalar> row(n, Scalar(0));
  for (const auto& t : v.terms()) {
    if (t.index >= n) throw std::logic_error("vector index outside ambient space");
    row[t.index] = t.coef;
  }
  return row;
}

GradedElement sparse(const Matrix& m, std::size_t r) {
  GradedElement v;
  for (std::size_t k = 0; k < m.cols(); ++k) v.add_term(static_cast<std::uint32_t>(k), m(r, k));
  return v;
}

/// Rows spanning the annihilator {y : <u, y> = 0 for all u in the span}.
Matrix annihilator(const Subspace& s) {
  Matrix m(0, s.ambient_dim());
  for (const auto& v : s.basis()) m.append_row(dense(v, s.ambient_dim()));
  Matrix ann(0, s.ambient_dim());
  for (auto& y : m.nullspace()) ann.append_row(y);
  return ann;
}

}  // namespace

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<GradedElement>& vectors) {
  Matrix m(0, ambient_dim);
  for (const auto& v : vectors) m.append_row(dense(v, ambient_dim));
  m.rref();
  Subspace s(ambient_dim);
  for (std::size_t r = 0; r < m.rows(); ++r) s.basis_.push_back(sparse(m, r));
  return s;
}

Subspace Subspace::whole(std::size_t ambient_dim) {
  std::vector<GradedElement> vs;
  for (std::size_t i = 0; i < ambient_dim; ++i) vs.push_back(GradedElement::basis(static_cast<std::uint32_t>(i)));
  return span(ambient_dim, vs);
}

bool Subspace::contains(const GradedElement& v) const {
  std::vector<GradedElement> vs = basis_;
  vs.push_back(v);
  return span(ambient_, vs).dim() == dim();
}

bool Subspace::contains(const Subspace& other) const {
  for (const auto& v : other.basis_)
    if (!contains(v)) return false;
  return true;
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw std::logic_error("ambient dimension mismatch");
  Matrix a = annihilator(*this);
  Matrix b = annihilator(other);
  Matrix stacked(0, ambient_);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    std::vector<Scalar> row(ambient_);
    for (std::size_t k = 0; k < ambient_; ++k) row[k] = a(r, k);
    stacked.append_row(row);
  }
  for (std::size_t r = 0; r < b.rows(); ++r) {
    std::vector<Scalar> row(ambient_);
    for (std::size_t k = 0; k < ambient_; ++k) row[k] = b(r, k);
    stacked.append_row(row);
  }
  std::vector<GradedElement> vs;
  for (auto& v : stacked.nullspace()) {
    GradedElement e;
    for (std::size_t k = 0; k < v.size(); ++k) e.add_term(static_cast<std::uint32_t>(k), v[k]);
    vs.push_back(std::move(e));
  }
  return span(ambient_, vs);
}

}  // namespace colalg
