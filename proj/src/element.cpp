#include "colalg/element.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "colalg/errors.hpp"

namespace colalg {

GradedBasis::GradedBasis(std::vector<BasisEntry> entries) : entries_(std::move(entries)) {
  std::set<std::string> seen;
  for (const auto& e : entries_)
    if (!seen.insert(e.name).second) throw InputError("duplicate basis name '" + e.name + "'");
}

std::optional<std::size_t> GradedBasis::find(const std::string& name) const {
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (entries_[i].name == name) return i;
  return std::nullopt;
}

GradedElement GradedElement::basis(std::uint32_t index, const Scalar& one) {
  GradedElement e;
  e.terms_.push_back({index, one});
  return e;
}

Scalar GradedElement::coef(std::uint32_t index) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), index,
                             [](const Term& t, std::uint32_t i) { return t.index < i; });
  if (it != terms_.end() && it->index == index) return it->coef;
  return Scalar(0);
}

void GradedElement::add_term(std::uint32_t index, const Scalar& s) {
  if (s.is_zero()) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), index,
                             [](const Term& t, std::uint32_t i) { return t.index < i; });
  if (it != terms_.end() && it->index == index) {
    it->coef += s;
    if (it->coef.is_zero()) terms_.erase(it);
  } else {
    terms_.insert(it, Term{index, s});
  }
}

void GradedElement::add_scaled(const std::vector<Term>& other, const Scalar& s) {
  if (other.empty() || s.is_zero()) return;
  if (other.size() == 1) {
    add_term(other[0].index, other[0].coef * s);
    return;
  }
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.size());
  auto a = terms_.begin();
  auto b = other.begin();
  while (a != terms_.end() || b != other.end()) {
    if (b == other.end() || (a != terms_.end() && a->index < b->index)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->index < a->index) {
      Scalar c = b->coef * s;
      if (!c.is_zero()) merged.push_back(Term{b->index, std::move(c)});
      ++b;
    } else {
      Scalar c = a->coef + b->coef * s;
      if (!c.is_zero()) merged.push_back(Term{a->index, std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
}

void GradedElement::add_scaled(const GradedElement& other, const Scalar& s) { add_scaled(other.terms_, s); }

GradedElement& GradedElement::operator+=(const GradedElement& o) {
  add_scaled(o.terms_, Scalar(1));
  return *this;
}

GradedElement& GradedElement::operator-=(const GradedElement& o) {
  add_scaled(o.terms_, Scalar(-1));
  return *this;
}

GradedElement& GradedElement::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coef *= s;
  return *this;
}

bool operator==(const GradedElement& a, const GradedElement& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].index != b.terms_[i].index || a.terms_[i].coef != b.terms_[i].coef) return false;
  return true;
}

std::optional<GroupElement> GradedElement::degree(const GradedBasis& basis) const {
  if (terms_.empty()) return std::nullopt;
  const GroupElement& d = basis.degree(terms_.front().index);
  for (const auto& t : terms_)
    if (basis.degree(t.index) != d) return std::nullopt;
  return d;
}

namespace {

std::string render(const std::vector<Term>& terms, auto name_of) {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms) {
    std::string c = t.coef.to_string();
    bool negative = !c.empty() && c[0] == '-';
    if (negative) c.erase(0, 1);
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    if (c != "1") os << c << '*';
    os << name_of(t.index);
    first = false;
  }
  return os.str();
}

}  // namespace

std::string GradedElement::to_string(const GradedBasis& basis) const {
  return render(terms_, [&](std::uint32_t i) {
    return i < basis.size() ? basis.name(i) : "#" + std::to_string(i);
  });
}

std::string GradedElement::to_string() const {
  return render(terms_, [](std::uint32_t i) { return "#" + std::to_string(i); });
}

}  // namespace colalg
