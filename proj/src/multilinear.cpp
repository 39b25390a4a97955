#include "colalg/multilinear.hpp"

#include <algorithm>

#include "colalg/errors.hpp"

namespace colalg {

namespace {
const std::vector<Term> kEmpty;
}

MultilinearOp::MultilinearOp(std::string name, std::vector<std::size_t> slot_dims, std::size_t out_dim)
    : name_(std::move(name)), slot_dims_(std::move(slot_dims)), out_dim_(out_dim) {
  if (slot_dims_.size() < 2 || slot_dims_.size() > 3)
    throw InputError("op '" + name_ + "' must have arity 2 or 3");
}

MultilinearOp MultilinearOp::on_space(std::string name, std::size_t arity, std::size_t n, bool scalar_valued) {
  return MultilinearOp(std::move(name), std::vector<std::size_t>(arity, n), scalar_valued ? 0 : n);
}

std::size_t MultilinearOp::nonzero_count() const {
  std::size_t n = 0;
  for (const auto& e : entries_) n += e.out.size();
  return n;
}

void MultilinearOp::check_args(std::span<const std::uint32_t> args) const {
  if (args.size() != slot_dims_.size())
    throw InputError("op '" + name_ + "' expects " + std::to_string(arity()) + " arguments, got " +
                     std::to_string(args.size()));
  for (std::size_t i = 0; i < args.size(); ++i)
    if (args[i] >= slot_dims_[i])
      throw InputError("op '" + name_ + "': argument index " + std::to_string(args[i]) + " out of range");
}

std::uint64_t MultilinearOp::flatten(std::span<const std::uint32_t> args) const {
  std::uint64_t key = 0;
  for (std::size_t i = 0; i < args.size(); ++i) key = key * slot_dims_[i] + args[i];
  return key;
}

std::vector<std::uint32_t> MultilinearOp::unflatten(std::uint64_t key) const {
  std::vector<std::uint32_t> args(arity());
  for (std::size_t i = arity(); i-- > 0;) {
    args[i] = static_cast<std::uint32_t>(key % slot_dims_[i]);
    key /= slot_dims_[i];
  }
  return args;
}

void MultilinearOp::add(std::span<const std::uint32_t> args, std::uint32_t out, const Scalar& c) {
  check_args(args);
  if (scalar_valued() ? out != 0 : out >= out_dim_)
    throw InputError("op '" + name_ + "': output index " + std::to_string(out) + " out of range");
  if (c.is_zero()) return;
  const std::uint64_t key = flatten(args);
  auto it = std::lower_bound(entries_.begin(), entries_.end(), key,
                             [](const Entry& e, std::uint64_t k) { return e.key < k; });
  if (it == entries_.end() || it->key != key) it = entries_.insert(it, Entry{key, {}});
  GradedElement v;
  v.add_scaled(it->out, Scalar(1));
  v.add_term(out, c);
  if (v.is_zero())
    entries_.erase(it);
  else
    it->out = v.terms();
}

void MultilinearOp::add_element(std::span<const std::uint32_t> args, const GradedElement& value) {
  for (const auto& t : value.terms()) add(args, t.index, t.coef);
}

const std::vector<Term>& MultilinearOp::on_basis(std::span<const std::uint32_t> args) const {
  const std::uint64_t key = flatten(args);
  auto it = std::lower_bound(entries_.begin(), entries_.end(), key,
                             [](const Entry& e, std::uint64_t k) { return e.key < k; });
  if (it == entries_.end() || it->key != key) return kEmpty;
  return it->out;
}

const std::vector<Term>& MultilinearOp::on_basis(std::uint32_t a, std::uint32_t b) const {
  const std::uint32_t args[2] = {a, b};
  return on_basis(args);
}

const std::vector<Term>& MultilinearOp::on_basis(std::uint32_t a, std::uint32_t b, std::uint32_t c) const {
  const std::uint32_t args[3] = {a, b, c};
  return on_basis(args);
}

GradedElement MultilinearOp::apply(std::span<const GradedElement* const> args) const {
  if (args.size() != arity())
    throw InputError("op '" + name_ + "' expects " + std::to_string(arity()) + " arguments, got " +
                     std::to_string(args.size()));
  GradedElement result;
  std::uint32_t idx[3] = {0, 0, 0};
  auto recurse = [&](auto&& self, std::size_t slot, const Scalar& coef) -> void {
    if (slot == arity()) {
      const auto& out = on_basis(std::span<const std::uint32_t>(idx, arity()));
      if (!out.empty()) result.add_scaled(out, coef);
      return;
    }
    for (const auto& t : args[slot]->terms()) {
      if (t.index >= slot_dims_[slot])
        throw InputError("op '" + name_ + "': argument index " + std::to_string(t.index) + " out of range");
      idx[slot] = t.index;
      self(self, slot + 1, slot == 0 ? t.coef : coef * t.coef);
    }
  };
  recurse(recurse, 0, Scalar(1));
  return result;
}

GradedElement MultilinearOp::operator()(const GradedElement& a, const GradedElement& b) const {
  const GradedElement* args[2] = {&a, &b};
  return apply(args);
}

GradedElement MultilinearOp::operator()(const GradedElement& a, const GradedElement& b,
                                        const GradedElement& c) const {
  const GradedElement* args[3] = {&a, &b, &c};
  return apply(args);
}

Scalar MultilinearOp::apply_scalar(const GradedElement& a, const GradedElement& b) const {
  return (*this)(a, b).coef(0);
}

void MultilinearOp::for_each(
    const std::function<void(std::span<const std::uint32_t>, std::uint32_t, const Scalar&)>& f) const {
  for (const auto& e : entries_) {
    const auto args = unflatten(e.key);
    for (const auto& t : e.out) f(args, t.index, t.coef);
  }
}

MultilinearOp MultilinearOp::transformed(const std::function<Scalar(const Scalar&)>& f) const {
  MultilinearOp out(name_, slot_dims_, out_dim_);
  for_each([&](std::span<const std::uint32_t> args, std::uint32_t o, const Scalar& c) { out.add(args, o, f(c)); });
  return out;
}

MultilinearOp MultilinearOp::renamed(std::string name) const {
  MultilinearOp out = *this;
  out.name_ = std::move(name);
  return out;
}

bool operator==(const MultilinearOp& a, const MultilinearOp& b) {
  if (a.name_ != b.name_ || a.slot_dims_ != b.slot_dims_ || a.out_dim_ != b.out_dim_) return false;
  if (a.entries_.size() != b.entries_.size()) return false;
  for (std::size_t i = 0; i < a.entries_.size(); ++i) {
    if (a.entries_[i].key != b.entries_[i].key) return false;
    const auto& x = a.entries_[i].out;
    const auto& y = b.entries_[i].out;
    if (x.size() != y.size()) return false;
    for (std::size_t k = 0; k < x.size(); ++k)
      if (x[k].index != y[k].index || x[k].coef != y[k].coef) return false;
  }
  return true;
}

MultilinearOp tabulate(std::string name, std::size_t arity, std::size_t n,
                       const std::function<GradedElement(std::span<const std::uint32_t>)>& f) {
  MultilinearOp op = MultilinearOp::on_space(std::move(name), arity, n);
  std::vector<std::uint32_t> args(arity, 0);
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < arity; ++i) total *= n;
  for (std::uint64_t k = 0; k < total; ++k) {
    std::uint64_t rem = k;
    for (std::size_t i = arity; i-- > 0;) {
      args[i] = static_cast<std::uint32_t>(rem % n);
      rem /= n;
    }
    op.add_element(args, f(args));
  }
  return op;
}

}  // namespace colalg
