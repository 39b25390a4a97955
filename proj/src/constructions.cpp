#include "colalg/constructions.hpp"

#include <array>
#include <map>
#include <memory>

#include "colalg/errors.hpp"
#include "colalg/operators.hpp"

namespace colalg {

namespace {

using Tuple = std::span<const std::uint32_t>;

CheckOptions check_options(const ConstructOptions& o) {
  CheckOptions c;
  c.cap = o.cap;
  c.parallel = o.parallel;
  return c;
}

std::string label(const GradedAlgebraObject& o) { return o.name.empty() ? "L" : o.name; }

/// Same space and grading as src, no structure.
GradedAlgebraObject blank(const GradedAlgebraObject& src, std::string name) {
  GradedAlgebraObject out;
  out.field = src.field;
  out.bicharacter = src.bicharacter;
  out.basis = src.basis;
  out.name = std::move(name);
  return out;
}

std::vector<GradedElement> units(const Field& f, std::size_t n) {
  std::vector<GradedElement> e;
  e.reserve(n);
  for (std::size_t i = 0; i < n; ++i) e.push_back(GradedElement::basis(static_cast<std::uint32_t>(i), f.one()));
  return e;
}

GradedAlgebraObject finish(GradedAlgebraObject out, std::vector<std::string> claims, const ConstructOptions& opts) {
  out.claims = std::move(claims);
  if (opts.verify) verify_claims(out, opts);
  return out;
}

void require_report(const AxiomReport& r, const std::string& what) {
  if (!r.pass()) throw PreconditionError(what, r);
}

void require_predicate(const GradedAlgebraObject& obj, const EvenLinearMap& m, Predicate p,
                       const std::optional<Scalar>& weight, const std::string& op, const ConstructOptions& opts) {
  OperatorOptions oo;
  oo.weight = weight;
  oo.op = op;
  oo.cap = opts.cap;
  oo.parallel = opts.parallel;
  require_report(check_operator(obj, m, p, oo), "map fails " + to_string(p) + " on " + label(obj));
}

void require_same_space_grading(const GradedAlgebraObject& a, const GradedAlgebraObject& b) {
  if (!(a.bicharacter == b.bicharacter)) throw InputError("inputs carry different bicharacters");
  if (a.field != b.field) throw InputError("inputs live over different fields");
}

/// Pair basis "x⊗y" with index i * |B| + j.
GradedBasis pair_basis(const GradedBasis& a, const GradedBasis& b, const GradingGroup& G) {
  std::vector<BasisEntry> entries;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      entries.push_back({a.name(i) + "⊗" + b.name(j), G.add(a.degree(i), b.degree(j))});
  return GradedBasis(std::move(entries));
}

GradedElement tensor(const GradedElement& u, const GradedElement& v, std::size_t nb) {
  GradedElement out;
  for (const auto& s : u.terms())
    for (const auto& t : v.terms()) out.add_term(static_cast<std::uint32_t>(s.index * nb + t.index), s.coef * t.coef);
  return out;
}

/// Fill an op by evaluating f on every tuple of its slot ranges.
void fill(MultilinearOp& op, const std::function<GradedElement(Tuple)>& f) {
  const auto& dims = op.slot_dims();
  std::uint64_t total = 1;
  for (auto d : dims) total *= d;
  std::vector<std::uint32_t> t(dims.size());
  for (std::uint64_t k = 0; k < total; ++k) {
    std::uint64_t r = k;
    for (std::size_t s = dims.size(); s-- > 0;) {
      t[s] = static_cast<std::uint32_t>(r % dims[s]);
      r /= dims[s];
    }
    GradedElement v = f(t);
    if (!v.is_zero()) op.add_element(t, v);
  }
}

/// Copy of op with new_args[s] = old_args[from[s]].
MultilinearOp reslot(const MultilinearOp& op, const std::string& name, std::vector<std::size_t> dims,
                     const std::array<std::size_t, 3>& from) {
  MultilinearOp out(name, std::move(dims), op.out_dim());
  op.for_each([&](Tuple args, std::uint32_t o, const Scalar& c) {
    std::array<std::uint32_t, 3> a{args[from[0]], args[from[1]], args[from[2]]};
    out.add(a, o, c);
  });
  return out;
}

Identity identity_of(SumKind k) {
  switch (k) {
    case SumKind::BINARY:
      return Identity::LEIBNIZ2;
    case SumKind::TERNARY:
      return Identity::TERNARY_LEIBNIZ;
    default:
      return Identity::TERNARY_LEIBNIZ_POISSON;
  }
}

std::vector<std::string> ops_of(SumKind k) {
  switch (k) {
    case SumKind::BINARY:
      return {"bracket2"};
    case SumKind::TERNARY:
      return {"bracket3"};
    default:
      return {"product2", "bracket3"};
  }
}

void check_variant(const std::string& v) {
  if (v != "printed" && v != "amended") throw InputError("unknown variant '" + v + "' (expected printed or amended)");
}

ModuleData module_like(const GradedBasis& basis) { return ModuleData{basis, {}}; }

}  // namespace

void require_identity(const GradedAlgebraObject& obj, Identity id, const std::string& what,
                      const ConstructOptions& opts, const CheckOptions& extra) {
  CheckOptions c = extra;
  c.cap = opts.cap;
  c.parallel = opts.parallel;
  AxiomReport r = check_identity(obj, id, c);
  if (!r.pass()) throw PreconditionError(what + ": " + label(obj) + " fails " + to_string(id), std::move(r));
}

void verify_claims(const GradedAlgebraObject& obj, const ConstructOptions& opts) {
  for (const auto& claim : obj.claims) {
    const auto id = parse_identity(claim);
    if (!id) throw InputError("unknown claimed identity '" + claim + "'");
    CheckOptions c = check_options(opts);
    if (obj.variant == "printed" || obj.variant == "amended") c.variant = obj.variant;
    AxiomReport r = check_identity(obj, *id, c);
    if (!r.pass()) throw ClaimError(label(obj) + " fails its claimed " + claim, std::move(r));
  }
}

// ---- binary and ternary Leibniz --------------------------------------------

GradedAlgebraObject derive_ternary_from_binary(const GradedAlgebraObject& L, const ConstructOptions& opts) {
  const MultilinearOp& B = L.op("bracket2");
  require_identity(L, Identity::LEIBNIZ2, "derived ternary", opts);
  const auto e = units(L.field, L.dim());
  GradedAlgebraObject out = blank(L, "derived(" + label(L) + ")");
  out.set_op(tabulate("bracket3", 3, L.dim(), [&](Tuple t) { return B(e[t[0]], B(e[t[1]], e[t[2]])); }));
  return finish(std::move(out), {"TERNARY_LEIBNIZ"}, opts);
}

GradedAlgebraObject binary_from_ternary_at(const GradedAlgebraObject& L, std::uint32_t xi,
                                           const ConstructOptions& opts) {
  const MultilinearOp& B = L.op("bracket3");
  if (xi >= L.dim()) throw InputError("xi index " + std::to_string(xi) + " is out of range");
  if (!L.group().is_zero(L.basis.degree(xi)))
    throw InputError("xi = " + L.basis.name(xi) + " must have degree 0");
  require_identity(L, Identity::TERNARY_LEIBNIZ, "xi-contraction", opts);

  auto e = std::make_shared<const std::vector<GradedElement>>(units(L.field, L.dim()));
  auto Bp = std::make_shared<const MultilinearOp>(B);
  Equation eq;
  eq.id = "[xi, x, xi] = 0";
  eq.domains = {index_range(L.dim())};
  eq.eval = [e, Bp, xi](Tuple t, GradedElement& l, GradedElement& r) {
    l = (*Bp)((*e)[xi], (*e)[t[0]], (*e)[xi]);
    r = GradedElement();
  };
  AxiomReport cond = run_equations("XI_CONDITION", {eq}, L.basis, {opts.cap, opts.parallel});
  require_report(cond, "xi-contraction: [xi, x, xi] does not vanish");

  GradedAlgebraObject out = blank(L, "contract(" + label(L) + ", " + L.basis.name(xi) + ")");
  out.set_op(tabulate("bracket2", 2, L.dim(), [&](Tuple t) { return B((*e)[t[0]], (*e)[t[1]], (*e)[xi]); }));
  return finish(std::move(out), {"LEIBNIZ2"}, opts);
}

std::string to_string(BinaryTwist k) {
  switch (k) {
    case BinaryTwist::AVERAGING:
      return "AVERAGING";
    case BinaryTwist::CENTROID:
      return "CENTROID";
    case BinaryTwist::REYNOLDS:
      return "REYNOLDS";
    case BinaryTwist::ROTA_BAXTER:
      return "ROTA_BAXTER";
    default:
      return "NIJENHUIS";
  }
}

std::string to_string(TernaryTwist k) {
  switch (k) {
    case TernaryTwist::CENTROID_A:
      return "CENTROID_A";
    case TernaryTwist::CENTROID_B:
      return "CENTROID_B";
    case TernaryTwist::CENTROID_C:
      return "CENTROID_C";
    case TernaryTwist::REYNOLDS3:
      return "REYNOLDS3";
    default:
      return "ROTA_BAXTER3";
  }
}

std::optional<BinaryTwist> parse_binary_twist(const std::string& s) {
  for (auto k : {BinaryTwist::AVERAGING, BinaryTwist::CENTROID, BinaryTwist::REYNOLDS, BinaryTwist::ROTA_BAXTER,
                 BinaryTwist::NIJENHUIS})
    if (to_string(k) == s) return k;
  return std::nullopt;
}

std::optional<TernaryTwist> parse_ternary_twist(const std::string& s) {
  for (auto k : {TernaryTwist::CENTROID_A, TernaryTwist::CENTROID_B, TernaryTwist::CENTROID_C,
                 TernaryTwist::REYNOLDS3, TernaryTwist::ROTA_BAXTER3})
    if (to_string(k) == s) return k;
  return std::nullopt;
}

GradedAlgebraObject twist_binary(const GradedAlgebraObject& L, const EvenLinearMap& m, BinaryTwist kind,
                                 std::optional<Scalar> weight, const ConstructOptions& opts) {
  const std::string br = L.has_op("bracket2") || !L.has_op("product2") ? "bracket2" : "product2";
  const MultilinearOp& B = L.op(br);
  CheckOptions on;
  on.op = br;
  require_identity(L, Identity::LEIBNIZ2, to_string(kind) + " twist", opts, on);

  static const std::map<BinaryTwist, Predicate> kPred = {
      {BinaryTwist::AVERAGING, Predicate::AVERAGING},
      {BinaryTwist::CENTROID, Predicate::CENTROID2},
      {BinaryTwist::REYNOLDS, Predicate::REYNOLDS2},
      {BinaryTwist::ROTA_BAXTER, Predicate::ROTA_BAXTER2},
      {BinaryTwist::NIJENHUIS, Predicate::NIJENHUIS},
  };
  if (weight) weight = L.field.coerce(*weight);
  require_predicate(L, m, kPred.at(kind), weight, br, opts);
  if (kind == BinaryTwist::AVERAGING && !m.injective()) {
    AxiomReport r;
    r.subject = "INJECTIVE";
    r.checked_count = 1;
    r.violation_count = 1;
    Witness w;
    w.equation = "rank = dim";
    w.lhs_text = std::to_string(m.rank());
    w.rhs_text = std::to_string(m.cols());
    r.witnesses.push_back(std::move(w));
    throw PreconditionError("averaging map is not injective", std::move(r));
  }

  const auto e = units(L.field, L.dim());
  std::vector<GradedElement> me;
  for (std::size_t i = 0; i < L.dim(); ++i) me.push_back(m.on_basis(static_cast<std::uint32_t>(i)));
  auto f = [&](Tuple t) {
    const auto &x = e[t[0]], &y = e[t[1]], &mx = me[t[0]], &my = me[t[1]];
    switch (kind) {
      case BinaryTwist::AVERAGING:
      case BinaryTwist::CENTROID:
        return B(mx, y);
      case BinaryTwist::REYNOLDS:
        return B(mx, y) + B(x, my) - B(mx, my);
      case BinaryTwist::ROTA_BAXTER:
        return B(mx, y) + B(x, my) + *weight * B(x, y);
      default:
        return B(mx, y) + B(x, my) - m(B(x, y));
    }
  };
  GradedAlgebraObject out = blank(L, to_string(kind) + "(" + label(L) + ")");
  out.set_op(tabulate("bracket2", 2, L.dim(), f));
  out = finish(std::move(out), {"LEIBNIZ2"}, opts);

  if (opts.verify && kind != BinaryTwist::AVERAGING && kind != BinaryTwist::CENTROID) {
    GradedAlgebraObject orig = blank(L, label(L));
    orig.set_op(B.renamed("bracket2"));
    OperatorOptions oo;
    oo.cap = opts.cap;
    oo.parallel = opts.parallel;
    AxiomReport r = check_morphism(out, orig, m, {"bracket2"}, oo);
    if (!r.pass()) throw ClaimError("twisting map is not a morphism to the original bracket", std::move(r));
  }
  return out;
}

GradedAlgebraObject ternary_twist(const GradedAlgebraObject& L, const EvenLinearMap& m, TernaryTwist kind,
                                  std::optional<Scalar> weight, const ConstructOptions& opts) {
  const MultilinearOp& B = L.op("bracket3");
  require_identity(L, Identity::TERNARY_LEIBNIZ, to_string(kind) + " twist", opts);
  Predicate p = Predicate::CENTROID3;
  if (kind == TernaryTwist::REYNOLDS3) p = Predicate::REYNOLDS3;
  if (kind == TernaryTwist::ROTA_BAXTER3) p = Predicate::ROTA_BAXTER3;
  if (weight) weight = L.field.coerce(*weight);
  require_predicate(L, m, p, weight, "bracket3", opts);

  const auto e = units(L.field, L.dim());
  std::vector<GradedElement> me;
  for (std::size_t i = 0; i < L.dim(); ++i) me.push_back(m.on_basis(static_cast<std::uint32_t>(i)));
  auto f = [&](Tuple t) {
    const auto &x = e[t[0]], &y = e[t[1]], &z = e[t[2]];
    const auto &mx = me[t[0]], &my = me[t[1]], &mz = me[t[2]];
    switch (kind) {
      case TernaryTwist::CENTROID_A:
        return B(mx, y, z);
      case TernaryTwist::CENTROID_B:
        return B(mx, my, z);
      case TernaryTwist::CENTROID_C:
        return B(mx, my, mz);
      case TernaryTwist::REYNOLDS3:
        return B(mx, my, z) + B(mx, y, mz) + B(x, my, mz) - B(mx, my, mz);
      default: {
        const Scalar& w = *weight;
        GradedElement v = B(mx, my, z) + B(mx, y, mz) + B(x, my, mz);
        v.add_scaled(B(mx, y, z) + B(x, my, z) + B(x, y, mz), w);
        v.add_scaled(B(x, y, z), w * w);
        return v;
      }
    }
  };
  GradedAlgebraObject out = blank(L, to_string(kind) + "(" + label(L) + ")");
  out.set_op(tabulate("bracket3", 3, L.dim(), f));
  return finish(std::move(out), {"TERNARY_LEIBNIZ"}, opts);
}

std::optional<SumKind> parse_sum_kind(const std::string& s) {
  if (s == "binary") return SumKind::BINARY;
  if (s == "ternary") return SumKind::TERNARY;
  if (s == "ternary_poisson") return SumKind::TERNARY_POISSON;
  return std::nullopt;
}

GradedAlgebraObject direct_sum(const GradedAlgebraObject& a, const GradedAlgebraObject& b, SumKind kind,
                               const ConstructOptions& opts) {
  require_same_space_grading(a, b);
  const Identity id = identity_of(kind);
  for (const auto& n : ops_of(kind)) {
    a.op(n);
    b.op(n);
  }
  require_identity(a, id, "direct sum", opts);
  require_identity(b, id, "direct sum", opts);

  const std::size_t na = a.dim(), nb = b.dim();
  std::vector<BasisEntry> entries;
  for (const auto& x : a.basis.entries()) entries.push_back({"a." + x.name, x.degree});
  for (const auto& x : b.basis.entries()) entries.push_back({"b." + x.name, x.degree});
  GradedAlgebraObject out = blank(a, label(a) + "(+)" + label(b));
  out.basis = GradedBasis(std::move(entries));
  for (const auto& n : ops_of(kind)) {
    const MultilinearOp& oa = a.op(n);
    MultilinearOp op = MultilinearOp::on_space(n, oa.arity(), na + nb);
    oa.for_each([&](Tuple t, std::uint32_t o, const Scalar& c) { op.add(t, o, c); });
    b.op(n).for_each([&](Tuple t, std::uint32_t o, const Scalar& c) {
      std::vector<std::uint32_t> s(t.begin(), t.end());
      for (auto& i : s) i += static_cast<std::uint32_t>(na);
      op.add(s, static_cast<std::uint32_t>(o + na), c);
    });
    out.set_op(std::move(op));
  }
  return finish(std::move(out), {to_string(id)}, opts);
}

BimoduleObject action_bimodule(const GradedAlgebraObject& L, const GradedAlgebraObject& Lc, const MultilinearOp& left,
                               const MultilinearOp& right) {
  require_same_space_grading(L, Lc);
  const std::size_t n = L.dim(), k = Lc.dim();
  if (left.slot_dims() != std::vector<std::size_t>{n, k} || left.out_dim() != k)
    throw InputError("left action must have shape (L, Lc) -> Lc");
  if (right.slot_dims() != std::vector<std::size_t>{k, n} || right.out_dim() != k)
    throw InputError("right action must have shape (Lc, L) -> Lc");
  BimoduleObject b{L, module_like(Lc.basis)};
  b.algebra.module.reset();
  b.module.actions.emplace("left_act", left.renamed("left_act"));
  b.module.actions.emplace("right_act", right.renamed("right_act"));
  b.module.actions.emplace("mod_bracket2", Lc.op("bracket2").renamed("mod_bracket2"));
  return b;
}

GradedAlgebraObject semidirect_sum(const BimoduleObject& action, const ConstructOptions& opts) {
  require_identity(action.algebra, Identity::LEIBNIZ2, "semidirect sum", opts);
  const bool full = action.module.has("mod_bracket2") && !action.module.action("mod_bracket2").is_zero();
  if (action.module.has("mod_bracket2")) {
    GradedAlgebraObject Lc = blank(action.algebra, "acted-on");
    Lc.basis = action.module.basis;
    Lc.set_op(action.module.action("mod_bracket2").renamed("bracket2"));
    require_identity(Lc, Identity::LEIBNIZ2, "semidirect sum", opts);
  }
  const Identity kind = full ? Identity::ACTION : Identity::BIMODULE2;
  require_report(check_bimodule(action, kind, check_options(opts)), "semidirect sum: action fails " + to_string(kind));

  GradedAlgebraObject out = combined_object(action);
  out.name = label(action.algebra) + "|x module";
  for (auto it = out.ops.begin(); it != out.ops.end();) it = it->first == "bracket2" ? std::next(it) : out.ops.erase(it);
  return finish(std::move(out), {"LEIBNIZ2"}, opts);
}

// ---- tensor constructions ---------------------------------------------------

namespace {

/// [x⊗y, x'⊗y'] = x⊗[y,x',y'] + eps(y, x'+y')[x,x',y']⊗y.
MultilinearOp tensor_bracket(const GradedAlgebraObject& L) {
  const std::size_t n = L.dim();
  const MultilinearOp& B = L.op("bracket3");
  const EpsTable E(L.bicharacter, L.basis);
  const auto e = units(L.field, n);
  return tabulate("bracket2", 2, n * n, [&](Tuple t) {
    const std::uint32_t x = t[0] / n, y = t[0] % n, x2 = t[1] / n, y2 = t[1] % n;
    GradedElement v = tensor(e[x], B(e[y], e[x2], e[y2]), n);
    v.add_scaled(tensor(B(e[x], e[x2], e[y2]), e[y], n), E(y, x2) * E(y, y2));
    return v;
  });
}

}  // namespace

GradedAlgebraObject tensor_square_ternary(const GradedAlgebraObject& L, const ConstructOptions& opts) {
  L.op("bracket3");
  require_identity(L, Identity::TERNARY_LEIBNIZ, "tensor square", opts);
  GradedAlgebraObject out = blank(L, label(L) + "⊗" + label(L));
  out.basis = pair_basis(L.basis, L.basis, L.group());
  out.set_op(tensor_bracket(L));
  return finish(std::move(out), {"LEIBNIZ2"}, opts);
}

GradedAlgebraObject tensor_assoc_ternary(const GradedAlgebraObject& A, const GradedAlgebraObject& L,
                                         const ConstructOptions& opts) {
  require_same_space_grading(A, L);
  const MultilinearOp& P = A.op("product2");
  const MultilinearOp& B = L.op("bracket3");
  require_identity(A, Identity::ASSOC, "commutative algebra tensor", opts);
  require_identity(A, Identity::EPS_COMM, "commutative algebra tensor", opts);
  require_identity(L, Identity::TERNARY_LEIBNIZ, "commutative algebra tensor", opts);

  const std::size_t na = A.dim(), nl = L.dim();
  const auto ea = units(A.field, na);
  const auto el = units(L.field, nl);
  const auto& bc = L.bicharacter;
  GradedAlgebraObject out = blank(L, label(A) + "⊗" + label(L));
  out.basis = pair_basis(A.basis, L.basis, L.group());
  out.set_op(tabulate("bracket3", 3, na * nl, [&](Tuple t) {
    const std::uint32_t a = t[0] / nl, x = t[0] % nl, b = t[1] / nl, y = t[1] % nl, c = t[2] / nl, z = t[2] % nl;
    const Scalar s = bc(L.basis.degree(x), A.basis.degree(b)) * bc(L.basis.degree(x), A.basis.degree(c)) *
                     bc(L.basis.degree(y), A.basis.degree(c));
    return s * tensor(P(P(ea[a], ea[b]), ea[c]), B(el[x], el[y], el[z]), nl);
  }));
  return finish(std::move(out), {"TERNARY_LEIBNIZ"}, opts);
}

GradedAlgebraObject tensor_square_poisson3(const GradedAlgebraObject& P, const ConstructOptions& opts) {
  const MultilinearOp& M = P.op("product2");
  P.op("bracket3");
  require_identity(P, Identity::TERNARY_LEIBNIZ_POISSON, "Poisson tensor square", opts);
  const std::size_t n = P.dim();
  const EpsTable E(P.bicharacter, P.basis);
  const auto e = units(P.field, n);
  GradedAlgebraObject out = blank(P, label(P) + "⊗" + label(P));
  out.basis = pair_basis(P.basis, P.basis, P.group());
  out.set_op(tensor_bracket(P));
  out.set_op(tabulate("product2", 2, n * n, [&](Tuple t) {
    const std::uint32_t x = t[0] / n, y = t[0] % n, x2 = t[1] / n, y2 = t[1] % n;
    return E(y, x2) * tensor(M(e[x], e[x2]), M(e[y], e[y2]), n);
  }));
  return finish(std::move(out), {"LEIBNIZ_POISSON"}, opts);
}

// ---- trialgebras and dialgebras --------------------------------------------

std::optional<TrialgebraTarget> parse_trialgebra_target(const std::string& s) {
  if (s == "LEIBNIZ_POISSON") return TrialgebraTarget::LEIBNIZ_POISSON;
  if (s == "TERNARY_LEIBNIZ") return TrialgebraTarget::TERNARY_LEIBNIZ;
  if (s == "STAR_ASSOC") return TrialgebraTarget::STAR_ASSOC;
  return std::nullopt;
}

GradedAlgebraObject star_product(const GradedAlgebraObject& T) {
  const MultilinearOp &l = T.op("left"), &mid = T.op("middle"), &r = T.op("right");
  const auto e = units(T.field, T.dim());
  GradedAlgebraObject out = blank(T, "star(" + label(T) + ")");
  out.set_op(tabulate("product2", 2, T.dim(), [&](Tuple t) {
    const auto &x = e[t[0]], &y = e[t[1]];
    return l(x, y) + r(x, y) - mid(x, y);
  }));
  return out;
}

GradedAlgebraObject from_trialgebra(const GradedAlgebraObject& T, TrialgebraTarget target,
                                    const ConstructOptions& opts) {
  check_variant(opts.variant);
  const MultilinearOp &l = T.op("left"), &mid = T.op("middle"), &r = T.op("right");
  require_identity(T, Identity::TRIALGEBRA, "trialgebra construction", opts);
  const std::size_t n = T.dim();
  const EpsTable E(T.bicharacter, T.basis);
  const auto e = units(T.field, n);

  if (target == TrialgebraTarget::STAR_ASSOC) {
    GradedAlgebraObject out = star_product(T);
    return finish(std::move(out), {"ASSOC"}, opts);
  }
  if (target == TrialgebraTarget::LEIBNIZ_POISSON) {
    const bool amended = opts.variant == "amended";
    GradedAlgebraObject out = blank(T, "poisson(" + label(T) + ")");
    out.variant = opts.variant;
    out.set_op(mid.renamed("product2"));
    out.set_op(tabulate("bracket2", 2, n, [&](Tuple t) {
      const auto &x = e[t[0]], &y = e[t[1]];
      GradedElement v = l(x, y);
      v.add_scaled(amended ? r(y, x) : r(x, y), -E(t[0], t[1]));
      return v;
    }));
    return finish(std::move(out), {"LEIBNIZ_POISSON"}, opts);
  }
  // [x,y,z] = x -| {y,z} - eps(x, y+z) {y,z} |- x with {y,z} = y _|_ z - eps(y,z) z _|_ y.
  GradedAlgebraObject out = blank(T, "ternary(" + label(T) + ")");
  out.set_op(tabulate("bracket3", 3, n, [&](Tuple t) {
    const auto &x = e[t[0]], &y = e[t[1]], &z = e[t[2]];
    GradedElement c = mid(y, z);
    c.add_scaled(mid(z, y), -E(t[1], t[2]));
    GradedElement v = l(x, c);
    v.add_scaled(r(c, x), -(E(t[0], t[1]) * E(t[0], t[2])));
    return v;
  }));
  return finish(std::move(out), {"TERNARY_LEIBNIZ"}, opts);
}

GradedAlgebraObject rb_trialgebra_derived(const GradedAlgebraObject& T, const EvenLinearMap& R, const Scalar& weight,
                                          Identity target, const ConstructOptions& opts) {
  const Scalar w = T.field.coerce(weight);
  if (w != T.field.zero() && w != T.field.from_int(-1)) throw InputError("weight must be 0 or -1");
  if (target != Identity::LEFT_SYMMETRIC && target != Identity::ASSOC)
    throw InputError("target must be LEFT_SYMMETRIC or ASSOC");
  AxiomReport graded;
  graded.subject = "TRIVIAL_GRADING";
  for (std::size_t i = 0; i < T.dim(); ++i) {
    ++graded.checked_count;
    if (T.group().is_zero(T.basis.degree(i))) continue;
    ++graded.violation_count;
    Witness wt;
    wt.equation = "deg = 0";
    wt.tuple = {static_cast<std::uint32_t>(i)};
    wt.names = {T.basis.name(i)};
    wt.lhs_text = T.group().element_to_string(T.basis.degree(i));
    wt.rhs_text = "0";
    graded.witnesses.push_back(std::move(wt));
  }
  require_report(graded, "Rota-Baxter trialgebra construction needs the trivial grading");
  require_identity(T, Identity::TRIALGEBRA, "Rota-Baxter trialgebra construction", opts);
  const GradedAlgebraObject S = star_product(T);
  require_predicate(S, R, Predicate::ROTA_BAXTER2, w, "product2", opts);

  const MultilinearOp& P = S.op("product2");
  const auto e = units(T.field, T.dim());
  GradedAlgebraObject out = blank(T, "rb(" + label(T) + ")");
  out.set_op(tabulate("product2", 2, T.dim(), [&](Tuple t) {
    const auto &x = e[t[0]], &y = e[t[1]];
    const GradedElement rx = R(x);
    GradedElement v = P(rx, y) - P(y, rx);
    if (!w.is_zero()) v -= P(x, y);
    return v;
  }));
  return finish(std::move(out), {to_string(target)}, opts);
}

GradedAlgebraObject from_dialgebra(const GradedAlgebraObject& D, const ConstructOptions& opts) {
  const MultilinearOp &l = D.op("left"), &r = D.op("right");
  require_identity(D, Identity::DIALGEBRA, "dialgebra construction", opts);
  const EpsTable E(D.bicharacter, D.basis);
  const auto e = units(D.field, D.dim());
  GradedAlgebraObject out = blank(D, "poisson(" + label(D) + ")");
  out.set_op(l.renamed("product2"));
  out.set_op(tabulate("bracket2", 2, D.dim(), [&](Tuple t) {
    GradedElement v = l(e[t[0]], e[t[1]]);
    v.add_scaled(r(e[t[1]], e[t[0]]), -E(t[0], t[1]));
    return v;
  }));
  return finish(std::move(out), {"LEIBNIZ_POISSON"}, opts);
}

// ---- from associative / Lie / Poisson / Jordan ------------------------------

std::optional<AssocTarget> parse_assoc_target(const std::string& s) {
  static const std::map<std::string, AssocTarget> kTargets = {
      {"COMMUTATOR_LIE", AssocTarget::COMMUTATOR_LIE}, {"TERNARY_COMMUTATOR", AssocTarget::TERNARY_COMMUTATOR},
      {"LTS", AssocTarget::LTS},                       {"JTS_PLAIN", AssocTarget::JTS_PLAIN},
      {"JTS_INVOLUTION", AssocTarget::JTS_INVOLUTION}, {"COMSTRANS", AssocTarget::COMSTRANS},
  };
  auto it = kTargets.find(s);
  if (it == kTargets.end()) return std::nullopt;
  return it->second;
}

GradedAlgebraObject from_associative(const GradedAlgebraObject& A, AssocTarget target,
                                     const std::optional<EvenLinearMap>& theta, const ConstructOptions& opts) {
  const MultilinearOp& P = A.op("product2");
  require_identity(A, Identity::ASSOC, "associative construction", opts);
  const std::size_t n = A.dim();
  const EpsTable E(A.bicharacter, A.basis);
  const auto e = units(A.field, n);
  // eps(a, b + c)
  auto E2 = [&](std::uint32_t a, std::uint32_t b, std::uint32_t c) { return E(a, b) * E(a, c); };
  auto comm = [&](std::uint32_t a, std::uint32_t b) {
    GradedElement v = P(e[a], e[b]);
    v.add_scaled(P(e[b], e[a]), -E(a, b));
    return v;
  };

  switch (target) {
    case AssocTarget::COMMUTATOR_LIE: {
      GradedAlgebraObject out = blank(A, "commutator(" + label(A) + ")");
      out.set_op(P);
      out.set_op(tabulate("bracket2", 2, n, [&](Tuple t) { return comm(t[0], t[1]); }));
      return finish(std::move(out), {"LIE_COLOR", "LEIBNIZ_POISSON"}, opts);
    }
    case AssocTarget::TERNARY_COMMUTATOR: {
      GradedAlgebraObject out = blank(A, "ternary_commutator(" + label(A) + ")");
      out.set_op(tabulate("bracket3", 3, n, [&](Tuple t) {
        const GradedElement c = comm(t[1], t[2]);
        GradedElement v = P(e[t[0]], c);
        v.add_scaled(P(c, e[t[0]]), -E2(t[0], t[1], t[2]));
        return v;
      }));
      return finish(std::move(out), {"TERNARY_LEIBNIZ"}, opts);
    }
    case AssocTarget::LTS: {
      GradedAlgebraObject out = blank(A, "lts(" + label(A) + ")");
      out.set_op(tabulate("bracket3", 3, n, [&](Tuple t) {
        const auto &x = e[t[0]], &y = e[t[1]], &z = e[t[2]];
        const Scalar eyz = E(t[1], t[2]), ex = E2(t[0], t[1], t[2]);
        GradedElement v = P(x, P(y, z));
        v.add_scaled(P(x, P(z, y)), -eyz);
        v.add_scaled(P(P(y, z), x), -ex);
        v.add_scaled(P(P(z, y), x), ex * eyz);
        return v;
      }));
      return finish(std::move(out), {"LTS"}, opts);
    }
    case AssocTarget::JTS_PLAIN:
    case AssocTarget::JTS_INVOLUTION: {
      const bool inv = target == AssocTarget::JTS_INVOLUTION;
      if (inv) {
        if (!theta) throw InputError("JTS_INVOLUTION needs an involution theta");
        require_predicate(A, *theta, Predicate::INVOLUTION_ANTIAUTO, std::nullopt, "product2", opts);
      }
      GradedAlgebraObject out = blank(A, (inv ? "jts_theta(" : "jts(") + label(A) + ")");
      out.set_op(tabulate("bracket3", 3, n, [&](Tuple t) {
        const auto &x = e[t[0]], &z = e[t[2]];
        const GradedElement y = inv ? (*theta)(e[t[1]]) : e[t[1]];
        GradedElement v = P(P(x, y), z);
        v.add_scaled(P(P(z, y), x), E(t[0], t[1]) * E(t[0], t[2]) * E(t[1], t[2]));
        return v;
      }));
      return finish(std::move(out), {"JTS"}, opts);
    }
    default: {
      check_variant(opts.variant);
      const bool amended = opts.variant == "amended";
      GradedAlgebraObject out = blank(A, "comstrans(" + label(A) + ")");
      out.variant = opts.variant;
      out.set_op(tabulate("commutator3", 3, n, [&](Tuple t) {
        const auto &x = e[t[0]], &y = e[t[1]], &z = e[t[2]];
        GradedElement v = P(P(x, y), z);
        v.add_scaled(amended ? P(P(x, z), y) : P(P(x, y), z), -E(t[1], t[2]));
        return v;
      }));
      out.set_op(tabulate("translator3", 3, n, [&](Tuple t) {
        const auto &x = e[t[0]], &y = e[t[1]], &z = e[t[2]];
        GradedElement v = P(P(x, y), z);
        v.add_scaled(P(P(z, x), y), -(E(t[0], t[2]) * E(t[1], t[2])));
        return v;
      }));
      return finish(std::move(out), {"COMSTRANS"}, opts);
    }
  }
}

std::optional<PoissonRecipe> parse_poisson_recipe(const std::string& s) {
  if (s == "NESTED_BRACKET") return PoissonRecipe::NESTED_BRACKET;
  if (s == "BRACKET_OF_PRODUCT") return PoissonRecipe::BRACKET_OF_PRODUCT;
  return std::nullopt;
}

GradedAlgebraObject poisson_to_ternary(const GradedAlgebraObject& P, PoissonRecipe recipe,
                                       const ConstructOptions& opts) {
  const MultilinearOp &M = P.op("product2"), &B = P.op("bracket2");
  require_identity(P, Identity::LEIBNIZ_POISSON, "Poisson to ternary", opts);
  const auto e = units(P.field, P.dim());
  const bool nested = recipe == PoissonRecipe::NESTED_BRACKET;
  GradedAlgebraObject out = blank(P, (nested ? "nested(" : "bracket_of_product(") + label(P) + ")");
  out.set_op(M);
  out.set_op(tabulate("bracket3", 3, P.dim(), [&](Tuple t) {
    const auto &x = e[t[0]], &y = e[t[1]], &z = e[t[2]];
    return B(x, nested ? B(y, z) : M(y, z));
  }));
  return finish(std::move(out), {"TERNARY_LEIBNIZ_POISSON"}, opts);
}

GradedAlgebraObject from_lie(const GradedAlgebraObject& L, LieTarget target, const ConstructOptions& opts) {
  const MultilinearOp& B = L.op("bracket2");
  require_identity(L, Identity::LIE_COLOR, "Lie construction", opts);
  const auto e = units(L.field, L.dim());
  auto nested = [&](Tuple t) { return B(e[t[0]], B(e[t[1]], e[t[2]])); };
  if (target == LieTarget::LTS) {
    GradedAlgebraObject out = blank(L, "lts(" + label(L) + ")");
    out.set_op(tabulate("bracket3", 3, L.dim(), nested));
    return finish(std::move(out), {"LTS"}, opts);
  }
  check_variant(opts.variant);
  GradedAlgebraObject out = blank(L, "comstrans(" + label(L) + ")");
  out.variant = opts.variant;
  const MultilinearOp c = tabulate("commutator3", 3, L.dim(), nested);
  out.set_op(c);
  out.set_op(c.renamed("translator3"));
  return finish(std::move(out), {"COMSTRANS"}, opts);
}

GradedAlgebraObject jts_to_lts(const GradedAlgebraObject& J, const ConstructOptions& opts) {
  const MultilinearOp& B = J.op("bracket3");
  require_identity(J, Identity::JTS, "Jordan to Lie triple", opts);
  const EpsTable E(J.bicharacter, J.basis);
  const auto e = units(J.field, J.dim());
  GradedAlgebraObject out = blank(J, "lts(" + label(J) + ")");
  out.set_op(tabulate("bracket3", 3, J.dim(), [&](Tuple t) {
    GradedElement v = B(e[t[0]], e[t[1]], e[t[2]]);
    v.add_scaled(B(e[t[0]], e[t[2]], e[t[1]]), -E(t[1], t[2]));
    return v;
  }));
  return finish(std::move(out), {"LTS"}, opts);
}

GradedAlgebraObject comstrans_from_bilinear_form(const GradedBasis& basis, const Bicharacter& bc, const Field& field,
                                                 const MultilinearOp& f, const ConstructOptions& opts) {
  check_variant(opts.variant);
  const std::size_t n = basis.size();
  if (!f.scalar_valued() || f.slot_dims() != std::vector<std::size_t>{n, n})
    throw InputError("bilinear form must be a scalar-valued op of arity 2 on the basis");
  GradedAlgebraObject out;
  out.field = field;
  out.bicharacter = bc;
  out.basis = basis;
  out.name = "comstrans(form)";
  out.variant = opts.variant;
  out.set_op(f.renamed("form2"));
  require_report(grading_check(out), "bilinear form is not even");

  const EpsTable E(bc, basis);
  auto fp = std::make_shared<const MultilinearOp>(f);
  auto Ep = std::make_shared<const EpsTable>(E);
  auto one = field.one();
  Equation sym;
  sym.id = "f(x,y) = eps(x,y) f(y,x)";
  sym.scalar = true;
  sym.domains = {index_range(n), index_range(n)};
  sym.eval = [fp, Ep, one](Tuple t, GradedElement& l, GradedElement& r) {
    const auto x = GradedElement::basis(t[0], one), y = GradedElement::basis(t[1], one);
    l = GradedElement();
    l.add_term(0, fp->apply_scalar(x, y));
    r = GradedElement();
    r.add_term(0, (*Ep)(t[0], t[1]) * fp->apply_scalar(y, x));
  };
  require_report(run_equations("EPS_SYMMETRIC", {sym}, basis, {opts.cap, opts.parallel}),
                 "bilinear form is not eps-symmetric");

  const auto e = units(field, n);
  const MultilinearOp c = tabulate("commutator3", 3, n, [&](Tuple t) {
    GradedElement v = fp->apply_scalar(e[t[0]], e[t[2]]) * e[t[1]];
    v.add_scaled(e[t[0]], -(E(t[0], t[2]) * fp->apply_scalar(e[t[1]], e[t[2]])));
    return v;
  });
  out.set_op(c);
  out.set_op(c.renamed("translator3"));
  return finish(std::move(out), {"COMSTRANS"}, opts);
}

GradedAlgebraObject opposite_product(const GradedAlgebraObject& P, const ConstructOptions& opts) {
  const MultilinearOp& M = P.op("product2");
  P.op("bracket3");
  require_identity(P, Identity::TERNARY_LEIBNIZ_POISSON, "opposite product", opts);
  const EpsTable E(P.bicharacter, P.basis);
  const auto e = units(P.field, P.dim());
  GradedAlgebraObject out = blank(P, "op(" + label(P) + ")");
  out.set_op(P.op("bracket3"));
  out.set_op(tabulate("product2", 2, P.dim(), [&](Tuple t) { return E(t[0], t[1]) * M(e[t[1]], e[t[0]]); }));
  return finish(std::move(out), {"TERNARY_LEIBNIZ_POISSON"}, opts);
}

// ---- bimodules --------------------------------------------------------------

Identity bimodule_kind(const BimoduleObject& b) {
  if (b.module.has("mod_prod_left") || b.module.has("mod_prod_right")) return Identity::BIMODULE3_POISSON;
  if (b.module.has("act_LLM") || b.module.has("act_LML") || b.module.has("act_MLL")) return Identity::BIMODULE3;
  if (b.module.has("mod_bracket2")) return Identity::ACTION;
  return Identity::BIMODULE2;
}

namespace {

BimoduleObject finish_bimodule(BimoduleObject b, const ConstructOptions& opts) {
  b.algebra.module.reset();
  const Identity kind = bimodule_kind(b);
  b.algebra.claims = {to_string(kind)};
  if (opts.verify) {
    AxiomReport r = check_bimodule(b, kind, check_options(opts));
    if (!r.pass()) throw ClaimError("constructed module fails " + to_string(kind), std::move(r));
  }
  return b;
}

void require_bimodule(const BimoduleObject& b, Identity kind, const std::string& what, const ConstructOptions& opts) {
  require_report(check_bimodule(b, kind, check_options(opts)), what + ": input fails " + to_string(kind));
}

Identity ternary_kind(const BimoduleObject& b) {
  const Identity k = bimodule_kind(b);
  if (k != Identity::BIMODULE3 && k != Identity::BIMODULE3_POISSON)
    throw InputError("expected a bimodule over a ternary algebra");
  return k;
}

void require_same_algebra(const BimoduleObject& a, const BimoduleObject& b) {
  if (!(a.algebra.basis == b.algebra.basis && a.algebra.ops == b.algebra.ops &&
        a.algebra.bicharacter == b.algebra.bicharacter && a.algebra.field == b.algebra.field))
    throw InputError("modules are over different algebras");
}

}  // namespace

BimoduleObject bimodule_adjoint(const GradedAlgebraObject& L, const ConstructOptions& opts) {
  BimoduleObject b{L, module_like(L.basis)};
  b.algebra.module.reset();
  b.algebra.name = label(L);
  if (L.has_op("bracket3")) {
    const bool poisson = L.has_op("product2");
    require_identity(L, poisson ? Identity::TERNARY_LEIBNIZ_POISSON : Identity::TERNARY_LEIBNIZ, "adjoint module",
                     opts);
    const MultilinearOp& B = L.op("bracket3");
    for (const char* n : {"act_MLL", "act_LML", "act_LLM"}) b.module.actions.emplace(n, B.renamed(n));
    if (poisson)
      for (const char* n : {"mod_prod_left", "mod_prod_right"})
        b.module.actions.emplace(n, L.op("product2").renamed(n));
  } else {
    require_identity(L, Identity::LEIBNIZ2, "adjoint module", opts);
    const MultilinearOp& B = L.op("bracket2");
    for (const char* n : {"left_act", "right_act"}) b.module.actions.emplace(n, B.renamed(n));
  }
  b.algebra.provenance = "adjoint module";
  return finish_bimodule(std::move(b), opts);
}

GradedAlgebraObject bimodule_semidirect3(const BimoduleObject& b, const ConstructOptions& opts) {
  const Identity kind = ternary_kind(b);
  const bool poisson = kind == Identity::BIMODULE3_POISSON;
  require_identity(b.algebra, poisson ? Identity::TERNARY_LEIBNIZ_POISSON : Identity::TERNARY_LEIBNIZ,
                   "ternary semidirect sum", opts);
  require_bimodule(b, kind, "ternary semidirect sum", opts);
  GradedAlgebraObject out = combined_object(b);
  out.name = label(b.algebra) + "(+)M";
  for (auto it = out.ops.begin(); it != out.ops.end();) {
    const bool keep = it->first == "bracket3" || (poisson && it->first == "product2");
    it = keep ? std::next(it) : out.ops.erase(it);
  }
  std::vector<std::string> claims = {"TERNARY_LEIBNIZ"};
  if (poisson) claims.push_back("TERNARY_LEIBNIZ_POISSON");
  return finish(std::move(out), std::move(claims), opts);
}

BimoduleObject bimodule_direct_sum(const BimoduleObject& a, const BimoduleObject& b, const ConstructOptions& opts) {
  require_same_algebra(a, b);
  const Identity kind = bimodule_kind(a);
  if (bimodule_kind(b) != kind) throw InputError("modules of different kinds");
  require_bimodule(a, kind, "module direct sum", opts);
  require_bimodule(b, kind, "module direct sum", opts);

  const std::size_t n = a.algebra.dim(), ka = a.module.basis.size(), kb = b.module.basis.size();
  std::vector<BasisEntry> entries;
  for (const auto& x : a.module.basis.entries()) entries.push_back({"a." + x.name, x.degree});
  for (const auto& x : b.module.basis.entries()) entries.push_back({"b." + x.name, x.degree});
  BimoduleObject out{a.algebra, module_like(GradedBasis(std::move(entries)))};
  for (const auto& [name, act] : a.module.actions) {
    const std::string pattern = *action_pattern(name);
    MultilinearOp op = make_action(name, n, ka + kb);
    act.for_each([&](Tuple t, std::uint32_t o, const Scalar& c) { op.add(t, o, c); });
    b.module.action(name).for_each([&](Tuple t, std::uint32_t o, const Scalar& c) {
      std::vector<std::uint32_t> s(t.begin(), t.end());
      for (std::size_t i = 0; i < s.size(); ++i)
        if (pattern[i] == 'M') s[i] += static_cast<std::uint32_t>(ka);
      op.add(s, static_cast<std::uint32_t>(o + ka), c);
    });
    out.module.actions.emplace(name, std::move(op));
  }
  out.algebra.provenance = "module direct sum";
  return finish_bimodule(std::move(out), opts);
}

BimoduleObject bimodule_tensor(const BimoduleObject& a, const BimoduleObject& b, const ConstructOptions& opts) {
  check_variant(opts.variant);
  require_same_algebra(a, b);
  ternary_kind(a);
  ternary_kind(b);
  require_bimodule(a, Identity::BIMODULE3, "module tensor product", opts);
  require_bimodule(b, Identity::BIMODULE3, "module tensor product", opts);
  const bool amended = opts.variant == "amended";

  const auto& L = a.algebra;
  const std::size_t n = L.dim(), ka = a.module.basis.size(), kb = b.module.basis.size();
  const auto& bc = L.bicharacter;
  const auto &Ma = a.module.basis, &Mb = b.module.basis, &Lb = L.basis;
  const auto el = units(L.field, n), ea = units(L.field, ka), eb = units(L.field, kb);
  const auto &aLLM = a.module.action("act_LLM"), &aLML = a.module.action("act_LML"), &aMLL = a.module.action("act_MLL");
  const auto &bLLM = b.module.action("act_LLM"), &bLML = b.module.action("act_LML"), &bMLL = b.module.action("act_MLL");

  BimoduleObject out{L, module_like(pair_basis(Ma, Mb, L.group()))};
  MultilinearOp llm = make_action("act_LLM", n, ka * kb), lml = make_action("act_LML", n, ka * kb),
                mll = make_action("act_MLL", n, ka * kb);
  // {x, y, m⊗n} = [x,y,m]⊗n + eps(x+y, m) m⊗[x,y,n]
  fill(llm, [&](Tuple t) {
    const std::uint32_t x = t[0], y = t[1], m = t[2] / kb, nn = t[2] % kb;
    GradedElement v = tensor(aLLM(el[x], el[y], ea[m]), eb[nn], kb);
    v.add_scaled(tensor(ea[m], bLLM(el[x], el[y], eb[nn]), kb),
                 bc(Lb.degree(x), Ma.degree(m)) * bc(Lb.degree(y), Ma.degree(m)));
    return v;
  });
  // {x, m⊗n, y} = eps(n, y)[x,m,y]⊗n + eps(x, m) m⊗[x,n,y]
  fill(lml, [&](Tuple t) {
    const std::uint32_t x = t[0], m = t[1] / kb, nn = t[1] % kb, y = t[2];
    GradedElement v = bc(Mb.degree(nn), Lb.degree(y)) * tensor(aLML(el[x], ea[m], el[y]), eb[nn], kb);
    v.add_scaled(tensor(ea[m], bLML(el[x], eb[nn], el[y]), kb), bc(Lb.degree(x), Ma.degree(m)));
    return v;
  });
  // {m⊗n, x, y} = eps(n, x+y)[m,x,y]⊗n (+ m⊗[n,x,y] amended)
  fill(mll, [&](Tuple t) {
    const std::uint32_t m = t[0] / kb, nn = t[0] % kb, x = t[1], y = t[2];
    GradedElement v = (bc(Mb.degree(nn), Lb.degree(x)) * bc(Mb.degree(nn), Lb.degree(y))) *
                      tensor(aMLL(ea[m], el[x], el[y]), eb[nn], kb);
    if (amended) v += tensor(ea[m], bMLL(eb[nn], el[x], el[y]), kb);
    return v;
  });
  out.module.actions.emplace("act_LLM", std::move(llm));
  out.module.actions.emplace("act_LML", std::move(lml));
  out.module.actions.emplace("act_MLL", std::move(mll));
  out.algebra.variant = opts.variant;
  out.algebra.provenance = amended ? "module tensor product; third map m⊗[n,x,y] replaces the duplicated factor"
                                   : "module tensor product; third map keeps only the well-typed summand";
  return finish_bimodule(std::move(out), opts);
}

BimoduleObject bimodule_from_binary(const BimoduleObject& b, const ConstructOptions& opts) {
  const MultilinearOp& B = b.algebra.op("bracket2");
  require_identity(b.algebra, Identity::LEIBNIZ2, "module from binary", opts);
  require_bimodule(b, Identity::BIMODULE2, "module from binary", opts);
  const std::size_t n = b.algebra.dim(), k = b.module.basis.size();
  const auto &l = b.module.action("left_act"), &r = b.module.action("right_act");
  const auto el = units(b.algebra.field, n), em = units(b.algebra.field, k);

  ConstructOptions inner = opts;
  inner.verify = false;
  BimoduleObject out{derive_ternary_from_binary(b.algebra, inner), module_like(b.module.basis)};
  MultilinearOp llm = make_action("act_LLM", n, k), lml = make_action("act_LML", n, k),
                mll = make_action("act_MLL", n, k);
  fill(llm, [&](Tuple t) { return l(el[t[0]], l(el[t[1]], em[t[2]])); });
  fill(lml, [&](Tuple t) { return l(el[t[0]], r(em[t[1]], el[t[2]])); });
  fill(mll, [&](Tuple t) { return r(em[t[0]], B(el[t[1]], el[t[2]])); });
  out.module.actions.emplace("act_LLM", std::move(llm));
  out.module.actions.emplace("act_LML", std::move(lml));
  out.module.actions.emplace("act_MLL", std::move(mll));
  out.algebra.provenance = "module over the derived ternary algebra";
  return finish_bimodule(std::move(out), opts);
}

BimoduleObject bimodule_pullback(const GradedAlgebraObject& src, const GradedAlgebraObject& dst,
                                 const EvenLinearMap& alpha, const ConstructOptions& opts) {
  require_same_space_grading(src, dst);
  const MultilinearOp& B = dst.op("bracket3");
  src.op("bracket3");
  const bool poisson = src.has_op("product2") && dst.has_op("product2");
  const Identity id = poisson ? Identity::TERNARY_LEIBNIZ_POISSON : Identity::TERNARY_LEIBNIZ;
  require_identity(src, id, "pullback module", opts);
  require_identity(dst, id, "pullback module", opts);
  std::vector<std::string> ops = {"bracket3"};
  if (poisson) ops.push_back("product2");
  OperatorOptions oo;
  oo.cap = opts.cap;
  oo.parallel = opts.parallel;
  require_report(check_morphism(src, dst, alpha, ops, oo), "pullback module: alpha is not a morphism");

  const std::size_t n = src.dim(), k = dst.dim();
  std::vector<GradedElement> ax;
  for (std::size_t i = 0; i < n; ++i) ax.push_back(alpha.on_basis(static_cast<std::uint32_t>(i)));
  const auto em = units(dst.field, k);

  BimoduleObject out{src, module_like(dst.basis)};
  MultilinearOp llm = make_action("act_LLM", n, k), lml = make_action("act_LML", n, k),
                mll = make_action("act_MLL", n, k);
  fill(llm, [&](Tuple t) { return B(ax[t[0]], ax[t[1]], em[t[2]]); });
  fill(lml, [&](Tuple t) { return B(ax[t[0]], em[t[1]], ax[t[2]]); });
  fill(mll, [&](Tuple t) { return B(em[t[0]], ax[t[1]], ax[t[2]]); });
  out.module.actions.emplace("act_LLM", std::move(llm));
  out.module.actions.emplace("act_LML", std::move(lml));
  out.module.actions.emplace("act_MLL", std::move(mll));
  if (poisson) {
    const MultilinearOp& P = dst.op("product2");
    MultilinearOp pl = make_action("mod_prod_left", n, k), pr = make_action("mod_prod_right", n, k);
    fill(pl, [&](Tuple t) { return P(ax[t[0]], em[t[1]]); });
    fill(pr, [&](Tuple t) { return P(em[t[0]], ax[t[1]]); });
    out.module.actions.emplace("mod_prod_left", std::move(pl));
    out.module.actions.emplace("mod_prod_right", std::move(pr));
  }
  out.algebra.provenance = "pullback of " + label(dst) + " along a morphism";
  return finish_bimodule(std::move(out), opts);
}

RepresentationObject to_representation(const BimoduleObject& b, const ConstructOptions& opts) {
  ternary_kind(b);
  require_bimodule(b, Identity::BIMODULE3, "representation", opts);
  const std::size_t n = b.algebra.dim(), k = b.module.basis.size();
  RepresentationObject r;
  r.algebra = b.algebra;
  r.algebra.module.reset();
  r.module_basis = b.module.basis;
  // lambda_{x,y}(m) = [x,y,m], mu_{x,y}(m) = [x,m,y], rho_{x,y}(m) = [m,x,y]
  r.lambda = b.module.action("act_LLM").renamed("lambda");
  r.mu = reslot(b.module.action("act_LML"), "mu", {n, n, k}, {0, 2, 1});
  r.rho = reslot(b.module.action("act_MLL"), "rho", {n, n, k}, {1, 2, 0});
  if (opts.verify) {
    AxiomReport rep = check_representation(r, check_options(opts));
    if (!rep.pass()) throw ClaimError("converted representation fails REPRESENTATION3", std::move(rep));
  }
  return r;
}

BimoduleObject from_representation(const RepresentationObject& r, const ConstructOptions& opts) {
  require_report(check_representation(r, check_options(opts)), "module from representation: input fails REPRESENTATION3");
  const std::size_t n = r.algebra.dim(), k = r.module_basis.size();
  BimoduleObject out{r.algebra, module_like(r.module_basis)};
  out.module.actions.emplace("act_LLM", r.lambda.renamed("act_LLM"));
  out.module.actions.emplace("act_LML", reslot(r.mu, "act_LML", {n, k, n}, {0, 2, 1}));
  out.module.actions.emplace("act_MLL", reslot(r.rho, "act_MLL", {k, n, n}, {2, 0, 1}));
  return finish_bimodule(std::move(out), opts);
}

GradedAlgebraObject representation_document(const RepresentationObject& r) {
  GradedAlgebraObject out = r.algebra;
  ModuleData m = module_like(r.module_basis);
  m.actions.emplace("lambda", r.lambda.renamed("lambda"));
  m.actions.emplace("mu", r.mu.renamed("mu"));
  m.actions.emplace("rho", r.rho.renamed("rho"));
  out.module = std::move(m);
  out.claims = {"REPRESENTATION3"};
  return out;
}

}  // namespace colalg
