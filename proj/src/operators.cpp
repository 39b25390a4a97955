#include "colalg/operators.hpp"

#include <memory>

#include "colalg/errors.hpp"

namespace colalg {

namespace {

const std::vector<std::pair<Predicate, const char*>> kNames = {
    {Predicate::AVERAGING, "AVERAGING"},       {Predicate::CENTROID2, "CENTROID2"},
    {Predicate::NIJENHUIS, "NIJENHUIS"},       {Predicate::REYNOLDS2, "REYNOLDS2"},
    {Predicate::ROTA_BAXTER2, "ROTA_BAXTER2"}, {Predicate::CENTROID3, "CENTROID3"},
    {Predicate::REYNOLDS3, "REYNOLDS3"},       {Predicate::ROTA_BAXTER3, "ROTA_BAXTER3"},
    {Predicate::MORPHISM, "MORPHISM"},         {Predicate::INVOLUTION_ANTIAUTO, "INVOLUTION_ANTIAUTO"},
};

using Tuple = std::span<const std::uint32_t>;

struct Ctx {
  GradedAlgebraObject src;
  GradedAlgebraObject dst;
  EvenLinearMap m;
  Scalar w;
  EpsTable eps;
  std::vector<GradedElement> e;   // basis of src
  std::vector<GradedElement> me;  // m(e_i)

  Ctx(GradedAlgebraObject s, GradedAlgebraObject d, EvenLinearMap map, Scalar weight)
      : src(std::move(s)), dst(std::move(d)), m(std::move(map)), w(std::move(weight)), eps(src.bicharacter, src.basis) {
    for (std::size_t i = 0; i < src.dim(); ++i) {
      e.push_back(GradedElement::basis(static_cast<std::uint32_t>(i), src.field.one()));
      me.push_back(m.column(i));
    }
  }
};
using CtxPtr = std::shared_ptr<const Ctx>;
using Body = std::function<void(const Ctx&, const MultilinearOp&, Tuple, GradedElement&, GradedElement&)>;

Equation make(const CtxPtr& c, const MultilinearOp* op, const std::string& id, std::size_t arity, std::size_t n,
              Body f) {
  Equation eq;
  eq.id = id;
  eq.domains.assign(arity, index_range(n));
  eq.eval = [c, op, f](Tuple t, GradedElement& l, GradedElement& r) { f(*c, *op, t, l, r); };
  return eq;
}

void check_map_shape(const GradedBasis& codomain, const GradedBasis& domain, const EvenLinearMap& m) {
  if (m.rows() != codomain.size() || m.cols() != domain.size())
    throw InputError("map is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + ", expected " +
                     std::to_string(codomain.size()) + "x" + std::to_string(domain.size()));
  const auto even = m.check_even(codomain, domain);
  if (!even.pass())
    throw InputError("map is not even: entry (" + even.witnesses.front().names[0] + ", " +
                     even.witnesses.front().names[1] + ") joins different degrees");
}

}  // namespace

std::string to_string(Predicate p) {
  for (const auto& [k, name] : kNames)
    if (k == p) return name;
  return "?";
}

std::optional<Predicate> parse_predicate(const std::string& text) {
  for (const auto& [k, name] : kNames)
    if (text == name) return k;
  return std::nullopt;
}

const std::vector<Predicate>& all_predicates() {
  static const std::vector<Predicate> all = [] {
    std::vector<Predicate> v;
    for (const auto& [k, name] : kNames) v.push_back(k);
    return v;
  }();
  return all;
}

bool needs_weight(Predicate p) { return p == Predicate::ROTA_BAXTER2 || p == Predicate::ROTA_BAXTER3; }

std::size_t predicate_arity(Predicate p) {
  switch (p) {
    case Predicate::CENTROID3:
    case Predicate::REYNOLDS3:
    case Predicate::ROTA_BAXTER3:
      return 3;
    case Predicate::MORPHISM:
      return 0;
    default:
      return 2;
  }
}

std::string predicate_op(const GradedAlgebraObject& obj, Predicate p, const std::string& requested) {
  if (!requested.empty()) return requested;
  if (predicate_arity(p) == 3) return "bracket3";
  if (p == Predicate::INVOLUTION_ANTIAUTO) return "product2";
  return obj.has_op("product2") ? "product2" : "bracket2";
}

std::vector<Equation> operator_equations(const GradedAlgebraObject& obj, const EvenLinearMap& m, Predicate p,
                                         const OperatorOptions& opts) {
  check_map_shape(obj.basis, obj.basis, m);
  if (needs_weight(p) && !opts.weight) throw InputError(to_string(p) + " needs a weight");
  if (!needs_weight(p) && opts.weight) throw InputError(to_string(p) + " takes no weight");
  const Scalar w = opts.weight ? obj.field.coerce(*opts.weight) : obj.field.zero();
  auto c = std::make_shared<const Ctx>(obj, obj, m, w);
  const std::size_t n = obj.dim();
  std::vector<Equation> eqs;

  if (p == Predicate::MORPHISM) {
    for (const auto& [name, op] : c->src.ops) {
      if (op.scalar_valued()) continue;
      const MultilinearOp* o = &op;
      eqs.push_back(make(c, o, "phi(" + name + ") = " + name + "(phi)", op.arity(), n,
                         [](const Ctx& c, const MultilinearOp& op, Tuple t, GradedElement& l, GradedElement& r) {
                           std::vector<const GradedElement*> a, ma;
                           for (auto i : t) {
                             a.push_back(&c.e[i]);
                             ma.push_back(&c.me[i]);
                           }
                           l = c.m(op.apply(a));
                           r = op.apply(ma);
                         }));
    }
    return eqs;
  }

  const MultilinearOp* o = &c->src.op(predicate_op(obj, p, opts.op));
  const std::size_t arity = predicate_arity(p);
  if (o->arity() != arity || o->scalar_valued())
    throw InputError(to_string(p) + " needs an algebra-valued op of arity " + std::to_string(arity));
  auto add = [&](const std::string& id, Body f) { eqs.push_back(make(c, o, id, arity, n, std::move(f))); };

  switch (p) {
    case Predicate::AVERAGING:
      add("phi(phi(x)y) = phi(x)phi(y)", [](const Ctx& c, const MultilinearOp& P, Tuple t, GradedElement& l,
                                             GradedElement& r) {
        l = c.m(P(c.me[t[0]], c.e[t[1]]));
        r = P(c.me[t[0]], c.me[t[1]]);
      });
      add("phi(x)phi(y) = phi(x phi(y))", [](const Ctx& c, const MultilinearOp& P, Tuple t, GradedElement& l,
                                             GradedElement& r) {
        l = P(c.me[t[0]], c.me[t[1]]);
        r = c.m(P(c.e[t[0]], c.me[t[1]]));
      });
      break;
    case Predicate::CENTROID2:
      add("phi(xy) = phi(x)y", [](const Ctx& c, const MultilinearOp& P, Tuple t, GradedElement& l, GradedElement& r) {
        l = c.m(P(c.e[t[0]], c.e[t[1]]));
        r = P(c.me[t[0]], c.e[t[1]]);
      });
      add("phi(x)y = x phi(y)", [](const Ctx& c, const MultilinearOp& P, Tuple t, GradedElement& l, GradedElement& r) {
        l = P(c.me[t[0]], c.e[t[1]]);
        r = P(c.e[t[0]], c.me[t[1]]);
      });
      break;
    case Predicate::NIJENHUIS:
      add("phi(x)phi(y) = phi(phi(x)y + x phi(y) - phi(xy))",
          [](const Ctx& c, const MultilinearOp& P, Tuple t, GradedElement& l, GradedElement& r) {
            const auto &x = c.e[t[0]], &y = c.e[t[1]], &px = c.me[t[0]], &py = c.me[t[1]];
            l = P(px, py);
            r = c.m(P(px, y) + P(x, py) - c.m(P(x, y)));
          });
      break;
    case Predicate::REYNOLDS2:
      add("phi(x)phi(y) = phi(phi(x)y + x phi(y) - phi(x)phi(y))",
          [](const Ctx& c, const MultilinearOp& P, Tuple t, GradedElement& l, GradedElement& r) {
            const auto &x = c.e[t[0]], &y = c.e[t[1]], &px = c.me[t[0]], &py = c.me[t[1]];
            l = P(px, py);
            r = c.m(P(px, y) + P(x, py) - P(px, py));
          });
      break;
    case Predicate::ROTA_BAXTER2:
      add("phi(x)phi(y) = phi(phi(x)y + x phi(y) + w xy)",
          [](const Ctx& c, const MultilinearOp& P, Tuple t, GradedElement& l, GradedElement& r) {
            const auto &x = c.e[t[0]], &y = c.e[t[1]], &px = c.me[t[0]], &py = c.me[t[1]];
            l = P(px, py);
            GradedElement inner = P(px, y) + P(x, py);
            inner.add_scaled(P(x, y), c.w);
            r = c.m(inner);
          });
      break;
    case Predicate::CENTROID3:
      add("theta[x,y,z] = [theta x,y,z]",
          [](const Ctx& c, const MultilinearOp& B, Tuple t, GradedElement& l, GradedElement& r) {
            l = c.m(B(c.e[t[0]], c.e[t[1]], c.e[t[2]]));
            r = B(c.me[t[0]], c.e[t[1]], c.e[t[2]]);
          });
      add("[theta x,y,z] = [x,theta y,z]",
          [](const Ctx& c, const MultilinearOp& B, Tuple t, GradedElement& l, GradedElement& r) {
            l = B(c.me[t[0]], c.e[t[1]], c.e[t[2]]);
            r = B(c.e[t[0]], c.me[t[1]], c.e[t[2]]);
          });
      add("[x,theta y,z] = [x,y,theta z]",
          [](const Ctx& c, const MultilinearOp& B, Tuple t, GradedElement& l, GradedElement& r) {
            l = B(c.e[t[0]], c.me[t[1]], c.e[t[2]]);
            r = B(c.e[t[0]], c.e[t[1]], c.me[t[2]]);
          });
      break;
    case Predicate::REYNOLDS3:
      add("[Px,Py,Pz] = P([Px,Py,z] + [Px,y,Pz] + [x,Py,Pz] - [Px,Py,Pz])",
          [](const Ctx& c, const MultilinearOp& B, Tuple t, GradedElement& l, GradedElement& r) {
            const auto &x = c.e[t[0]], &y = c.e[t[1]], &z = c.e[t[2]];
            const auto &px = c.me[t[0]], &py = c.me[t[1]], &pz = c.me[t[2]];
            l = B(px, py, pz);
            r = c.m(B(px, py, z) + B(px, y, pz) + B(x, py, pz) - B(px, py, pz));
          });
      break;
    case Predicate::ROTA_BAXTER3:
      add("[Rx,Ry,Rz] = R([Rx,Ry,z] + [Rx,y,Rz] + [x,Ry,Rz] + w(...) + w^2[x,y,z])",
          [](const Ctx& c, const MultilinearOp& B, Tuple t, GradedElement& l, GradedElement& r) {
            const auto &x = c.e[t[0]], &y = c.e[t[1]], &z = c.e[t[2]];
            const auto &px = c.me[t[0]], &py = c.me[t[1]], &pz = c.me[t[2]];
            l = B(px, py, pz);
            GradedElement inner = B(px, py, z) + B(px, y, pz) + B(x, py, pz);
            inner.add_scaled(B(px, y, z) + B(x, py, z) + B(x, y, pz), c.w);
            inner.add_scaled(B(x, y, z), c.w * c.w);
            r = c.m(inner);
          });
      break;
    case Predicate::INVOLUTION_ANTIAUTO: {
      Equation sq = make(c, o, "theta^2 = id", 1, n,
                         [](const Ctx& c, const MultilinearOp&, Tuple t, GradedElement& l, GradedElement& r) {
                           l = c.m(c.me[t[0]]);
                           r = c.e[t[0]];
                         });
      eqs.push_back(std::move(sq));
      add("theta(xy) = eps(x,y)theta(y)theta(x)",
          [](const Ctx& c, const MultilinearOp& P, Tuple t, GradedElement& l, GradedElement& r) {
            l = c.m(P(c.e[t[0]], c.e[t[1]]));
            r = c.eps(t[0], t[1]) * P(c.me[t[1]], c.me[t[0]]);
          });
      break;
    }
    default:
      break;
  }
  return eqs;
}

AxiomReport check_operator(const GradedAlgebraObject& obj, const EvenLinearMap& m, Predicate p,
                           const OperatorOptions& opts) {
  const auto eqs = operator_equations(obj, m, p, opts);
  return run_equations(to_string(p), eqs, obj.basis, {opts.cap, opts.parallel});
}

AxiomReport check_morphism(const GradedAlgebraObject& src, const GradedAlgebraObject& dst, const EvenLinearMap& alpha,
                           const std::vector<std::string>& ops, const OperatorOptions& opts) {
  if (!(src.bicharacter == dst.bicharacter)) throw InputError("morphism between algebras with different bicharacters");
  check_map_shape(dst.basis, src.basis, alpha);
  std::vector<std::string> names = ops;
  if (names.empty())
    for (const auto& [name, op] : src.ops)
      if (!op.scalar_valued()) names.push_back(name);
  auto c = std::make_shared<const Ctx>(src, dst, alpha, src.field.zero());
  std::vector<Equation> eqs;
  for (const auto& name : names) {
    const MultilinearOp* s = &c->src.op(name);
    const MultilinearOp* d = &c->dst.op(name);
    Equation eq;
    eq.id = "alpha(" + name + ") = " + name + "'(alpha)";
    eq.domains.assign(s->arity(), index_range(src.dim()));
    eq.eval = [c, s, d](Tuple t, GradedElement& l, GradedElement& r) {
      std::vector<const GradedElement*> a, ma;
      for (auto i : t) {
        a.push_back(&c->e[i]);
        ma.push_back(&c->me[i]);
      }
      l = c->m(s->apply(a));
      r = d->apply(ma);
    };
    eqs.push_back(std::move(eq));
  }
  KernelOptions k{opts.cap, opts.parallel, &dst.basis};
  return run_equations("MORPHISM", eqs, src.basis, k);
}

}  // namespace colalg
