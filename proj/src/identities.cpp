#include "colalg/identities.hpp"

#include <map>
#include <memory>

#include "colalg/errors.hpp"

namespace colalg {

namespace {

const std::vector<std::pair<Identity, const char*>> kNames = {
    {Identity::ASSOC, "ASSOC"},
    {Identity::EPS_COMM, "EPS_COMM"},
    {Identity::EPS_SKEW2, "EPS_SKEW2"},
    {Identity::LEIBNIZ2, "LEIBNIZ2"},
    {Identity::LIE_COLOR, "LIE_COLOR"},
    {Identity::RIGHT_LEIBNIZ_COMPAT, "RIGHT_LEIBNIZ_COMPAT"},
    {Identity::LEIBNIZ_POISSON, "LEIBNIZ_POISSON"},
    {Identity::TERNARY_LEIBNIZ, "TERNARY_LEIBNIZ"},
    {Identity::TERNARY_LIE, "TERNARY_LIE"},
    {Identity::TERNARY_RIGHT_LEIBNIZ, "TERNARY_RIGHT_LEIBNIZ"},
    {Identity::TERNARY_LEIBNIZ_POISSON, "TERNARY_LEIBNIZ_POISSON"},
    {Identity::LTS, "LTS"},
    {Identity::JTS, "JTS"},
    {Identity::TRIALGEBRA, "TRIALGEBRA"},
    {Identity::DIALGEBRA, "DIALGEBRA"},
    {Identity::LEFT_SYMMETRIC, "LEFT_SYMMETRIC"},
    {Identity::COMSTRANS, "COMSTRANS"},
    {Identity::ACTION, "ACTION"},
    {Identity::BIMODULE2, "BIMODULE2"},
    {Identity::BIMODULE3, "BIMODULE3"},
    {Identity::BIMODULE3_POISSON, "BIMODULE3_POISSON"},
    {Identity::REPRESENTATION3, "REPRESENTATION3"},
};

using Domains = std::vector<std::vector<std::uint32_t>>;
using Tuple = std::span<const std::uint32_t>;
using Op = const MultilinearOp*;

struct Ctx {
  GradedAlgebraObject obj;
  EpsTable eps;
  std::vector<GradedElement> e;

  explicit Ctx(GradedAlgebraObject o) : obj(std::move(o)), eps(obj.bicharacter, obj.basis) {
    for (std::size_t i = 0; i < obj.dim(); ++i)
      e.push_back(GradedElement::basis(static_cast<std::uint32_t>(i), obj.field.one()));
  }
  const Scalar& E(std::uint32_t a, std::uint32_t b) const { return eps(a, b); }
};
using CtxPtr = std::shared_ptr<const Ctx>;

/// Expands one equation template into one Equation per slot pattern.
using PatternFn = std::function<std::vector<std::pair<std::string, Domains>>(std::size_t arity)>;

PatternFn all_slots(std::size_t n) {
  return [n](std::size_t arity) {
    return std::vector<std::pair<std::string, Domains>>{{"", Domains(arity, index_range(n))}};
  };
}

/// Slot patterns over L = [0, n) and M = [n, n + k) with a module-slot count in [lo, hi].
PatternFn module_slots(std::size_t n, std::size_t k, std::size_t lo, std::size_t hi) {
  return [=](std::size_t arity) {
    std::vector<std::pair<std::string, Domains>> out;
    for (std::uint32_t mask = 0; mask < (1u << arity); ++mask) {
      const auto count = static_cast<std::size_t>(__builtin_popcount(mask));
      if (count < lo || count > hi) continue;
      std::string label = "[";
      Domains d;
      for (std::size_t s = 0; s < arity; ++s) {
        const bool m = (mask >> (arity - 1 - s)) & 1u;
        label += m ? 'M' : 'L';
        d.push_back(m ? index_range(n, n + k) : index_range(n));
      }
      out.emplace_back(label + "]", std::move(d));
    }
    return out;
  };
}

class Builder {
 public:
  Builder(CtxPtr ctx, PatternFn patterns) : ctx_(std::move(ctx)), patterns_(std::move(patterns)) {}

  const CtxPtr& ctx() const { return ctx_; }
  Op op(const std::string& name) const { return &ctx_->obj.op(name); }

  void add(const std::string& id, std::size_t arity,
           std::function<void(const Ctx&, Tuple, GradedElement&, GradedElement&)> f,
           std::function<bool(const Ctx&, Tuple)> filter = {}) {
    for (auto& [label, domains] : patterns_(arity)) {
      Equation eq;
      eq.id = label.empty() ? id : id + " " + label;
      eq.domains = std::move(domains);
      CtxPtr c = ctx_;
      eq.eval = [c, f](Tuple t, GradedElement& lhs, GradedElement& rhs) { f(*c, t, lhs, rhs); };
      if (filter) eq.filter = [c, filter](Tuple t) { return filter(*c, t); };
      eqs_.push_back(std::move(eq));
    }
  }

  std::vector<Equation> take() { return std::move(eqs_); }

 private:
  CtxPtr ctx_;
  PatternFn patterns_;
  std::vector<Equation> eqs_;
};

// ---- equation templates ---------------------------------------------------

void add_assoc(Builder& b, Op p, const std::string& id = "ASSOC") {
  b.add(id, 3, [p](const Ctx& c, Tuple t, GradedElement& l, GradedElement& r) {
    const auto &x = c.e[t[0]], &y = c.e[t[1]], &z = c.e[t[2]];
    l = (*p)((*p)(x, y), z);
    r = (*p)(x, (*p)(y, z));
  });
}

void add_eps_comm(Builder& b, Op p) {
  b.add("EPS_COMM", 2, [p](const Ctx& c, Tuple t, GradedElement& l, GradedElement& r) {
    l = (*p)(c.e[t[0]], c.e[t[1]]);
    r = c.E(t[0], t[1]) * (*p)(c.e[t[1]], c.e[t[0]]);
  });
}

void add_eps_skew(Builder& b, Op br) {
  b.add("EPS_SKEW2", 2, [br](const Ctx& c, Tuple t, GradedElement& l, GradedElement& r) {
    l = (*br)(c.e[t[0]], c.e[t[1]]);
    r = -(c.E(t[0], t[1]) * (*br)(c.e[t[1]], c.e[t[0]]));
  });
}

// [[x,y],z] = [x,[y,z]] + eps(y,z)[[x,z],y]
void add_leibniz2(Builder& b, Op br) {
  b.add("LEIBNIZ2", 3, [br](const Ctx& c, Tuple t, GradedElement& l, GradedElement& r) {
    const auto &x = c.e[t[0]], &y = c.e[t[1]], &z = c.e[t[2]];
    l = (*br)((*br)(x, y), z);
    r = (*br)(x, (*br)(y, z));
    r.add_scaled((*br)((*br)(x, z), y), c.E(t[1], t[2]));
  });
}

// [x.y,z] = x.[y,z] + eps(y,z)[x,z].y
void add_compat(Builder& b, Op p, Op br) {
  b.add("RIGHT_LEIBNIZ_COMPAT", 3, [p, br](const Ctx& c, Tuple t, GradedElement& l, GradedElement& r) {
    const auto &x = c.e[t[0]], &y = c.e[t[1]], &z = c.e[t[2]];
    l = (*br)((*p)(x, y), z);
    r = (*p)(x, (*br)(y, z));
    r.add_scaled((*p)((*br)(x, z), y), c.E(t[1], t[2]));
  });
}

// [[x,y,z],t,u] = [x,y,[z,t,u]] + eps(z,t+u)[x,[y,t,u],z] + eps(y+z,t+u)[[x,t,u],y,z]
void add_lci(Builder& b, Op br, const std::string& id = "TERNARY_LEIBNIZ") {
  b.add(id, 5, [br](const Ctx& c, Tuple t, GradedElement& l, GradedElement& r) {
    const auto &x = c.e[t[0]], &y = c.e[t[1]], &z = c.e[t[2]], &tt = c.e[t[3]], &u = c.e[t[4]];
    const Scalar ez = c.E(t[2], t[3]) * c.E(t[2], t[4]);
    const Scalar ey = c.E(t[1], t[3]) * c.E(t[1], t[4]);
    l = (*br)((*br)(x, y, z), tt, u);
    r = (*br)(x, y, (*br)(z, tt, u));
    r.add_scaled((*br)(x, (*br)(y, tt, u), z), ez);
    r.add_scaled((*br)((*br)(x, tt, u), y, z), ey * ez);
  });
}

// [x.y,z,t] = x.[y,z,t] + eps(y,z+t)[x,z,t].y
void add_cal3(Builder& b, Op p, Op br) {
  b.add("TERNARY_RIGHT_LEIBNIZ", 4, [p, br](const Ctx& c, Tuple t, GradedElement& l, GradedElement& r) {
    const auto &x = c.e[t[0]], &y = c.e[t[1]], &z = c.e[t[2]], &tt = c.e[t[3]];
    l = (*br)((*p)(x, y), z, tt);
    r = (*p)(x, (*br)(y, z, tt));
    r.add_scaled((*p)((*br)(x, z, tt), y), c.E(t[1], t[2]) * c.E(t[1], t[3]));
  });
}

void add_skew12(Builder& b, Op br, const std::string& id) {
  b.add(id, 3, [br](const Ctx& c, Tuple t, GradedElement& l, GradedElement& r) {
    l = (*br)(c.e[t[0]], c.e[t[1]], c.e[t[2]]);
    r = -(c.E(t[0], t[1]) * (*br)(c.e[t[1]], c.e[t[0]], c.e[t[2]]));
  });
}

void add_skew23(Builder& b, Op br, const std::string& id) {
  b.add(id, 3, [br](const Ctx& c, Tuple t, GradedElement& l, GradedElement& r) {
    l = (*br)(c.e[t[0]], c.e[t[1]], c.e[t[2]]);
    r = -(c.E(t[1], t[2]) * (*br)(c.e[t[0]], c.e[t[2]], c.e[t[1]]));
  });
}

// [x,y,z] = sign * eps(x,y)eps(x,z)eps(y,z)[z,y,x]
void add_outer(Builder& b, Op br, const std::string& id, int sign) {
  b.add(id, 3, [br, sign](const Ctx& c, Tuple t, GradedElement& l, GradedElement& r) {
    l = (*br)(c.e[t[0]], c.e[t[1]], c.e[t[2]]);
    r = (Scalar(sign) * c.E(t[0], t[1]) * c.E(t[0], t[2]) * c.E(t[1], t[2])) *
        (*br)(c.e[t[2]], c.e[t[1]], c.e[t[0]]);
  });
}

// eps(z,x)[x,y,z] + eps(x,y)[y,z,x] + eps(y,z)[z,x,y] = 0
void add_cyclic(Builder& b, Op br, const std::string& id) {
  b.add(id, 3, [br](const Ctx& c, Tuple t, GradedElement& l, GradedElement& r) {
    const auto &x = c.e[t[0]], &y = c.e[t[1]], &z = c.e[t[2]];
    l = c.E(t[2], t[0]) * (*br)(x, y, z);
    l.add_scaled((*br)(y, z, x), c.E(t[0], t[1]));
    l.add_scaled((*br)(z, x, y), c.E(t[1], t[2]));
    r = GradedElement();
  });
}

// [[x,y,z],t,u] = [x,y,[z,t,u]] - eps(z,t+u)eps(t,u)[x,[y,u,t],z] + eps(y+z,t+u)[[x,t,u],y,z]
void add_jordan(Builder& b, Op br) {
  b.add("JTS.jordan_triple", 5, [br](const Ctx& c, Tuple t, GradedElement& l, GradedElement& r) {
    const auto &x = c.e[t[0]], &y = c.e[t[1]], &z = c.e[t[2]], &tt = c.e[t[3]], &u = c.e[t[4]];
    const Scalar ez = c.E(t[2], t[3]) * c.E(t[2], t[4]);
    const Scalar ey = c.E(t[1], t[3]) * c.E(t[1], t[4]);
    l = (*br)((*br)(x, y, z), tt, u);
    r = (*br)(x, y, (*br)(z, tt, u));
    r.add_scaled((*br)(x, (*br)(y, u, tt), z), -(ez * c.E(t[3], t[4])));
    r.add_scaled((*br)((*br)(x, tt, u), y, z), ey * ez);
  });
}

enum class Side { L, R };

/// (x a y) b z  vs  x c (y d z), with each side's inner op first.
void add_mixed(Builder& b, const std::string& id, Op a, Op bo, Side sl, Op c2, Op d, Side sr) {
  b.add(id, 3, [=](const Ctx& c, Tuple t, GradedElement& l, GradedElement& r) {
    const auto &x = c.e[t[0]], &y = c.e[t[1]], &z = c.e[t[2]];
    l = sl == Side::L ? (*bo)((*a)(x, y), z) : (*a)(x, (*bo)(y, z));
    r = sr == Side::L ? (*d)((*c2)(x, y), z) : (*c2)(x, (*d)(y, z));
  });
}

void add_trialgebra(Builder& b) {
  Op L = b.op("left"), M = b.op("middle"), R = b.op("right");
  // (x-|y)-|z = x-|(y|-z) = x-|(y_|_z)
  add_mixed(b, "(x-|y)-|z = x-|(y|-z)", L, L, Side::L, L, R, Side::R);
  add_mixed(b, "(x-|y)-|z = x-|(y_|_z)", L, L, Side::L, L, M, Side::R);
  add_mixed(b, "(x|-y)-|z = x|-(y-|z)", R, L, Side::L, R, L, Side::R);
  add_mixed(b, "(x-|y)|-z = x|-(y|-z)", L, R, Side::L, R, R, Side::R);
  add_mixed(b, "(x-|y)|-z = (x_|_y)|-z", L, R, Side::L, M, R, Side::L);
  add_mixed(b, "(x_|_y)-|z = x_|_(y-|z)", M, L, Side::L, M, L, Side::R);
  add_mixed(b, "(x-|y)_|_z = x_|_(y|-z)", L, M, Side::L, M, R, Side::R);
  add_mixed(b, "(x|-y)_|_z = x|-(y_|_z)", R, M, Side::L, R, M, Side::R);
  add_assoc(b, L, "ASSOC(-|)");
  add_assoc(b, M, "ASSOC(_|_)");
  add_assoc(b, R, "ASSOC(|-)");
}

void add_dialgebra(Builder& b) {
  Op L = b.op("left"), R = b.op("right");
  add_mixed(b, "(x-|y)-|z = x-|(y-|z)", L, L, Side::L, L, L, Side::R);
  add_mixed(b, "(x-|y)-|z = x-|(y|-z)", L, L, Side::L, L, R, Side::R);
  add_mixed(b, "(x|-y)-|z = x|-(y-|z)", R, L, Side::L, R, L, Side::R);
  add_mixed(b, "(x-|y)|-z = x|-(y|-z)", L, R, Side::L, R, R, Side::R);
  add_mixed(b, "(x-|y)|-z = (x|-y)|-z", L, R, Side::L, R, R, Side::L);
}

// (xy)z - x(yz) = (yx)z - y(xz)
void add_left_symmetric(Builder& b, Op p) {
  b.add("LEFT_SYMMETRIC", 3, [p](const Ctx& c, Tuple t, GradedElement& l, GradedElement& r) {
    const auto &x = c.e[t[0]], &y = c.e[t[1]], &z = c.e[t[2]];
    l = (*p)((*p)(x, y), z) - (*p)(x, (*p)(y, z));
    r = (*p)((*p)(y, x), z) - (*p)(y, (*p)(x, z));
  });
}

void add_comstrans(Builder& b, bool amended) {
  Op C = b.op("commutator3"), T = b.op("translator3");
  // <x,y,x> = [x,y,x] is quadratic in x; over homogeneous x it is equivalent
  // (char != 2) to its polarization on pairs x, z of equal degree.
  b.add(
      "COMSTRANS.translator_eq_commutator", 3,
      [C, T](const Ctx& c, Tuple t, GradedElement& l, GradedElement& r) {
        const auto &x = c.e[t[0]], &y = c.e[t[1]], &z = c.e[t[2]];
        l = (*T)(x, y, z) + (*T)(z, y, x);
        r = (*C)(x, y, z) + (*C)(z, y, x);
      },
      [](const Ctx& c, Tuple t) { return c.obj.basis.degree(t[0]) == c.obj.basis.degree(t[2]); });
  if (amended)
    add_skew12(b, C, "COMSTRANS.skew(amended)");
  else
    add_skew23(b, C, "COMSTRANS.skew(printed)");
  add_cyclic(b, T, "COMSTRANS.translator_cyclic");
}

std::string main_op(const CheckOptions& opts, const std::string& fallback) {
  return opts.op.empty() ? fallback : opts.op;
}

bool is_amended(const CheckOptions& opts) {
  if (opts.variant.empty() || opts.variant == "printed") return false;
  if (opts.variant == "amended") return true;
  throw InputError("unknown variant '" + opts.variant + "' (expected printed or amended)");
}

void add_identity(Builder& b, Identity id, const CheckOptions& opts) {
  switch (id) {
    case Identity::ASSOC:
      add_assoc(b, b.op(main_op(opts, "product2")));
      return;
    case Identity::EPS_COMM:
      add_eps_comm(b, b.op(main_op(opts, "product2")));
      return;
    case Identity::EPS_SKEW2:
      add_eps_skew(b, b.op(main_op(opts, "bracket2")));
      return;
    case Identity::LEIBNIZ2:
      add_leibniz2(b, b.op(main_op(opts, "bracket2")));
      return;
    case Identity::LIE_COLOR: {
      Op br = b.op(main_op(opts, "bracket2"));
      add_leibniz2(b, br);
      add_eps_skew(b, br);
      return;
    }
    case Identity::RIGHT_LEIBNIZ_COMPAT:
      add_compat(b, b.op("product2"), b.op("bracket2"));
      return;
    case Identity::LEIBNIZ_POISSON: {
      Op p = b.op("product2"), br = b.op("bracket2");
      add_assoc(b, p);
      add_leibniz2(b, br);
      add_compat(b, p, br);
      return;
    }
    case Identity::TERNARY_LEIBNIZ:
      add_lci(b, b.op(main_op(opts, "bracket3")));
      return;
    case Identity::TERNARY_LIE: {
      Op br = b.op(main_op(opts, "bracket3"));
      add_lci(b, br);
      add_skew12(b, br, "TERNARY_LIE.skew(1,2)");
      add_skew23(b, br, "TERNARY_LIE.skew(2,3)");
      add_outer(b, br, "TERNARY_LIE.skew(1,3)", -1);
      return;
    }
    case Identity::TERNARY_RIGHT_LEIBNIZ:
      add_cal3(b, b.op("product2"), b.op("bracket3"));
      return;
    case Identity::TERNARY_LEIBNIZ_POISSON: {
      Op p = b.op("product2"), br = b.op("bracket3");
      add_assoc(b, p);
      add_lci(b, br);
      add_cal3(b, p, br);
      return;
    }
    case Identity::LTS: {
      Op br = b.op(main_op(opts, "bracket3"));
      add_lci(b, br);
      add_skew23(b, br, "LTS.right_skew");
      add_cyclic(b, br, "LTS.ternary_jacobi");
      return;
    }
    case Identity::JTS: {
      Op br = b.op(main_op(opts, "bracket3"));
      add_outer(b, br, "JTS.outer_symmetry", 1);
      add_jordan(b, br);
      return;
    }
    case Identity::TRIALGEBRA:
      add_trialgebra(b);
      return;
    case Identity::DIALGEBRA:
      add_dialgebra(b);
      return;
    case Identity::LEFT_SYMMETRIC: {
      const auto& obj = b.ctx()->obj;
      for (std::size_t i = 0; i < obj.dim(); ++i)
        if (!obj.group().is_zero(obj.basis.degree(i)))
          throw InputError("LEFT_SYMMETRIC is defined for the trivial grading only");
      add_left_symmetric(b, b.op(main_op(opts, "product2")));
      return;
    }
    case Identity::COMSTRANS:
      add_comstrans(b, is_amended(opts));
      return;
    default:
      throw InputError(to_string(id) + " is a module identity");
  }
}

RepresentationObject representation_of(const GradedAlgebraObject& obj) {
  if (!obj.module) throw InputError("REPRESENTATION3 needs a module block with lambda, mu, rho");
  RepresentationObject r;
  r.algebra = obj;
  r.algebra.module.reset();
  r.module_basis = obj.module->basis;
  r.lambda = obj.module->action("lambda");
  r.mu = obj.module->action("mu");
  r.rho = obj.module->action("rho");
  return r;
}

GradedElement shifted(const GradedElement& v, std::size_t n) {
  GradedElement out;
  for (const auto& t : v.terms()) out.add_term(static_cast<std::uint32_t>(t.index + n), t.coef);
  return out;
}

}  // namespace

std::string to_string(Identity id) {
  for (const auto& [k, name] : kNames)
    if (k == id) return name;
  return "?";
}

std::optional<Identity> parse_identity(const std::string& text) {
  for (const auto& [k, name] : kNames)
    if (text == name) return k;
  return std::nullopt;
}

const std::vector<Identity>& all_identities() {
  static const std::vector<Identity> all = [] {
    std::vector<Identity> v;
    for (const auto& [k, name] : kNames) v.push_back(k);
    return v;
  }();
  return all;
}

bool is_module_identity(Identity id) {
  return id == Identity::ACTION || id == Identity::BIMODULE2 || id == Identity::BIMODULE3 ||
         id == Identity::BIMODULE3_POISSON || id == Identity::REPRESENTATION3;
}

namespace {

std::vector<Equation> bimodule_equations(const BimoduleObject& bm, Identity kind) {
  const std::size_t n = bm.algebra.dim();
  const std::size_t k = bm.module.basis.size();
  auto require = [&](std::initializer_list<const char*> names) {
    for (const char* a : names)
      if (!bm.module.has(a)) throw InputError(to_string(kind) + " needs module action '" + a + "'");
  };
  switch (kind) {
    case Identity::BIMODULE2:
      require({"left_act", "right_act"});
      bm.algebra.op("bracket2");
      break;
    case Identity::ACTION:
      require({"left_act", "right_act", "mod_bracket2"});
      bm.algebra.op("bracket2");
      break;
    case Identity::BIMODULE3:
      require({"act_MLL", "act_LML", "act_LLM"});
      bm.algebra.op("bracket3");
      break;
    case Identity::BIMODULE3_POISSON:
      require({"act_MLL", "act_LML", "act_LLM", "mod_prod_left", "mod_prod_right"});
      bm.algebra.op("bracket3");
      bm.algebra.op("product2");
      break;
    default:
      throw InputError(to_string(kind) + " is not a bimodule kind");
  }
  auto ctx = std::make_shared<const Ctx>(combined_object(bm));
  const bool action = kind == Identity::ACTION;
  Builder b(ctx, module_slots(n, k, 1, action ? 2 : 1));
  switch (kind) {
    case Identity::BIMODULE2:
    case Identity::ACTION:
      add_leibniz2(b, b.op("bracket2"));
      break;
    case Identity::BIMODULE3:
      add_lci(b, b.op("bracket3"));
      break;
    default: {
      Op p = b.op("product2"), br = b.op("bracket3");
      add_lci(b, br);
      add_assoc(b, p);
      add_cal3(b, p, br);
    }
  }
  return b.take();
}

std::vector<Equation> representation_equations(const RepresentationObject& rep) {
  const std::size_t n = rep.algebra.dim();
  const std::size_t k = rep.module_basis.size();
  const std::vector<std::size_t> dims = {n, n, k};
  for (const MultilinearOp* op : {&rep.lambda, &rep.mu, &rep.rho})
    if (op->slot_dims() != dims || op->out_dim() != k)
      throw InputError("representation map '" + op->name() + "' must have shape (L, L, M) -> M");
  const MultilinearOp& br = rep.algebra.op("bracket3");

  struct RepOps {
    MultilinearOp L, Mu, R, B;
    std::vector<GradedElement> m;
  };
  auto ops = std::make_shared<RepOps>(RepOps{rep.lambda, rep.mu, rep.rho, br, {}});
  for (std::size_t j = 0; j < k; ++j)
    ops->m.push_back(GradedElement::basis(static_cast<std::uint32_t>(j), rep.algebra.field.one()));
  BimoduleObject shell{rep.algebra, ModuleData{rep.module_basis, {}}};
  auto ctx = std::make_shared<const Ctx>(combined_object(shell));

  const Domains domains = {index_range(n), index_range(n), index_range(n), index_range(n), index_range(n, n + k)};
  std::vector<Equation> eqs;
  using Body = void (*)(const Ctx&, const RepOps&, Tuple, const GradedElement&, GradedElement&, GradedElement&);
  auto add = [&](const std::string& id, Body f) {
    Equation eq;
    eq.id = id;
    eq.domains = domains;
    eq.eval = [ctx, ops, f, n](Tuple t, GradedElement& l, GradedElement& r) {
      f(*ctx, *ops, t, ops->m[t[4] - n], l, r);
      l = shifted(l, n);
      r = shifted(r, n);
    };
    eqs.push_back(std::move(eq));
  };
  // t = (x, y, z, t, m); t[4] is the module vector in combined numbering, so eps sees its degree.
  add("REPRESENTATION3.1", [](const Ctx& c, const RepOps& o, Tuple t, const GradedElement& m, GradedElement& l,
                              GradedElement& r) {
    const auto& e = c.e;
    const auto x = t[0], y = t[1], z = t[2], tt = t[3], mi = t[4];
    l = o.L(o.B(e[x], e[y], e[z]), e[tt], m);
    r = o.L(e[x], e[y], o.L(e[z], e[tt], m));
    const Scalar ez = c.E(z, tt) * c.E(z, mi);
    r.add_scaled(o.Mu(e[x], e[z], o.L(e[y], e[tt], m)), ez);
    r.add_scaled(o.R(e[y], e[z], o.L(e[x], e[tt], m)), ez * c.E(y, tt) * c.E(y, mi));
  });
  add("REPRESENTATION3.2", [](const Ctx& c, const RepOps& o, Tuple t, const GradedElement& m, GradedElement& l,
                              GradedElement& r) {
    const auto& e = c.e;
    const auto x = t[0], y = t[1], z = t[2], tt = t[3], mi = t[4];
    l = o.Mu(o.B(e[x], e[y], e[z]), e[tt], m);
    r = o.L(e[x], e[y], o.Mu(e[z], e[tt], m));
    const Scalar ez = c.E(z, mi) * c.E(z, tt);
    r.add_scaled(o.Mu(e[x], e[z], o.Mu(e[y], e[tt], m)), ez);
    r.add_scaled(o.R(e[y], e[z], o.Mu(e[x], e[tt], m)), ez * c.E(y, mi) * c.E(y, tt));
  });
  add("REPRESENTATION3.3", [](const Ctx& c, const RepOps& o, Tuple t, const GradedElement& m, GradedElement& l,
                              GradedElement& r) {
    const auto& e = c.e;
    const auto x = t[0], y = t[1], z = t[2], tt = t[3], mi = t[4];
    l = o.R(e[z], e[tt], o.L(e[x], e[y], m));
    r = o.L(e[x], e[y], o.R(e[z], e[tt], m));
    const Scalar em = c.E(mi, z) * c.E(mi, tt);
    r.add_scaled(o.L(e[x], o.B(e[y], e[z], e[tt]), m), em);
    r.add_scaled(o.L(o.B(e[x], e[z], e[tt]), e[y], m), em * c.E(y, z) * c.E(y, tt));
  });
  add("REPRESENTATION3.4", [](const Ctx& c, const RepOps& o, Tuple t, const GradedElement& m, GradedElement& l,
                              GradedElement& r) {
    const auto& e = c.e;
    const auto x = t[0], y = t[1], z = t[2], tt = t[3], mi = t[4];
    l = o.R(e[z], e[tt], o.Mu(e[x], e[y], m));
    r = o.Mu(e[x], o.B(e[y], e[z], e[tt]), m);
    const Scalar ey = c.E(y, z) * c.E(y, tt);
    r.add_scaled(o.Mu(e[x], e[y], o.R(e[z], e[tt], m)), ey);
    r.add_scaled(o.Mu(o.B(e[x], e[z], e[tt]), e[y], m), ey * c.E(mi, z) * c.E(mi, tt));
  });
  add("REPRESENTATION3.5", [](const Ctx& c, const RepOps& o, Tuple t, const GradedElement& m, GradedElement& l,
                              GradedElement& r) {
    const auto& e = c.e;
    const auto x = t[0], y = t[1], z = t[2], tt = t[3];
    l = o.R(e[z], e[tt], o.R(e[x], e[y], m));
    r = o.R(e[x], o.B(e[y], e[z], e[tt]), m);
    const Scalar ey = c.E(y, z) * c.E(y, tt);
    r.add_scaled(o.R(o.B(e[x], e[z], e[tt]), e[y], m), ey);
    r.add_scaled(o.R(e[x], e[y], o.R(e[z], e[tt], m)), ey * c.E(x, z) * c.E(x, tt));
  });
  return eqs;
}

}  // namespace

std::vector<Equation> identity_equations(const GradedAlgebraObject& obj, Identity id, const CheckOptions& opts) {
  if (id == Identity::REPRESENTATION3) return representation_equations(representation_of(obj));
  if (is_module_identity(id)) return bimodule_equations(as_bimodule(obj), id);
  auto ctx = std::make_shared<const Ctx>(obj);
  Builder b(ctx, all_slots(obj.dim()));
  add_identity(b, id, opts);
  return b.take();
}

AxiomReport check_identity(const GradedAlgebraObject& obj, Identity id, const CheckOptions& opts) {
  if (id == Identity::REPRESENTATION3) return check_representation(representation_of(obj), opts);
  if (is_module_identity(id)) return check_bimodule(as_bimodule(obj), id, opts);
  const auto eqs = identity_equations(obj, id, opts);
  return run_equations(to_string(id), eqs, obj.basis, {opts.cap, opts.parallel});
}

AxiomReport check_identity(const GradedAlgebraObject& obj, const std::string& id, const CheckOptions& opts) {
  const auto parsed = parse_identity(id);
  if (!parsed) throw InputError("unknown identity '" + id + "'");
  return check_identity(obj, *parsed, opts);
}

AxiomReport check_bimodule(const BimoduleObject& b, Identity kind, const CheckOptions& opts) {
  const auto eqs = bimodule_equations(b, kind);
  const auto basis = combined_object(BimoduleObject{b.algebra, ModuleData{b.module.basis, {}}}).basis;
  return run_equations(to_string(kind), eqs, basis, {opts.cap, opts.parallel});
}

AxiomReport check_representation(const RepresentationObject& r, const CheckOptions& opts) {
  const auto eqs = representation_equations(r);
  const auto basis = combined_object(BimoduleObject{r.algebra, ModuleData{r.module_basis, {}}}).basis;
  return run_equations("REPRESENTATION3", eqs, basis, {opts.cap, opts.parallel});
}

}  // namespace colalg
