#include "colalg/analysis.hpp"

#include <exception>

#include "colalg/errors.hpp"
#include "colalg/identities.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace colalg {

namespace {

std::vector<GradedElement> rows_to_elements(const std::vector<std::vector<Scalar>>& rows) {
  std::vector<GradedElement> out;
  for (const auto& r : rows) {
    GradedElement v;
    for (std::size_t i = 0; i < r.size(); ++i)
      if (!r[i].is_zero()) v.add_term(static_cast<std::uint32_t>(i), r[i]);
    out.push_back(std::move(v));
  }
  return out;
}

/// Null space of {c : sum_i c_i * image(i) = 0} where image(i) ranges over constraint families.
Subspace annihilator(std::size_t n, const Field& field,
                     const std::function<GradedElement(std::uint32_t i, std::uint32_t j)>& image) {
  // Row per (j, output coordinate k); column i holds image(i, j)_k.
  std::vector<std::vector<Scalar>> rows;
  for (std::uint32_t j = 0; j < n; ++j) {
    std::vector<std::vector<Scalar>> block(n, std::vector<Scalar>(n, field.zero()));
    bool any = false;
    for (std::uint32_t i = 0; i < n; ++i) {
      const GradedElement v = image(i, j);
      for (const auto& t : v.terms()) {
        block[t.index][i] = t.coef;
        any = true;
      }
    }
    if (!any) continue;
    for (auto& r : block) rows.push_back(std::move(r));
  }
  Matrix m(0, n, field.zero());
  for (const auto& r : rows) m.append_row(r);
  return Subspace::span(n, rows_to_elements(m.nullspace()));
}

}  // namespace

std::vector<GradedElement> leibniz_generators(const GradedAlgebraObject& L) {
  const MultilinearOp& B = L.op("bracket2");
  const std::size_t n = L.dim();
  const EpsTable E(L.bicharacter, L.basis);
  std::vector<GradedElement> gens;
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = i; j < n; ++j) {
      GradedElement g;
      g.add_scaled(B.on_basis(i, j), L.field.one());
      g.add_scaled(B.on_basis(j, i), E(i, j));
      if (!g.is_zero()) gens.push_back(std::move(g));
    }
  return gens;
}

StructureSubspaces structure_subspaces(const GradedAlgebraObject& L, std::size_t cap, bool parallel) {
  const MultilinearOp& B = L.op("bracket2");
  CheckOptions c;
  c.cap = cap;
  c.parallel = parallel;
  AxiomReport r = check_identity(L, Identity::LEIBNIZ2, c);
  if (!r.pass()) throw PreconditionError("structure subspaces need a Leibniz bracket", std::move(r));

  const std::size_t n = L.dim();
  auto vec = [&](const std::vector<Term>& ts) {
    GradedElement v;
    v.add_scaled(ts, L.field.one());
    return v;
  };
  StructureSubspaces s;
  s.left_center = annihilator(n, L.field, [&](std::uint32_t i, std::uint32_t j) { return vec(B.on_basis(i, j)); });
  s.right_center = annihilator(n, L.field, [&](std::uint32_t i, std::uint32_t j) { return vec(B.on_basis(j, i)); });
  s.center = s.left_center.intersect(s.right_center);
  s.leibniz_kernel = Subspace::span(n, leibniz_generators(L));
  return s;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> even_entries(const GradedBasis& basis) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  for (std::uint32_t i = 0; i < basis.size(); ++i)
    for (std::uint32_t j = 0; j < basis.size(); ++j)
      if (basis.degree(i) == basis.degree(j)) out.emplace_back(i, j);
  return out;
}

std::vector<EvenLinearMap> centroid_space(const GradedAlgebraObject& L, std::size_t arity) {
  if (arity != 2 && arity != 3) throw InputError("centroid arity must be 2 or 3");
  const Predicate p = arity == 2 ? Predicate::CENTROID2 : Predicate::CENTROID3;
  const MultilinearOp& B = L.op(predicate_op(L, p));
  if (B.arity() != arity || B.scalar_valued()) throw InputError("centroid needs an algebra-valued op of arity " + std::to_string(arity));

  const std::size_t n = L.dim();
  const auto entries = even_entries(L.basis);
  const std::size_t e = entries.size();
  std::vector<long> unknown(n * n, -1);
  for (std::size_t u = 0; u < e; ++u) unknown[entries[u].first * n + entries[u].second] = static_cast<long>(u);

  Matrix m(0, e, L.field.zero());
  std::vector<std::uint32_t> t(arity);
  std::vector<std::uint32_t> s(arity);
  // Row vector (indexed by output coordinate, then unknown) for one side of an equation.
  using Side = std::vector<std::vector<Scalar>>;
  auto fresh = [&] { return Side(n, std::vector<Scalar>(e, L.field.zero())); };
  // theta(op(t)): coordinate k gets sum_j op(t)_j theta_{kj}
  auto theta_outside = [&](Side& side, const Scalar& sign) {
    for (const auto& term : B.on_basis(t))
      for (std::uint32_t k = 0; k < n; ++k) {
        const long u = unknown[k * n + term.index];
        if (u >= 0) side[k][u] += sign * term.coef;
      }
  };
  // op(.., theta t_slot, ..): sum_i theta_{i, t_slot} op(.., e_i, ..)
  auto theta_in_slot = [&](Side& side, std::size_t slot, const Scalar& sign) {
    s = t;
    for (std::uint32_t i = 0; i < n; ++i) {
      const long u = unknown[i * n + t[slot]];
      if (u < 0) continue;
      s[slot] = i;
      for (const auto& term : B.on_basis(s)) side[term.index][u] += sign * term.coef;
    }
  };
  auto flush = [&](Side& side) {
    for (auto& row : side) {
      bool any = false;
      for (const auto& c : row) any = any || !c.is_zero();
      if (any) m.append_row(row);
    }
  };

  const std::uint64_t total = [&] {
    std::uint64_t v = 1;
    for (std::size_t a = 0; a < arity; ++a) v *= n;
    return v;
  }();
  const Scalar one = L.field.one(), minus = -L.field.one();
  for (std::uint64_t k = 0; k < total; ++k) {
    std::uint64_t r = k;
    for (std::size_t a = arity; a-- > 0;) {
      t[a] = static_cast<std::uint32_t>(r % n);
      r /= n;
    }
    Side side = fresh();
    theta_outside(side, one);
    theta_in_slot(side, 0, minus);
    flush(side);
    for (std::size_t slot = 0; slot + 1 < arity; ++slot) {
      side = fresh();
      theta_in_slot(side, slot, one);
      theta_in_slot(side, slot + 1, minus);
      flush(side);
    }
  }

  std::vector<std::vector<Scalar>> sol;
  if (m.rows() == 0) {
    for (std::size_t u = 0; u < e; ++u) {
      std::vector<Scalar> v(e, L.field.zero());
      v[u] = one;
      sol.push_back(std::move(v));
    }
  } else {
    sol = m.nullspace();
  }
  const Subspace span = Subspace::span(e, rows_to_elements(sol));
  std::vector<EvenLinearMap> maps;
  for (const auto& v : span.basis()) {
    EvenLinearMap theta(n, n);
    for (const auto& term : v.terms()) {
      const auto [row, col] = entries[term.index];
      theta.set(row, col, L.field.coerce(term.coef));
    }
    maps.push_back(std::move(theta));
  }
  return maps;
}

// ---- operator search ----------------------------------------------------------

namespace {

using Vec = std::vector<std::int64_t>;

/// Dense structure constants of one op mod p; entry (args..., k) row-major.
struct DenseOp {
  std::size_t arity = 0;
  std::vector<std::int64_t> c;
};

/// Everything the per-candidate predicate test needs, read-only across threads.
struct DenseProblem {
  std::size_t n = 0;
  std::int64_t p = 3;
  Predicate pred = Predicate::CENTROID2;
  std::int64_t w = 0;
  std::vector<DenseOp> ops;  // the predicate's op, or every algebra-valued op for MORPHISM
  std::vector<std::int64_t> eps;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> entries;
};

struct Work {
  const DenseProblem& P;
  std::vector<std::int64_t> M;  // M[k * n + j]: coefficient of e_k in m(e_j)
  std::vector<Vec> e, me;

  explicit Work(const DenseProblem& prob)
      : P(prob), M(prob.n * prob.n, 0), e(prob.n, Vec(prob.n, 0)), me(prob.n, Vec(prob.n, 0)) {
    for (std::size_t i = 0; i < P.n; ++i) e[i][i] = 1;
  }

  std::int64_t md(std::int64_t v) const {
    v %= P.p;
    return v < 0 ? v + P.p : v;
  }

  void load(const std::vector<std::uint32_t>& digits) {
    std::fill(M.begin(), M.end(), 0);
    for (std::size_t u = 0; u < digits.size(); ++u) M[P.entries[u].first * P.n + P.entries[u].second] = digits[u];
    for (std::size_t j = 0; j < P.n; ++j)
      for (std::size_t k = 0; k < P.n; ++k) me[j][k] = M[k * P.n + j];
  }

  Vec map(const Vec& v) const {
    Vec out(P.n, 0);
    for (std::size_t j = 0; j < P.n; ++j) {
      if (!v[j]) continue;
      for (std::size_t k = 0; k < P.n; ++k) out[k] += v[j] * M[k * P.n + j];
    }
    for (auto& x : out) x = md(x);
    return out;
  }

  Vec op2(const DenseOp& o, const Vec& u, const Vec& v) const {
    const std::size_t n = P.n;
    Vec out(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (!u[i]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (!v[j]) continue;
        const std::int64_t s = u[i] * v[j] % P.p;
        const std::int64_t* row = &o.c[(i * n + j) * n];
        for (std::size_t k = 0; k < n; ++k) out[k] += s * row[k];
      }
    }
    for (auto& x : out) x = md(x);
    return out;
  }

  Vec op3(const DenseOp& o, const Vec& u, const Vec& v, const Vec& w) const {
    const std::size_t n = P.n;
    Vec out(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (!u[i]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (!v[j]) continue;
        const std::int64_t s = u[i] * v[j] % P.p;
        for (std::size_t l = 0; l < n; ++l) {
          if (!w[l]) continue;
          const std::int64_t s2 = s * w[l] % P.p;
          const std::int64_t* row = &o.c[((i * n + j) * n + l) * n];
          for (std::size_t k = 0; k < n; ++k) out[k] += s2 * row[k];
        }
      }
    }
    for (auto& x : out) x = md(x);
    return out;
  }

  Vec lin(std::initializer_list<std::pair<std::int64_t, const Vec*>> parts) const {
    Vec out(P.n, 0);
    for (const auto& [s, v] : parts)
      for (std::size_t k = 0; k < P.n; ++k) out[k] += s * (*v)[k];
    for (auto& x : out) x = md(x);
    return out;
  }

  bool morphism(const DenseOp& o) const {
    const std::size_t n = P.n;
    if (o.arity == 2) {
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
          if (map(op2(o, e[x], e[y])) != op2(o, me[x], me[y])) return false;
      return true;
    }
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z)
          if (map(op3(o, e[x], e[y], e[z])) != op3(o, me[x], me[y], me[z])) return false;
    return true;
  }

  /// Mirrors operator_equations tuple by tuple.
  bool satisfies() const {
    const std::size_t n = P.n;
    if (P.pred == Predicate::MORPHISM) {
      for (const auto& o : P.ops)
        if (!morphism(o)) return false;
      return true;
    }
    const DenseOp& o = P.ops.front();
    if (P.pred == Predicate::INVOLUTION_ANTIAUTO)
      for (std::size_t x = 0; x < n; ++x)
        if (map(me[x]) != e[x]) return false;
    if (predicate_arity(P.pred) == 2) {
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
          const Vec &ex = e[x], &ey = e[y], &px = me[x], &py = me[y];
          switch (P.pred) {
            case Predicate::AVERAGING: {
              const Vec mid = op2(o, px, py);
              if (map(op2(o, px, ey)) != mid || mid != map(op2(o, ex, py))) return false;
              break;
            }
            case Predicate::CENTROID2: {
              const Vec l = op2(o, px, ey);
              if (map(op2(o, ex, ey)) != l || l != op2(o, ex, py)) return false;
              break;
            }
            case Predicate::NIJENHUIS: {
              const Vec a1 = op2(o, px, ey), a2 = op2(o, ex, py), a3 = map(op2(o, ex, ey));
              if (op2(o, px, py) != map(lin({{1, &a1}, {1, &a2}, {-1, &a3}}))) return false;
              break;
            }
            case Predicate::REYNOLDS2: {
              const Vec a1 = op2(o, px, ey), a2 = op2(o, ex, py), l = op2(o, px, py);
              if (l != map(lin({{1, &a1}, {1, &a2}, {-1, &l}}))) return false;
              break;
            }
            case Predicate::ROTA_BAXTER2: {
              const Vec a1 = op2(o, px, ey), a2 = op2(o, ex, py), a3 = op2(o, ex, ey);
              if (op2(o, px, py) != map(lin({{1, &a1}, {1, &a2}, {P.w, &a3}}))) return false;
              break;
            }
            case Predicate::INVOLUTION_ANTIAUTO: {
              const Vec r = op2(o, py, px);
              const Vec rs = lin({{P.eps[x * n + y], &r}});
              if (map(op2(o, ex, ey)) != rs) return false;
              break;
            }
            default:
              break;
          }
        }
      return true;
    }
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z) {
          const Vec &ex = e[x], &ey = e[y], &ez = e[z], &px = me[x], &py = me[y], &pz = me[z];
          switch (P.pred) {
            case Predicate::CENTROID3: {
              const Vec a = op3(o, px, ey, ez);
              if (map(op3(o, ex, ey, ez)) != a) return false;
              const Vec b2 = op3(o, ex, py, ez);
              if (a != b2 || b2 != op3(o, ex, ey, pz)) return false;
              break;
            }
            case Predicate::REYNOLDS3: {
              const Vec l = op3(o, px, py, pz);
              const Vec a1 = op3(o, px, py, ez), a2 = op3(o, px, ey, pz), a3 = op3(o, ex, py, pz);
              if (l != map(lin({{1, &a1}, {1, &a2}, {1, &a3}, {-1, &l}}))) return false;
              break;
            }
            case Predicate::ROTA_BAXTER3: {
              const Vec l = op3(o, px, py, pz);
              const Vec a1 = op3(o, px, py, ez), a2 = op3(o, px, ey, pz), a3 = op3(o, ex, py, pz);
              const Vec b1 = op3(o, px, ey, ez), b2 = op3(o, ex, py, ez), b3 = op3(o, ex, ey, pz);
              const Vec c0 = op3(o, ex, ey, ez);
              const std::int64_t w2 = P.w * P.w % P.p;
              if (l != map(lin({{1, &a1}, {1, &a2}, {1, &a3}, {P.w, &b1}, {P.w, &b2}, {P.w, &b3}, {w2, &c0}})))
                return false;
              break;
            }
            default:
              break;
          }
        }
    return true;
  }
};

struct Prepared {
  GradedAlgebraObject obj;
  DenseProblem prob;
  std::uint64_t total = 1;
};

std::int64_t residue(const Scalar& s, std::uint32_t p) { return s.reduce_mod(p).residue_value(); }

Prepared prepare(const GradedAlgebraObject& L, const SearchConfig& cfg) {
  const Field field = Field::prime(cfg.prime, cfg.allow_char2);
  if (cfg.result_cap == 0 || cfg.budget == 0) throw InputError("search caps must be positive");
  Prepared out;
  if (L.field.is_rational())
    out.obj = reduce_mod(L, cfg.prime);
  else if (L.field == field)
    out.obj = L;
  else
    throw InputError("algebra is over GF(" + std::to_string(L.field.characteristic()) + "), search asked for GF(" +
                     std::to_string(cfg.prime) + ")");
  if (needs_weight(cfg.predicate) != cfg.weight.has_value())
    throw InputError(to_string(cfg.predicate) + (cfg.weight ? " takes no weight" : " needs a weight"));

  auto& P = out.prob;
  const auto& obj = out.obj;
  P.n = obj.dim();
  P.p = cfg.prime;
  P.pred = cfg.predicate;
  if (cfg.weight) {
    try {
      P.w = residue(*cfg.weight, cfg.prime);
    } catch (const std::domain_error&) {
      throw InputError("weight is not p-integral");
    }
  }
  P.entries = even_entries(obj.basis);
  for (std::size_t u = 0; u < P.entries.size(); ++u) {
    if (out.total > cfg.budget / cfg.prime)
      throw InputError("search space " + std::to_string(cfg.prime) + "^" + std::to_string(P.entries.size()) +
                       " exceeds the budget of " + std::to_string(cfg.budget) + " maps");
    out.total *= cfg.prime;
  }
  const EpsTable E(obj.bicharacter, obj.basis);
  P.eps.resize(P.n * P.n);
  for (std::uint32_t i = 0; i < P.n; ++i)
    for (std::uint32_t j = 0; j < P.n; ++j) P.eps[i * P.n + j] = residue(E(i, j), cfg.prime);

  auto dense = [&](const MultilinearOp& op) {
    DenseOp d;
    d.arity = op.arity();
    std::size_t size = P.n;
    for (std::size_t a = 0; a < d.arity; ++a) size *= P.n;
    d.c.assign(size, 0);
    op.for_each([&](std::span<const std::uint32_t> args, std::uint32_t o, const Scalar& c) {
      std::size_t idx = 0;
      for (auto a : args) idx = idx * P.n + a;
      d.c[idx * P.n + o] = residue(c, cfg.prime);
    });
    return d;
  };
  if (cfg.predicate == Predicate::MORPHISM) {
    for (const auto& [name, op] : obj.ops)
      if (!op.scalar_valued()) P.ops.push_back(dense(op));
  } else {
    const MultilinearOp& op = obj.op(predicate_op(obj, cfg.predicate, cfg.op));
    if (op.arity() != predicate_arity(cfg.predicate) || op.scalar_valued())
      throw InputError(to_string(cfg.predicate) + " needs an algebra-valued op of arity " +
                       std::to_string(predicate_arity(cfg.predicate)));
    P.ops.push_back(dense(op));
  }
  return out;
}

void digits_of(std::uint64_t k, std::uint32_t p, std::vector<std::uint32_t>& d) {
  for (std::size_t u = d.size(); u-- > 0;) {
    d[u] = static_cast<std::uint32_t>(k % p);
    k /= p;
  }
}

void increment(std::vector<std::uint32_t>& d, std::uint32_t p) {
  for (std::size_t u = d.size(); u-- > 0;) {
    if (++d[u] < p) return;
    d[u] = 0;
  }
}

EvenLinearMap to_map(const DenseProblem& P, const std::vector<std::uint32_t>& d, std::uint32_t p) {
  EvenLinearMap m(P.n, P.n);
  for (std::size_t u = 0; u < d.size(); ++u)
    if (d[u]) m.set(P.entries[u].first, P.entries[u].second, Scalar::residue(d[u], p));
  return m;
}

struct Hits {
  std::vector<std::vector<std::uint32_t>> first;
  std::uint64_t count = 0;
};

void scan(const DenseProblem& P, std::uint64_t begin, std::uint64_t end, std::size_t cap, Hits& out) {
  if (begin >= end) return;
  Work w(P);
  std::vector<std::uint32_t> d(P.entries.size());
  digits_of(begin, static_cast<std::uint32_t>(P.p), d);
  for (std::uint64_t k = begin; k < end; ++k) {
    w.load(d);
    if (w.satisfies()) {
      ++out.count;
      if (out.first.size() < cap) out.first.push_back(d);
    }
    increment(d, static_cast<std::uint32_t>(P.p));
  }
}

SearchResult assemble(Prepared&& prep, std::vector<Hits>& parts, std::size_t cap, std::uint32_t p) {
  SearchResult r;
  r.candidates = prep.total;
  for (auto& h : parts) {
    r.matches += h.count;
    for (auto& d : h.first) {
      if (r.maps.size() >= cap) break;
      r.maps.push_back(to_map(prep.prob, d, p));
    }
  }
  r.algebra = std::move(prep.obj);
  return r;
}

}  // namespace

SearchResult search_operators_serial(const GradedAlgebraObject& L, const SearchConfig& cfg) {
  Prepared prep = prepare(L, cfg);
  std::vector<Hits> parts(1);
  scan(prep.prob, 0, prep.total, cfg.result_cap, parts[0]);
  return assemble(std::move(prep), parts, cfg.result_cap, cfg.prime);
}

SearchResult search_operators(const GradedAlgebraObject& L, const SearchConfig& cfg) {
#ifndef _OPENMP
  return search_operators_serial(L, cfg);
#else
  if (!cfg.parallel) return search_operators_serial(L, cfg);
  Prepared prep = prepare(L, cfg);
  const int threads = omp_get_max_threads();
  // More blocks than threads keeps the load even when matches cluster.
  const std::uint64_t blocks = std::min<std::uint64_t>(prep.total, static_cast<std::uint64_t>(threads) * 8);
  std::vector<Hits> parts(blocks);
  std::exception_ptr error;
  const std::uint64_t total = prep.total;
  const DenseProblem& prob = prep.prob;
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (std::int64_t b = 0; b < static_cast<std::int64_t>(blocks); ++b) {
    try {
      scan(prob, total * b / blocks, total * (b + 1) / blocks, cfg.result_cap, parts[b]);
    } catch (...) {
#pragma omp critical(colalg_search_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return assemble(std::move(prep), parts, cfg.result_cap, cfg.prime);
#endif
}

SearchResult search_operators_reference(const GradedAlgebraObject& L, const SearchConfig& cfg) {
  Prepared prep = prepare(L, cfg);
  OperatorOptions oo;
  if (cfg.weight) oo.weight = Scalar::residue(prep.prob.w, cfg.prime);
  oo.op = cfg.op;
  oo.cap = 1;
  oo.parallel = false;
  std::vector<Hits> parts(1);
  std::vector<std::uint32_t> d(prep.prob.entries.size());
  for (std::uint64_t k = 0; k < prep.total; ++k) {
    const EvenLinearMap m = to_map(prep.prob, d, cfg.prime);
    if (check_operator(prep.obj, m, cfg.predicate, oo).pass()) {
      ++parts[0].count;
      if (parts[0].first.size() < cfg.result_cap) parts[0].first.push_back(d);
    }
    increment(d, cfg.prime);
  }
  return assemble(std::move(prep), parts, cfg.result_cap, cfg.prime);
}

}  // namespace colalg
