#include "colalg/audit.hpp"

#include <chrono>
#include <functional>
#include <optional>
#include <random>
#include <sstream>

#include <json.hpp>

#include "colalg/analysis.hpp"
#include "colalg/constructions.hpp"
#include "colalg/corpus.hpp"
#include "colalg/errors.hpp"
#include "colalg/identities.hpp"
#include "colalg/operators.hpp"

namespace colalg {

using nlohmann::json;

std::size_t AuditReport::failing_rows() const {
  std::size_t n = 0;
  for (const auto& r : rows) n += r.report.pass() ? 0 : 1;
  return n;
}

std::size_t AuditReport::witness_count() const {
  std::size_t n = 0;
  for (const auto& r : rows) n += r.report.witnesses.size();
  return n;
}

namespace {

json report_json(const AxiomReport& r) {
  json ws = json::array();
  for (const auto& w : r.witnesses)
    ws.push_back({{"equation", w.equation},
                  {"tuple", w.tuple},
                  {"names", w.names},
                  {"lhs", w.lhs_text},
                  {"rhs", w.rhs_text}});
  return {{"subject", r.subject},
          {"checked_count", r.checked_count},
          {"violation_count", r.violation_count},
          {"witnesses", std::move(ws)}};
}

bool claims_any(const GradedAlgebraObject& o, std::initializer_list<const char*> ids) {
  for (const auto& c : o.claims)
    for (const char* id : ids)
      if (c == id) return true;
  return false;
}

bool same_grading(const GradedAlgebraObject& a, const GradedAlgebraObject& b) {
  return a.field == b.field && a.bicharacter == b.bicharacter;
}

struct Searched {
  GradedAlgebraObject algebra;
  EvenLinearMap map;
  std::string description;
};

class Auditor {
 public:
  explicit Auditor(const AuditOptions& o) : opts_(o), rng_(o.seed) {}

  AuditReport out;

  ConstructOptions construct(const std::string& variant = "printed") const {
    ConstructOptions c;
    c.verify = false;
    c.variant = variant;
    c.cap = opts_.cap;
    c.parallel = opts_.parallel;
    return c;
  }

  CheckOptions check(const std::string& variant = {}) const {
    CheckOptions c;
    c.variant = variant;
    c.cap = opts_.cap;
    c.parallel = opts_.parallel;
    return c;
  }

  AxiomReport claims_report(const GradedAlgebraObject& obj) const {
    AxiomReport total;
    const std::string v = (obj.variant == "printed" || obj.variant == "amended") ? obj.variant : "";
    for (const auto& claim : obj.claims) {
      AxiomReport r = check_identity(obj, claim, check(v));
      total.subject += (total.subject.empty() ? "" : "+") + claim;
      total.merge(r, opts_.cap);
    }
    return total;
  }

  AxiomReport module_report(const BimoduleObject& b) const { return check_bimodule(b, bimodule_kind(b), check()); }

  /// Runs f; a failed hypothesis or unusable input counts as skipped.
  std::optional<std::size_t> run(const std::string& theorem, const std::string& instance, const std::string& variant,
                                 const std::function<AxiomReport()>& f) {
    const auto start = std::chrono::steady_clock::now();
    AxiomReport r;
    try {
      r = f();
    } catch (const PreconditionError&) {
      ++out.skipped[theorem];
      return std::nullopt;
    } catch (const InputError&) {
      ++out.skipped[theorem];
      return std::nullopt;
    }
    AuditRow row{theorem, instance, variant, std::move(r)};
    if (opts_.timing)
      row.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    out.rows.push_back(std::move(row));
    return out.rows.size() - 1;
  }

  void ledger(const std::string& finding, const std::string& instance, std::optional<std::size_t> printed,
              std::optional<std::size_t> amended) {
    if (printed && amended) out.ledger.push_back({finding, instance, *printed, *amended});
  }

  /// A seeded pick among the GF(3) solutions of p on obj (reduced mod 3).
  std::optional<Searched> searched(const GradedAlgebraObject& obj, Predicate p, std::optional<Scalar> weight,
                                   const std::string& op,
                                   const std::function<bool(const EvenLinearMap&)>& keep = nullptr) {
    SearchConfig cfg;
    cfg.prime = 3;
    cfg.predicate = p;
    cfg.weight = std::move(weight);
    cfg.op = op;
    cfg.budget = opts_.search_budget;
    cfg.parallel = opts_.parallel;
    SearchResult res;
    try {
      res = search_operators(obj, cfg);
    } catch (const InputError&) {
      return std::nullopt;
    }
    std::vector<std::size_t> usable;
    for (std::size_t i = 0; i < res.maps.size(); ++i)
      if (!keep || keep(res.maps[i])) usable.push_back(i);
    if (usable.empty()) return std::nullopt;
    const std::size_t k = usable[rng_() % usable.size()];
    return Searched{res.algebra, res.maps[k],
                    obj.name + " mod 3, " + to_string(p) + " solution " + std::to_string(k + 1) + "/" +
                        std::to_string(res.matches)};
  }

  Scalar gf3(std::int64_t v) const { return Scalar::residue(v, 3); }
  std::int64_t draw_weight() { return static_cast<std::int64_t>(rng_() % 3); }

 private:
  AuditOptions opts_;
  std::mt19937_64 rng_;
};

Predicate twist_predicate(BinaryTwist k) {
  switch (k) {
    case BinaryTwist::AVERAGING: return Predicate::AVERAGING;
    case BinaryTwist::CENTROID: return Predicate::CENTROID2;
    case BinaryTwist::REYNOLDS: return Predicate::REYNOLDS2;
    case BinaryTwist::ROTA_BAXTER: return Predicate::ROTA_BAXTER2;
    case BinaryTwist::NIJENHUIS: return Predicate::NIJENHUIS;
  }
  return Predicate::CENTROID2;
}

Predicate twist_predicate(TernaryTwist k) {
  switch (k) {
    case TernaryTwist::CENTROID_A:
    case TernaryTwist::CENTROID_B:
    case TernaryTwist::CENTROID_C: return Predicate::CENTROID3;
    case TernaryTwist::REYNOLDS3: return Predicate::REYNOLDS3;
    case TernaryTwist::ROTA_BAXTER3: return Predicate::ROTA_BAXTER3;
  }
  return Predicate::CENTROID3;
}

/// Even and eps-symmetric: 1 on each degree-zero basis vector, 0 elsewhere.
MultilinearOp degree_zero_form(const GradedAlgebraObject& obj) {
  MultilinearOp f = MultilinearOp::on_space("form2", 2, obj.dim(), true);
  for (std::uint32_t i = 0; i < obj.dim(); ++i)
    if (obj.group().is_zero(obj.basis.degree(i))) f.add_scalar(std::vector<std::uint32_t>{i, i}, obj.field.one());
  return f;
}

}  // namespace

AuditReport run_audit(const std::vector<GradedAlgebraObject>& corpus, const AuditOptions& options) {
  Auditor a(options);
  const auto C = [&](const std::string& v = "printed") { return a.construct(v); };

  std::vector<GradedAlgebraObject> leibniz, lie, poisson, assoc, trialgebras, ternary;
  for (const auto& obj : corpus) {
    if (obj.has_op("bracket2") && claims_any(obj, {"LEIBNIZ2", "LIE_COLOR", "LEIBNIZ_POISSON"})) leibniz.push_back(obj);
    if (claims_any(obj, {"LIE_COLOR"})) lie.push_back(obj);
    if (claims_any(obj, {"LEIBNIZ_POISSON"})) poisson.push_back(obj);
    if (obj.has_op("product2") && claims_any(obj, {"ASSOC"}) && !obj.has_op("bracket2")) assoc.push_back(obj);
    if (claims_any(obj, {"TRIALGEBRA"})) trialgebras.push_back(obj);
    if (claims_any(obj, {"TERNARY_LEIBNIZ"}) && !obj.has_op("product2")) ternary.push_back(obj);
  }

  // Binary Leibniz recipes, and the ternary pool they feed.
  for (const auto& L : leibniz) {
    GradedAlgebraObject T;
    auto row = a.run("derived_ternary", L.name, "", [&] {
      T = derive_ternary_from_binary(L, C());
      T.name = "ternary(" + L.name + ")";
      return a.claims_report(T);
    });
    if (!row || !a.out.rows[*row].report.pass()) continue;
    bool seen = false;
    for (const auto& t : ternary) seen = seen || (t.ops == T.ops && t.basis == T.basis && same_grading(t, T));
    if (!seen) ternary.push_back(std::move(T));
  }

  for (const auto& L : leibniz) {
    for (auto [kind, factor] : {std::pair{BinaryTwist::CENTROID, 5}, std::pair{BinaryTwist::AVERAGING, 2}}) {
      a.run("twist2." + to_string(kind), L.name + ", homothety " + std::to_string(factor), "", [&] {
        return a.claims_report(
            twist_binary(L, EvenLinearMap::homothety(L.dim(), L.field.from_int(factor)), kind, std::nullopt, C()));
      });
    }
    for (BinaryTwist kind : {BinaryTwist::AVERAGING, BinaryTwist::CENTROID, BinaryTwist::REYNOLDS,
                             BinaryTwist::ROTA_BAXTER, BinaryTwist::NIJENHUIS}) {
      std::optional<Scalar> weight;
      if (kind == BinaryTwist::ROTA_BAXTER) weight = a.gf3(a.draw_weight());
      auto s = a.searched(L, twist_predicate(kind), weight, "bracket2",
                          kind == BinaryTwist::AVERAGING
                              ? std::function<bool(const EvenLinearMap&)>([](const EvenLinearMap& m) { return m.injective(); })
                              : nullptr);
      if (!s) {
        ++a.out.skipped["twist2." + to_string(kind)];
        continue;
      }
      std::string desc = s->description + (weight ? ", weight " + weight->to_string() : "");
      GradedAlgebraObject twisted;
      auto row = a.run("twist2." + to_string(kind), desc, "", [&] {
        twisted = twist_binary(s->algebra, s->map, kind, weight, C());
        return a.claims_report(twisted);
      });
      if (row && kind != BinaryTwist::AVERAGING && kind != BinaryTwist::CENTROID)
        a.run("twist2." + to_string(kind) + ".morphism", desc, "", [&] {
          OperatorOptions o;
          o.parallel = options.parallel;
          o.cap = options.cap;
          return check_morphism(twisted, s->algebra, s->map, {"bracket2"}, o);
        });
    }
  }

  for (std::size_t i = 0; i < leibniz.size(); ++i) {
    const auto& L = leibniz[i];
    a.run("direct_sum.binary", L.name + " (+) " + L.name, "",
          [&] { return a.claims_report(direct_sum(L, L, SumKind::BINARY, C())); });
    if (i + 1 < leibniz.size() && same_grading(L, leibniz[i + 1]))
      a.run("direct_sum.binary", L.name + " (+) " + leibniz[i + 1].name, "",
            [&] { return a.claims_report(direct_sum(L, leibniz[i + 1], SumKind::BINARY, C())); });
    a.run("semidirect_sum.action", L.name + " on itself", "", [&] {
      const MultilinearOp& B = L.op("bracket2");
      return a.claims_report(semidirect_sum(action_bimodule(L, L, B, B), C()));
    });
    a.run("semidirect_sum.module", L.name + " x adjoint module", "",
          [&] { return a.claims_report(semidirect_sum(bimodule_adjoint(L, C()), C())); });
    a.run("bimodule.FROM_BINARY", "adjoint of " + L.name, "",
          [&] { return a.module_report(bimodule_from_binary(bimodule_adjoint(L, C()), C())); });
  }

  // Ternary recipes.
  for (const auto& T : ternary) {
    for (std::uint32_t xi = 0; xi < T.dim(); ++xi) {
      if (!T.group().is_zero(T.basis.degree(xi))) continue;
      a.run("xi_contraction", T.name + ", xi = " + T.basis.name(xi), "",
            [&] { return a.claims_report(binary_from_ternary_at(T, xi, C())); });
    }
    for (TernaryTwist kind : {TernaryTwist::CENTROID_A, TernaryTwist::CENTROID_B, TernaryTwist::CENTROID_C})
      a.run("twist3." + to_string(kind), T.name + ", homothety 3", "", [&] {
        return a.claims_report(
            ternary_twist(T, EvenLinearMap::homothety(T.dim(), T.field.from_int(3)), kind, std::nullopt, C()));
      });
    for (TernaryTwist kind : {TernaryTwist::CENTROID_A, TernaryTwist::CENTROID_B, TernaryTwist::CENTROID_C,
                              TernaryTwist::REYNOLDS3, TernaryTwist::ROTA_BAXTER3}) {
      std::optional<Scalar> weight;
      if (kind == TernaryTwist::ROTA_BAXTER3) weight = a.gf3(a.draw_weight());
      auto s = a.searched(T, twist_predicate(kind), weight, "bracket3");
      if (!s) {
        ++a.out.skipped["twist3." + to_string(kind)];
        continue;
      }
      a.run("twist3." + to_string(kind), s->description + (weight ? ", weight " + weight->to_string() : ""), "",
            [&] { return a.claims_report(ternary_twist(s->algebra, s->map, kind, weight, C())); });
    }
    a.run("direct_sum.ternary", T.name + " (+) " + T.name, "",
          [&] { return a.claims_report(direct_sum(T, T, SumKind::TERNARY, C())); });
    a.run("tensor_square_ternary", T.name, "", [&] { return a.claims_report(tensor_square_ternary(T, C())); });

    BimoduleObject adj;
    auto adj_row = a.run("bimodule.ADJOINT", T.name, "", [&] {
      adj = bimodule_adjoint(T, C());
      return a.module_report(adj);
    });
    if (!adj_row) continue;
    a.run("bimodule.SEMIDIRECT3", "adjoint of " + T.name, "",
          [&] { return a.claims_report(bimodule_semidirect3(adj, C())); });
    a.run("bimodule.DIRECT_SUM", "adjoint (+) adjoint of " + T.name, "",
          [&] { return a.module_report(bimodule_direct_sum(adj, adj, C())); });
    auto p = a.run("bimodule.TENSOR", "adjoint (x) adjoint of " + T.name, "printed",
                   [&] { return a.module_report(bimodule_tensor(adj, adj, C("printed"))); });
    auto m = a.run("bimodule.TENSOR", "adjoint (x) adjoint of " + T.name, "amended",
                   [&] { return a.module_report(bimodule_tensor(adj, adj, C("amended"))); });
    a.ledger("bimodule_tensor_third_map", "adjoint (x) adjoint of " + T.name, p, m);
    for (int sign : {1, -1})
      a.run("bimodule.PULLBACK", T.name + " along " + (sign > 0 ? "id" : "-id"), "", [&] {
        return a.module_report(
            bimodule_pullback(T, T, EvenLinearMap::homothety(T.dim(), T.field.from_int(sign)), C()));
      });
    RepresentationObject rep;
    auto rep_row = a.run("bimodule.REP_CONVERT", "adjoint of " + T.name + " to representation", "", [&] {
      rep = to_representation(adj, C());
      return a.claims_report(representation_document(rep));
    });
    if (rep_row)
      a.run("bimodule.REP_CONVERT", "adjoint of " + T.name + " round trip", "",
            [&] { return a.module_report(from_representation(rep, C())); });
  }

  // Associative inputs.
  std::vector<GradedAlgebraObject> commutative_inputs;
  for (const auto& A : assoc) {
    for (auto [target, name] : {std::pair{AssocTarget::COMMUTATOR_LIE, "COMMUTATOR_LIE"},
                                std::pair{AssocTarget::TERNARY_COMMUTATOR, "TERNARY_COMMUTATOR"},
                                std::pair{AssocTarget::LTS, "LTS"}})
      a.run(std::string("associative.") + name, A.name, "",
            [&] { return a.claims_report(from_associative(A, target, std::nullopt, C())); });

    GradedAlgebraObject J;
    auto jrow = a.run("associative.JTS_PLAIN", A.name, "", [&] {
      J = from_associative(A, AssocTarget::JTS_PLAIN, std::nullopt, C());
      return a.claims_report(J);
    });
    if (jrow && a.out.rows[*jrow].report.pass())
      a.run("jts_to_lts", "plain triple product of " + A.name, "",
            [&] { return a.claims_report(jts_to_lts(J, C())); });

    if (auto s = a.searched(A, Predicate::INVOLUTION_ANTIAUTO, std::nullopt, "product2")) {
      GradedAlgebraObject Ji;
      auto irow = a.run("associative.JTS_INVOLUTION", s->description, "", [&] {
        Ji = from_associative(s->algebra, AssocTarget::JTS_INVOLUTION, s->map, C());
        return a.claims_report(Ji);
      });
      if (irow && a.out.rows[*irow].report.pass())
        a.run("jts_to_lts", "involution triple product of " + s->description, "",
              [&] { return a.claims_report(jts_to_lts(Ji, C())); });
    } else {
      ++a.out.skipped["associative.JTS_INVOLUTION"];
    }

    auto p = a.run("associative.COMSTRANS", A.name, "printed", [&] {
      return a.claims_report(from_associative(A, AssocTarget::COMSTRANS, std::nullopt, C("printed")));
    });
    auto m = a.run("associative.COMSTRANS", A.name, "amended", [&] {
      return a.claims_report(from_associative(A, AssocTarget::COMSTRANS, std::nullopt, C("amended")));
    });
    a.ledger("comstrans_associative", A.name, p, m);
    // The amended commutator is skew in its last two slots, which is the printed skewness axiom.
    a.run("associative.COMSTRANS.cross", A.name + ", amended commutator against printed skewness", "amended", [&] {
      GradedAlgebraObject out = from_associative(A, AssocTarget::COMSTRANS, std::nullopt, C("amended"));
      out.variant = "printed";
      return a.claims_report(out);
    });

    a.run("dialgebra", A.name + " with both products equal", "", [&] {
      GradedAlgebraObject D = A;
      D.ops.clear();
      D.set_op(A.op("product2").renamed("left"));
      D.set_op(A.op("product2").renamed("right"));
      return a.claims_report(from_dialgebra(D, C()));
    });

    commutative_inputs.push_back(A);
    commutative_inputs.push_back(forget_grading(A));
  }
  // Products above 8 dimensions cost seconds each; one of them keeps the graded case covered.
  bool large_done = false;
  for (const auto& A : commutative_inputs)
    for (const auto& T : ternary) {
      if (!same_grading(A, T) || A.dim() * T.dim() > 16) continue;
      if (A.dim() * T.dim() > 8) {
        if (large_done || !check_identity(A, Identity::EPS_COMM, a.check()).pass()) continue;
        large_done = true;
      }
      a.run("tensor_assoc_ternary", A.name + " (x) " + T.name, "",
            [&] { return a.claims_report(tensor_assoc_ternary(A, T, C())); });
    }

  // Leibniz-Poisson and ternary Poisson.
  std::vector<GradedAlgebraObject> ternary_poisson;
  for (const auto& P : poisson)
    for (auto [recipe, name] : {std::pair{PoissonRecipe::NESTED_BRACKET, "NESTED_BRACKET"},
                                std::pair{PoissonRecipe::BRACKET_OF_PRODUCT, "BRACKET_OF_PRODUCT"}}) {
      GradedAlgebraObject Q;
      auto row = a.run(std::string("poisson_to_ternary.") + name, P.name, "", [&] {
        Q = poisson_to_ternary(P, recipe, C());
        Q.name = std::string(name == std::string("NESTED_BRACKET") ? "nested(" : "of_product(") + P.name + ")";
        return a.claims_report(Q);
      });
      if (row && a.out.rows[*row].report.pass()) ternary_poisson.push_back(std::move(Q));
    }
  for (const auto& Q : ternary_poisson) {
    a.run("tensor_square_poisson3", Q.name, "", [&] { return a.claims_report(tensor_square_poisson3(Q, C())); });
    a.run("opposite_product", Q.name, "", [&] { return a.claims_report(opposite_product(Q, C())); });
    a.run("direct_sum.ternary_poisson", Q.name + " (+) " + Q.name, "",
          [&] { return a.claims_report(direct_sum(Q, Q, SumKind::TERNARY_POISSON, C())); });
    BimoduleObject adj;
    auto row = a.run("bimodule.ADJOINT", Q.name, "", [&] {
      adj = bimodule_adjoint(Q, C());
      return a.module_report(adj);
    });
    if (row)
      a.run("bimodule.SEMIDIRECT3", "adjoint of " + Q.name, "",
            [&] { return a.claims_report(bimodule_semidirect3(adj, C())); });
  }

  for (const auto& L : lie) {
    a.run("lie.LTS", L.name, "", [&] { return a.claims_report(from_lie(L, LieTarget::LTS, C())); });
    a.run("lie.COMSTRANS", L.name, "", [&] { return a.claims_report(from_lie(L, LieTarget::COMSTRANS, C())); });
  }

  // One form per distinct graded basis.
  std::vector<const GradedAlgebraObject*> bases;
  for (const auto& obj : corpus) {
    bool seen = false;
    for (const auto* b : bases) seen = seen || (b->basis == obj.basis && same_grading(*b, obj));
    if (!seen) bases.push_back(&obj);
  }
  for (const auto* obj : bases)
    for (const char* v : {"printed", "amended"})
      a.run("comstrans_form", "degree-zero diagonal form on the basis of " + obj->name, v, [&] {
        return a.claims_report(
            comstrans_from_bilinear_form(obj->basis, obj->bicharacter, obj->field, degree_zero_form(*obj), C(v)));
      });

  for (const auto& T : trialgebras) {
    auto p = a.run("trialgebra.LEIBNIZ_POISSON", T.name, "printed", [&] {
      return a.claims_report(from_trialgebra(T, TrialgebraTarget::LEIBNIZ_POISSON, C("printed")));
    });
    auto m = a.run("trialgebra.LEIBNIZ_POISSON", T.name, "amended", [&] {
      return a.claims_report(from_trialgebra(T, TrialgebraTarget::LEIBNIZ_POISSON, C("amended")));
    });
    a.ledger("trialgebra_bracket", T.name, p, m);
    a.run("trialgebra.TERNARY_LEIBNIZ", T.name, "",
          [&] { return a.claims_report(from_trialgebra(T, TrialgebraTarget::TERNARY_LEIBNIZ, C())); });
    a.run("trialgebra.STAR_ASSOC", T.name, "",
          [&] { return a.claims_report(from_trialgebra(T, TrialgebraTarget::STAR_ASSOC, C())); });

    const GradedAlgebraObject U = forget_grading(T);
    for (auto [w, target] : {std::pair{0, Identity::LEFT_SYMMETRIC}, std::pair{-1, Identity::ASSOC}}) {
      const std::string theorem = "rb_trialgebra." + to_string(target);
      auto s = a.searched(star_product(U), Predicate::ROTA_BAXTER2, a.gf3(w), "product2");
      if (!s) {
        ++a.out.skipped[theorem];
        continue;
      }
      a.run(theorem, s->description + ", weight " + std::to_string(w), "", [&] {
        return a.claims_report(rb_trialgebra_derived(reduce_mod(U, 3), s->map, a.gf3(w), target, C()));
      });
    }
  }
  return std::move(a.out);
}

std::string AuditReport::render_machine() const {
  json doc;
  json rs = json::array();
  for (const auto& r : rows) {
    json j = {{"theorem", r.theorem},
              {"instance", r.instance},
              {"variant", r.variant},
              {"verdict", r.verdict()},
              {"report", report_json(r.report)}};
    if (r.millis >= 0) j["millis"] = static_cast<std::int64_t>(r.millis * 1000) / 1000.0;
    rs.push_back(std::move(j));
  }
  doc["rows"] = std::move(rs);
  json ls = json::array();
  for (const auto& l : ledger) {
    auto side = [&](std::size_t i) {
      const AuditRow& r = rows[i];
      return json{{"row", i},
                  {"verdict", r.verdict()},
                  {"violation_count", r.report.violation_count},
                  {"witnesses", report_json(r.report)["witnesses"]}};
    };
    ls.push_back({{"finding", l.finding}, {"instance", l.instance}, {"printed", side(l.printed)}, {"amended", side(l.amended)}});
  }
  doc["ledger"] = std::move(ls);
  doc["skipped"] = skipped;
  doc["summary"] = {{"rows", rows.size()},
                    {"passing", rows.size() - failing_rows()},
                    {"failing", failing_rows()},
                    {"witnesses", witness_count()}};
  return doc.dump(2) + "\n";
}

std::string AuditReport::render_text() const {
  std::ostringstream os;
  for (const auto& r : rows) {
    os << r.verdict() << "  " << r.theorem;
    if (!r.variant.empty()) os << " [" << r.variant << "]";
    os << "  " << r.instance << "  (" << r.report.subject << ", " << r.report.checked_count << " checked";
    if (!r.report.pass()) os << ", " << r.report.violation_count << " violations";
    if (r.millis >= 0) os << ", " << r.millis << " ms";
    os << ")\n";
    for (const auto& w : r.report.witnesses) {
      os << "    [" << w.equation << "] (";
      for (std::size_t i = 0; i < w.names.size(); ++i) os << (i ? ", " : "") << w.names[i];
      os << "): lhs = " << w.lhs_text << ", rhs = " << w.rhs_text << '\n';
    }
  }
  os << "\nprinted vs amended\n";
  for (const auto& l : ledger)
    os << "  " << l.finding << "  " << l.instance << ": printed " << rows[l.printed].verdict() << ", amended "
       << rows[l.amended].verdict() << '\n';
  if (!skipped.empty()) {
    os << "\nhypotheses not met (skipped)\n";
    for (const auto& [t, n] : skipped) os << "  " << t << ": " << n << '\n';
  }
  os << "\n" << rows.size() << " rows, " << rows.size() - failing_rows() << " pass, " << failing_rows() << " fail, "
     << witness_count() << " witnesses\n";
  return os.str();
}

}  // namespace colalg
