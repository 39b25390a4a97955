// Acceptance run: one line per criterion. Exact arithmetic throughout, so every
// comparison is equality (tolerance 0).
//
// Exit status is 0 when every failing criterion is in kExpectedRed. Those are
// failures the construction itself produces on the corpus; the line still says FAIL.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <tuple>

#include "colalg/analysis.hpp"
#include "colalg/audit.hpp"
#include "colalg/constructions.hpp"
#include "colalg/corpus.hpp"
#include "colalg/errors.hpp"
#include "colalg/identities.hpp"
#include "oracle.hpp"

using namespace colalg;

namespace {

const std::set<int> kExpectedRed = {2};
constexpr std::uint64_t kSeed = 1;
constexpr std::uint64_t kSearchLimit = 531441;  // 3^12
constexpr int kFuzzCount = 200;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  std::vector<std::string> reasons;
  void require(bool ok, const std::string& why) {
    if (ok) return;
    pass = false;
    if (reasons.size() < 8) reasons.push_back(why);
  }
};

GradedElement e(std::uint32_t i) { return GradedElement::basis(i); }

std::uint64_t power(std::uint64_t b, std::size_t k) {
  std::uint64_t r = 1;
  while (k--) r *= b;
  return r;
}

bool is_leibniz(const GradedAlgebraObject& A) {
  return A.has_op("bracket2") && check_identity(A, Identity::LEIBNIZ2).pass();
}

oracle::Vec apply_map(const EvenLinearMap& m, const oracle::Vec& x, const Scalar& zero) {
  oracle::Vec out(m.rows(), zero);
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r] = out[r] + m.entry(r, c) * x[c];
  return out;
}

// ---------------------------------------------------------------------------

Outcome criterion1() {
  Outcome o;
  const auto L = paper_example();
  const auto r = check_identity(L, Identity::LEIBNIZ2);
  o.require(r.pass() && r.checked_count == 27, "LEIBNIZ2 over 27 triples");
  o.require(oracle::leibniz2_violations(L) == 0, "oracle LEIBNIZ2");

  const auto s = structure_subspaces(L);
  const auto e1 = Subspace::span(3, {e(0)}), e13 = Subspace::span(3, {e(0), e(2)});
  o.require(s.leibniz_kernel == e1, "Leib = span{e1}");
  o.require(s.right_center == e13 && s.left_center == e13 && s.center == e13, "centers = span{e1,e3}");

  // Independent: polarizations from the dense table, annihilators by enumeration over GF(3).
  const oracle::Dense B(L, "bracket2");
  std::vector<GradedElement> pol;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      pol.push_back(oracle::element(oracle::add(B(B.unit(i), B.unit(j)), B(B.unit(j), B.unit(i)), oracle::eps(L, i, j))));
  o.require(Subspace::span(3, pol) == e1, "oracle Leib");
  const auto R = reduce_mod(L, 3);
  o.require(oracle::annihilator_count(R, true) == 9 && oracle::annihilator_count(R, false) == 9, "oracle centers");
  o.detail << "checked=" << r.checked_count << " Leib dim=" << s.leibniz_kernel.dim()
           << " C dim=" << s.center.dim();
  return o;
}

// ---------------------------------------------------------------------------

bool closure_row(const AuditRow& row) {
  static const std::vector<std::string> exact = {
      "derived_ternary", "xi_contraction", "semidirect_sum.action", "semidirect_sum.module", "tensor_square_ternary",
      "tensor_assoc_ternary", "tensor_square_poisson3", "dialgebra", "jts_to_lts", "lie.LTS", "lie.COMSTRANS",
      "direct_sum.binary", "direct_sum.ternary", "direct_sum.ternary_poisson",
      "poisson_to_ternary.NESTED_BRACKET", "poisson_to_ternary.BRACKET_OF_PRODUCT",
      "associative.COMMUTATOR_LIE", "associative.TERNARY_COMMUTATOR", "associative.LTS", "associative.JTS_PLAIN",
      "associative.JTS_INVOLUTION", "bimodule.ADJOINT", "bimodule.SEMIDIRECT3", "bimodule.DIRECT_SUM",
      "bimodule.FROM_BINARY", "bimodule.PULLBACK", "bimodule.REP_CONVERT"};
  if (std::find(exact.begin(), exact.end(), row.theorem) != exact.end()) return true;
  if (row.theorem == "bimodule.TENSOR") return row.variant == "amended";
  const bool twist = row.theorem.rfind("twist2.", 0) == 0 || row.theorem.rfind("twist3.", 0) == 0;
  return twist && row.theorem.find(".morphism") == std::string::npos;
}

Outcome criterion2(const AuditReport& audit) {
  Outcome o;
  std::map<std::string, std::size_t> rows, bad;
  std::uint64_t violations = 0;
  for (const auto& row : audit.rows) {
    if (!closure_row(row)) continue;
    ++rows[row.theorem];
    if (!row.report.pass()) {
      ++bad[row.theorem];
      violations += row.report.violation_count;
    }
  }
  for (const char* needed :
       {"derived_ternary", "xi_contraction", "twist2.AVERAGING", "twist2.CENTROID", "twist2.REYNOLDS",
        "twist2.ROTA_BAXTER", "twist2.NIJENHUIS", "twist3.CENTROID_A", "twist3.REYNOLDS3", "twist3.ROTA_BAXTER3",
        "direct_sum.binary", "direct_sum.ternary", "direct_sum.ternary_poisson", "semidirect_sum.action",
        "tensor_square_ternary", "tensor_assoc_ternary", "tensor_square_poisson3", "dialgebra",
        "poisson_to_ternary.NESTED_BRACKET", "poisson_to_ternary.BRACKET_OF_PRODUCT", "lie.LTS", "lie.COMSTRANS",
        "associative.COMMUTATOR_LIE", "associative.TERNARY_COMMUTATOR", "associative.LTS", "associative.JTS_PLAIN",
        "associative.JTS_INVOLUTION", "jts_to_lts", "bimodule.ADJOINT", "bimodule.SEMIDIRECT3",
        "bimodule.DIRECT_SUM", "bimodule.TENSOR", "bimodule.FROM_BINARY", "bimodule.PULLBACK",
        "bimodule.REP_CONVERT"})
    o.require(rows.count(needed) != 0, std::string("no rows for ") + needed);
  std::size_t total = 0;
  for (const auto& [k, v] : rows) total += v;
  o.require(violations == 0, "violations in closure rows");
  o.detail << total << " rows, " << violations << " violations";
  for (const auto& [k, v] : bad) o.detail << "; " << k << " failing on " << v << " inputs";
  return o;
}

// ---------------------------------------------------------------------------

Outcome criterion3() {
  Outcome o;
  const auto T = derive_ternary_from_binary(nonabelian_lie2());
  const auto C = binary_from_ternary_at(T, 0);
  const auto P = paper_example();
  // Compare by basis name on the shared vectors e1, e2.
  std::set<std::tuple<std::string, std::string, std::string, std::string>> got, want;
  C.op("bracket2").for_each([&](std::span<const std::uint32_t> a, std::uint32_t out, const Scalar& c) {
    got.insert({C.basis.name(a[0]), C.basis.name(a[1]), C.basis.name(out), c.to_string()});
  });
  P.op("bracket2").for_each([&](std::span<const std::uint32_t> a, std::uint32_t out, const Scalar& c) {
    want.insert({P.basis.name(a[0]), P.basis.name(a[1]), P.basis.name(out), c.to_string()});
  });
  o.require(got == want, "contraction constants differ from the fixture");

  // Independent: derive and contract with dense tables.
  const oracle::Dense B(nonabelian_lie2(), "bracket2");
  bool dense_ok = true;
  for (std::size_t x = 0; x < 2; ++x)
    for (std::size_t y = 0; y < 2; ++y) {
      const auto v = B(B.unit(x), B(B.unit(y), B.unit(0)));
      const bool expect_e1 = x == 1 && y == 1;
      oracle::Vec w(2, Scalar(0));
      if (expect_e1) w[0] = Scalar(1);
      dense_ok = dense_ok && v == w;
    }
  o.require(dense_ok, "dense contraction");
  o.detail << got.size() << " constant(s), {e2,e2} = e1";
  return o;
}

// ---------------------------------------------------------------------------

Outcome criterion4(const std::vector<GradedAlgebraObject>& corpus, const AuditReport& audit) {
  Outcome o;
  std::mt19937_64 rng(kSeed);
  std::size_t instances = 0, maps_checked = 0, pairs = 0;
  struct Kind {
    Predicate pred;
    BinaryTwist twist;
    std::optional<Scalar> weight;
  };
  const std::vector<Kind> kinds = {{Predicate::REYNOLDS2, BinaryTwist::REYNOLDS, std::nullopt},
                                   {Predicate::ROTA_BAXTER2, BinaryTwist::ROTA_BAXTER, Scalar(0)},
                                   {Predicate::ROTA_BAXTER2, BinaryTwist::ROTA_BAXTER, Scalar(1)},
                                   {Predicate::NIJENHUIS, BinaryTwist::NIJENHUIS, std::nullopt}};
  for (const auto& A : corpus) {
    if (!is_leibniz(A) || power(3, even_entries(A.basis).size()) > kSearchLimit) continue;
    const auto R = reduce_mod(A, 3);
    const oracle::Dense B(R, "bracket2");
    const Scalar zero = R.field.zero();
    ++instances;
    for (const auto& k : kinds) {
      SearchConfig cfg;
      cfg.predicate = k.pred;
      if (k.weight) cfg.weight = R.field.coerce(*k.weight);
      cfg.result_cap = 1u << 20;
      const auto found = search_operators(R, cfg);
      if (found.maps.empty()) continue;
      // Up to four operators per kind, drawn with the seeded generator.
      for (int pick = 0; pick < 4; ++pick) {
        const auto& m = found.maps[rng() % found.maps.size()];
        GradedAlgebraObject tw;
        try {
          tw = twist_binary(R, m, k.twist, cfg.weight, {.verify = false});
        } catch (const std::exception& ex) {
          o.require(false, std::string("twist threw: ") + ex.what());
          continue;
        }
        const oracle::Dense Tw(tw, "bracket2");
        ++maps_checked;
        for (std::size_t x = 0; x < R.dim(); ++x)
          for (std::size_t y = 0; y < R.dim(); ++y) {
            const auto ex = B.unit(x), ey = B.unit(y);
            const auto mx = apply_map(m, ex, zero), my = apply_map(m, ey, zero);
            // Twisted bracket recomputed from its defining formula.
            oracle::Vec t = oracle::add(B(mx, ey), B(ex, my), R.field.one());
            if (k.twist == BinaryTwist::REYNOLDS) t = oracle::add(t, B(mx, my), -R.field.one());
            if (k.twist == BinaryTwist::ROTA_BAXTER) t = oracle::add(t, B(ex, ey), *cfg.weight);
            if (k.twist == BinaryTwist::NIJENHUIS) t = oracle::add(t, apply_map(m, B(ex, ey), zero), -R.field.one());
            const bool same = Tw(ex, ey) == t;
            const bool morph = apply_map(m, t, zero) == B(mx, my);
            ++pairs;
            if (!same || !morph) {
              o.require(false, A.name + " " + to_string(k.twist) + (same ? " morphism" : " twisted bracket"));
              x = y = R.dim();
            }
          }
      }
    }
  }
  std::size_t audit_rows = 0, audit_bad = 0;
  for (const auto& row : audit.rows) {
    const auto& t = row.theorem;
    if (t.find(".morphism") == std::string::npos) continue;
    if (t != "twist2.REYNOLDS.morphism" && t != "twist2.ROTA_BAXTER.morphism" && t != "twist2.NIJENHUIS.morphism")
      continue;
    ++audit_rows;
    audit_bad += row.report.pass() ? 0 : 1;
  }
  o.require(maps_checked > 0 && audit_rows > 0, "no operators found");
  o.require(audit_bad == 0, "audit morphism rows failing");
  o.detail << instances << " instances, " << maps_checked << " searched operators, " << pairs
           << " basis pairs; audit morphism rows " << audit_rows - audit_bad << "/" << audit_rows;
  return o;
}

// ---------------------------------------------------------------------------

Outcome criterion5(const std::vector<GradedAlgebraObject>& corpus) {
  Outcome o;
  std::size_t instances = 0;
  for (const auto& A : corpus) {
    if (!is_leibniz(A)) continue;
    ++instances;
    const auto s = structure_subspaces(A);
    const auto& B = A.op("bracket2");
    const std::size_t n = A.dim();
    auto fail = [&](const std::string& what) { o.require(false, A.name + ": " + what); };
    if (!s.right_center.contains(s.leibniz_kernel)) fail("Leib not in C_r");
    for (const auto& c : s.right_center.basis())
      for (std::uint32_t i = 0; i < n; ++i) {
        if (!s.right_center.contains(B(c, e(i)))) fail("[C_r, L] not in C_r");
        if (!B(e(i), c).is_zero()) fail("[L, C_r] != 0");
      }
    for (const auto& a : s.leibniz_kernel.basis())
      for (const auto& b : s.leibniz_kernel.basis())
        if (!B(a, b).is_zero()) fail("[Leib, Leib] != 0");
    for (const auto& g : leibniz_generators(A))
      for (std::uint32_t i = 0; i < n; ++i)
        if (!B(e(i), g).is_zero()) fail("[e_i, s] != 0");
    // The generators span the kernel.
    if (Subspace::span(n, leibniz_generators(A)) != s.leibniz_kernel) fail("generators do not span Leib");
  }
  o.require(instances > 0, "no Leibniz instances");
  o.detail << instances << " Leibniz instances";
  return o;
}

// ---------------------------------------------------------------------------

Outcome criterion6(const std::vector<GradedAlgebraObject>& corpus) {
  Outcome o;
  std::size_t instances = 0;
  for (const auto& A : corpus) {
    if (!A.has_op("bracket2") && !A.has_op("product2")) continue;
    if (power(3, even_entries(A.basis).size()) > kSearchLimit) continue;
    ++instances;
    SearchConfig cfg;
    cfg.predicate = Predicate::CENTROID2;
    const auto found = search_operators(A, cfg);
    const auto d = centroid_space(reduce_mod(A, 3), 2).size();
    if (found.matches != power(3, d))
      o.require(false, A.name + ": " + std::to_string(found.matches) + " != 3^" + std::to_string(d));
  }
  o.require(instances > 0, "no instances");
  o.detail << instances << " instances agree";
  return o;
}

// ---------------------------------------------------------------------------

struct FuzzTarget {
  const GradedAlgebraObject* algebra;
  Identity id;
  std::string op;
};

// Re-evaluates the identity at the witness tuple with the dense oracle.
bool confirm_witness(const GradedAlgebraObject& A, const FuzzTarget& t, const Witness& w) {
  oracle::Eval ev;
  if (t.id == Identity::LEIBNIZ2) {
    const oracle::Dense B(A, "bracket2");
    ev = oracle::leibniz2(A, B, w.tuple[0], w.tuple[1], w.tuple[2]);
  } else if (t.id == Identity::TERNARY_LEIBNIZ) {
    const oracle::Dense T(A, "bracket3");
    ev = oracle::ternary_leibniz(A, T, {w.tuple[0], w.tuple[1], w.tuple[2], w.tuple[3], w.tuple[4]});
  } else {
    const oracle::Dense P(A, t.op);
    ev = oracle::assoc(P, w.tuple[0], w.tuple[1], w.tuple[2]);
  }
  return !ev.holds() && oracle::element(ev.lhs) == w.lhs && oracle::element(ev.rhs) == w.rhs;
}

std::size_t oracle_violations(const GradedAlgebraObject& A, const FuzzTarget& t) {
  if (t.id == Identity::LEIBNIZ2) return oracle::leibniz2_violations(A);
  if (t.id == Identity::TERNARY_LEIBNIZ) return oracle::ternary_leibniz_violations(A);
  return oracle::assoc_violations(A, t.op);
}

Outcome criterion7(const std::vector<GradedAlgebraObject>& corpus) {
  Outcome o;
  std::vector<FuzzTarget> targets;
  for (const auto& A : corpus) {
    if (A.dim() > 6) continue;
    if (A.has_op("bracket2") && check_identity(A, Identity::LEIBNIZ2).pass())
      targets.push_back({&A, Identity::LEIBNIZ2, "bracket2"});
    if (A.has_op("bracket3") && A.dim() <= 4 && check_identity(A, Identity::TERNARY_LEIBNIZ).pass())
      targets.push_back({&A, Identity::TERNARY_LEIBNIZ, "bracket3"});
    if (A.has_op("product2") && check_identity(A, Identity::ASSOC).pass())
      targets.push_back({&A, Identity::ASSOC, "product2"});
  }
  std::mt19937_64 rng(kSeed);
  const std::vector<int> deltas = {-2, -1, 1, 2};
  int done = 0, redrawn = 0, confirmed = 0;
  std::size_t witnesses = 0;
  while (done < kFuzzCount) {
    const auto& t = targets[rng() % targets.size()];
    const auto& A = *t.algebra;
    auto M = A.op(t.op);
    std::vector<std::uint32_t> args(M.arity());
    for (auto& a : args) a = static_cast<std::uint32_t>(rng() % A.dim());
    GroupElement deg = A.group().zero();
    for (auto a : args) deg = A.group().add(deg, A.basis.degree(a));
    std::vector<std::uint32_t> outs;
    for (std::uint32_t k = 0; k < A.dim(); ++k)
      if (A.basis.degree(k) == deg) outs.push_back(k);
    const int delta = deltas[rng() % deltas.size()];
    if (outs.empty()) continue;
    const std::uint32_t out = outs[rng() % outs.size()];
    M.add(std::span<const std::uint32_t>(args), out, A.field.from_int(delta));
    GradedAlgebraObject P = A;
    P.set_op(M);
    // A perturbation the oracle finds harmless does not test the checker: draw again.
    if (oracle_violations(P, t) == 0) {
      ++redrawn;
      continue;
    }
    ++done;
    CheckOptions opts;
    opts.op = t.id == Identity::ASSOC ? t.op : "";
    const auto r = check_identity(P, t.id, opts);
    bool ok = !r.pass() && !r.witnesses.empty();
    for (const auto& w : r.witnesses) {
      ++witnesses;
      ok = ok && confirm_witness(P, t, w);
    }
    if (ok)
      ++confirmed;
    else
      o.require(false, A.name + " " + to_string(t.id) + " not confirmed");
  }
  o.detail << confirmed << "/" << kFuzzCount << " perturbations failed with " << witnesses
           << " oracle-confirmed witnesses (" << redrawn << " harmless draws skipped)";
  return o;
}

// ---------------------------------------------------------------------------

Outcome criterion8(const AuditReport& a, const AuditReport& b) {
  Outcome o;
  std::map<std::string, std::size_t> count, with_witness;
  for (const auto& l : a.ledger) {
    ++count[l.finding];
    const bool indices = l.printed < a.rows.size() && l.amended < a.rows.size() && l.printed != l.amended;
    o.require(indices, l.finding + " row indices");
    if (!indices) continue;
    const auto &p = a.rows[l.printed], &m = a.rows[l.amended];
    o.require(p.variant == "printed" && m.variant == "amended", l.finding + " variants");
    o.require(p.instance == m.instance && p.theorem == m.theorem, l.finding + " pairing");
    for (const auto* row : {&p, &m}) {
      o.require(row->report.pass() || !row->report.witnesses.empty(), l.finding + " failing row without witnesses");
      if (!row->report.pass()) ++with_witness[l.finding];
    }
  }
  for (const char* f : {"trialgebra_bracket", "comstrans_associative", "bimodule_tensor_third_map"}) {
    o.require(count[f] > 0, std::string("missing ledger rows for ") + f);
    o.detail << f << ": " << count[f] << " pairs, " << with_witness[f] << " failing variants with witnesses; ";
  }
  bool same = a.ledger.size() == b.ledger.size();
  for (std::size_t i = 0; same && i < a.ledger.size(); ++i) {
    const auto &x = a.ledger[i], &y = b.ledger[i];
    same = x.finding == y.finding && x.instance == y.instance && a.rows[x.printed].report.render() ==
                                                                     b.rows[y.printed].report.render() &&
           a.rows[x.amended].report.render() == b.rows[y.amended].report.render();
  }
  o.require(same, "ledger differs across runs");
  o.detail << "deterministic across runs";
  return o;
}

Outcome criterion9(const std::string& first, const std::string& second) {
  Outcome o;
  o.require(first == second, "machine reports differ");
  o.detail << first.size() << " bytes, identical";
  return o;
}

}  // namespace

int main() {
  using clock = std::chrono::steady_clock;
  const auto corpus = generate_corpus(kSeed);

  const auto t0 = clock::now();
  AuditOptions opts;
  opts.seed = kSeed;
  const AuditReport first = run_audit(corpus, opts);
  const AuditReport second = run_audit(corpus, opts);
  const std::string m1 = first.render_machine(), m2 = second.render_machine();
  const double audit_s = std::chrono::duration<double>(clock::now() - t0).count();

  std::vector<std::pair<int, std::function<Outcome()>>> criteria = {
      {1, [] { return criterion1(); }},
      {2, [&] { return criterion2(first); }},
      {3, [] { return criterion3(); }},
      {4, [&] { return criterion4(corpus, first); }},
      {5, [&] { return criterion5(corpus); }},
      {6, [&] { return criterion6(corpus); }},
      {7, [&] { return criterion7(corpus); }},
      {8, [&] { return criterion8(first, second); }},
      {9, [&] { return criterion9(m1, m2); }},
  };
  std::printf("tolerance: 0 (exact arithmetic); corpus seed %llu, %zu instances; two audit runs took %.1f s\n",
              static_cast<unsigned long long>(kSeed), corpus.size(), audit_s);
  bool unexpected = false;
  for (auto& [n, run] : criteria) {
    Outcome out;
    try {
      out = run();
    } catch (const std::exception& ex) {
      out.require(false, std::string("exception: ") + ex.what());
    }
    const bool red_ok = kExpectedRed.count(n) != 0;
    std::string why;
    for (const auto& r : out.reasons) why += (why.empty() ? " | failed: " : "; ") + r;
    std::printf("criterion %d: %s%s  %s%s\n", n, out.pass ? "PASS" : "FAIL",
                !out.pass && red_ok ? " (known construction failure)" : "", out.detail.str().c_str(), why.c_str());
    if (!out.pass && !red_ok) unexpected = true;
    if (out.pass && red_ok) {
      std::printf("criterion %d: known failure no longer reproduces; update kExpectedRed\n", n);
      unexpected = true;
    }
  }
  std::fflush(stdout);
  return unexpected ? 1 : 0;
}
