#include <gtest/gtest.h>

#include <random>

#include "colalg/constructions.hpp"
#include "colalg/corpus.hpp"
#include "colalg/errors.hpp"
#include "colalg/identities.hpp"
#include "colalg/operators.hpp"
#include "oracle.hpp"

using namespace colalg;

namespace {

GradedElement e(std::uint32_t i) { return GradedElement::basis(i); }

GradedAlgebraObject broken_example() {
  auto L = paper_example();
  auto B = L.op("bracket2");
  B.add({1, 1}, 1, Scalar(1));
  L.set_op(B);
  return L;
}

GradedAlgebraObject lie2_ternary() { return derive_ternary_from_binary(nonabelian_lie2()); }

// Random grading-consistent perturbation of one constant of `op`; unchanged if
// no tuple has a degree the basis can receive (e.g. an all-odd basis).
GradedAlgebraObject perturb(const GradedAlgebraObject& A, const std::string& op, std::mt19937_64& rng) {
  auto out = A;
  auto M = A.op(op);
  const std::size_t n = A.dim();
  std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(n - 1));
  for (int attempt = 0; attempt < 256; ++attempt) {
    std::vector<std::uint32_t> args(M.arity());
    for (auto& a : args) a = pick(rng);
    GroupElement deg = A.group().zero();
    for (auto a : args) deg = A.group().add(deg, A.basis.degree(a));
    std::vector<std::uint32_t> outs;
    for (std::uint32_t o = 0; o < n; ++o)
      if (A.basis.degree(o) == deg) outs.push_back(o);
    if (outs.empty()) continue;
    M.add(std::span<const std::uint32_t>(args), outs[rng() % outs.size()], A.field.one());
    out.set_op(M);
    return out;
  }
  return out;
}

}  // namespace

TEST(Leibniz2, FixturePassesAll27Triples) {
  const auto r = check_identity(paper_example(), Identity::LEIBNIZ2);
  EXPECT_TRUE(r.pass());
  EXPECT_EQ(r.checked_count, 27u);
}

TEST(Leibniz2, BrokenExampleWitness) {
  const auto L = broken_example();
  const auto r = check_identity(L, Identity::LEIBNIZ2);
  ASSERT_FALSE(r.pass());
  const Witness* hit = nullptr;
  for (const auto& w : r.witnesses)
    if (w.tuple == std::vector<std::uint32_t>{1, 1, 1}) hit = &w;
  ASSERT_NE(hit, nullptr);
  EXPECT_EQ(hit->lhs, e(0) + e(1));
  EXPECT_EQ(hit->rhs, Scalar(2) * e(0) + Scalar(2) * e(1));
}

// [e2,e2] replaced by e2 outright.
TEST(Leibniz2, ReplacedConstantWitness) {
  auto L = paper_example();
  auto B = MultilinearOp::on_space("bracket2", 2, 3);
  B.add({1, 1}, 1, Scalar(1));
  L.set_op(B);
  const auto r = check_identity(L, Identity::LEIBNIZ2);
  ASSERT_FALSE(r.pass());
  ASSERT_EQ(r.witnesses[0].tuple, (std::vector<std::uint32_t>{1, 1, 1}));
  EXPECT_EQ(r.witnesses[0].lhs, e(1));
  EXPECT_EQ(r.witnesses[0].rhs, Scalar(2) * e(1));
}

TEST(Identities, ZeroBracketPassesEverything) {
  auto L = paper_example();
  L.set_op(MultilinearOp::on_space("bracket2", 2, 3));
  L.set_op(MultilinearOp::on_space("bracket3", 3, 3));
  L.set_op(MultilinearOp::on_space("product2", 2, 3));
  for (Identity id : {Identity::LEIBNIZ2, Identity::LIE_COLOR, Identity::TERNARY_LEIBNIZ, Identity::TERNARY_LIE,
                      Identity::LTS, Identity::JTS, Identity::ASSOC, Identity::EPS_COMM, Identity::LEIBNIZ_POISSON,
                      Identity::TERNARY_LEIBNIZ_POISSON})
    EXPECT_TRUE(check_identity(L, id).pass()) << to_string(id);
}

TEST(Identities, NamesRoundTrip) {
  for (Identity id : all_identities()) EXPECT_EQ(parse_identity(to_string(id)), id);
  EXPECT_FALSE(parse_identity("NOT_AN_IDENTITY").has_value());
  EXPECT_THROW(check_identity(paper_example(), "NOPE"), InputError);
}

TEST(Identities, MissingOpIsInputError) {
  EXPECT_THROW(check_identity(paper_example(), Identity::ASSOC), InputError);
}

// The checker and the dense oracle count the same violations on the corpus and on perturbations of it.
TEST(OracleAgreement, CorpusAndPerturbations) {
  std::mt19937_64 rng(2024);
  const auto corpus = generate_corpus(1);
  std::size_t compared = 0;
  for (const auto& A : corpus) {
    if (A.dim() > 6) continue;
    for (int round = 0; round < 3; ++round) {
      if (A.has_op("bracket2")) {
        const auto P = round == 0 ? A : perturb(A, "bracket2", rng);
        EXPECT_EQ(check_identity(P, Identity::LEIBNIZ2, {.cap = kUnlimited}).violation_count,
                  oracle::leibniz2_violations(P))
            << A.name;
        ++compared;
      }
      if (A.has_op("bracket3") && A.dim() <= 4) {
        const auto P = round == 0 ? A : perturb(A, "bracket3", rng);
        EXPECT_EQ(check_identity(P, Identity::TERNARY_LEIBNIZ).violation_count, oracle::ternary_leibniz_violations(P))
            << A.name;
        ++compared;
      }
      if (A.has_op("product2")) {
        const auto P = round == 0 ? A : perturb(A, "product2", rng);
        EXPECT_EQ(check_identity(P, Identity::ASSOC).violation_count, oracle::assoc_violations(P)) << A.name;
        ++compared;
      }
    }
  }
  EXPECT_GT(compared, 30u);
}

TEST(OracleAgreement, WitnessValuesMatchOracle) {
  const auto L = broken_example();
  const oracle::Dense B(L, "bracket2");
  const auto r = check_identity(L, Identity::LEIBNIZ2, {.cap = kUnlimited});
  EXPECT_EQ(r.witnesses.size(), r.violation_count);
  for (const auto& w : r.witnesses) {
    const auto ev = oracle::leibniz2(L, B, w.tuple[0], w.tuple[1], w.tuple[2]);
    EXPECT_FALSE(ev.holds());
    EXPECT_EQ(oracle::element(ev.lhs), w.lhs);
    EXPECT_EQ(oracle::element(ev.rhs), w.rhs);
  }
}

TEST(Kernel, ParallelMatchesSerial) {
  std::mt19937_64 rng(77);
  for (const auto& A : generate_corpus(3)) {
    if (!A.has_op("bracket2") || A.dim() > 6) continue;
    const auto P = perturb(A, "bracket2", rng);
    for (std::size_t cap : {std::size_t{1}, std::size_t{4}, kUnlimited}) {
      const auto par = check_identity(P, Identity::LEIBNIZ2, {.cap = cap, .parallel = true});
      const auto ser = check_identity(P, Identity::LEIBNIZ2, {.cap = cap, .parallel = false});
      EXPECT_EQ(par.render(), ser.render());
      EXPECT_EQ(par.witnesses, ser.witnesses);
      EXPECT_EQ(par.violation_count, ser.violation_count);
    }
  }
}

TEST(Kernel, WitnessCapKeepsExactCount) {
  const auto L = broken_example();
  const auto all = check_identity(L, Identity::LEIBNIZ2, {.cap = kUnlimited});
  const auto one = check_identity(L, Identity::LEIBNIZ2, {.cap = 1});
  EXPECT_EQ(one.witnesses.size(), 1u);
  EXPECT_EQ(one.violation_count, all.violation_count);
  EXPECT_EQ(one.witnesses[0], all.witnesses[0]);
}

TEST(Operators, CentroidAndRotaBaxter) {
  const auto L = paper_example();
  EXPECT_TRUE(check_operator(L, EvenLinearMap::identity(3), Predicate::CENTROID2).pass());
  EXPECT_TRUE(check_operator(L, EvenLinearMap::homothety(3, Scalar(5)), Predicate::CENTROID2).pass());
  for (int w : {-1, 0, 3})
    EXPECT_TRUE(check_operator(L, EvenLinearMap::zero(3), Predicate::ROTA_BAXTER2, {.weight = Scalar(w)}).pass());
  EvenLinearMap m(3, 3);
  m.set(1, 0, Scalar(1));  // e1 -> e2
  const auto r = check_operator(L, m, Predicate::CENTROID2);
  ASSERT_FALSE(r.pass());
  bool found = false;
  for (const auto& w : r.witnesses) found = found || w.tuple == std::vector<std::uint32_t>{1, 1};
  EXPECT_TRUE(found);
}

TEST(Operators, RejectsOddMapsAndWeightMisuse) {
  const auto L = paper_example();
  EvenLinearMap odd(3, 3);
  odd.set(2, 0, Scalar(1));
  EXPECT_THROW(check_operator(L, odd, Predicate::CENTROID2), InputError);
  EXPECT_THROW(check_operator(L, EvenLinearMap::zero(3), Predicate::ROTA_BAXTER2), InputError);
  EXPECT_THROW(check_operator(L, EvenLinearMap::zero(3), Predicate::CENTROID2, {.weight = Scalar(1)}), InputError);
}

TEST(Operators, NijenhuisIdentityAndPredicateNames) {
  EXPECT_TRUE(check_operator(nonabelian_lie2(), EvenLinearMap::identity(2), Predicate::NIJENHUIS).pass());
  for (Predicate p : all_predicates()) EXPECT_EQ(parse_predicate(to_string(p)), p);
}

TEST(Bimodule, AdjointPassesAndPerturbationFails) {
  const auto b = bimodule_adjoint(lie2_ternary());
  EXPECT_TRUE(check_bimodule(b, Identity::BIMODULE3).pass());
  auto bad = b;
  auto& llm = bad.module.actions.at("act_LLM");
  llm = llm.transformed([](const Scalar& s) { return -s; });
  const auto r = check_bimodule(bad, Identity::BIMODULE3);
  EXPECT_FALSE(r.pass());
  EXPECT_FALSE(r.witnesses.empty());
}

TEST(Bimodule, ZeroModulePasses) {
  BimoduleObject b;
  b.algebra = lie2_ternary();
  for (const char* n : {"act_MLL", "act_LML", "act_LLM"}) b.module.actions[n] = make_action(n, 2, 0);
  EXPECT_TRUE(check_bimodule(b, Identity::BIMODULE3).pass());
}

TEST(Representation, AdjointPassesZeroPassesNegatedRhoFails) {
  const auto rep = to_representation(bimodule_adjoint(lie2_ternary()));
  EXPECT_TRUE(check_representation(rep).pass());

  auto zero = rep;
  const auto zero_op = [](const MultilinearOp& m) { return m.transformed([](const Scalar&) { return Scalar(0); }); };
  zero.lambda = zero_op(rep.lambda);
  zero.mu = zero_op(rep.mu);
  zero.rho = zero_op(rep.rho);
  EXPECT_TRUE(check_representation(zero).pass());

  auto bad = rep;
  bad.rho = rep.rho.transformed([](const Scalar& s) { return -s; });
  const auto r = check_representation(bad);
  ASSERT_FALSE(r.pass());
  EXPECT_FALSE(r.witnesses.empty());
}

TEST(Comstrans, LieSourceHasEqualOps) {
  const auto C = from_lie(nonabelian_lie2(), LieTarget::COMSTRANS);
  EXPECT_EQ(C.op("commutator3").renamed("x"), C.op("translator3").renamed("x"));
  EXPECT_TRUE(check_identity(C, Identity::COMSTRANS).pass());
}
