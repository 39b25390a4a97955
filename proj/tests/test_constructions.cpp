#include <gtest/gtest.h>

#include "colalg/constructions.hpp"
#include "colalg/corpus.hpp"
#include "colalg/errors.hpp"
#include "colalg/identities.hpp"
#include "colalg/operators.hpp"
#include "oracle.hpp"

using namespace colalg;

namespace {

GradedElement e(std::uint32_t i) { return GradedElement::basis(i); }

GradedAlgebraObject lie2_ternary() { return derive_ternary_from_binary(nonabelian_lie2()); }

// The same product in every slot of a trialgebra or dialgebra.
GradedAlgebraObject with_products(const GradedAlgebraObject& A, std::initializer_list<const char*> names) {
  GradedAlgebraObject T = A;
  const auto P = A.op("product2");
  T.ops.clear();
  T.claims.clear();
  for (const char* n : names) T.set_op(P.renamed(n));
  return T;
}

// Flip about the anti-diagonal: E11 <-> E22, E12 fixed. An involutive anti-automorphism
// of upper triangular matrices.
EvenLinearMap flip_transpose() {
  EvenLinearMap m(3, 3);
  m.set(2, 0, Scalar(1));
  m.set(1, 1, Scalar(1));
  m.set(0, 2, Scalar(1));
  return m;
}

MultilinearOp scaled(const MultilinearOp& m, const Scalar& s) {
  return m.transformed([&](const Scalar& c) { return s * c; });
}

bool same_constants(const MultilinearOp& a, const MultilinearOp& b) { return a.renamed("x") == b.renamed("x"); }

}  // namespace

TEST(DerivedTernary, ExampleFixtureGivesZero) {
  EXPECT_TRUE(derive_ternary_from_binary(paper_example()).op("bracket3").is_zero());
}

TEST(DerivedTernary, ZeroBracketGivesZero) {
  auto L = nonabelian_lie2();
  L.set_op(MultilinearOp::on_space("bracket2", 2, 2));
  EXPECT_TRUE(derive_ternary_from_binary(L).op("bracket3").is_zero());
}

TEST(DerivedTernary, NonabelianValues) {
  const auto T = lie2_ternary();
  const auto& B = T.op("bracket3");
  EXPECT_EQ(B(e(1), e(0), e(1)), -e(0));
  EXPECT_EQ(B(e(1), e(1), e(0)), e(0));
  EXPECT_TRUE(check_identity(T, Identity::TERNARY_LEIBNIZ).pass());
}

TEST(XiContraction, RecoversFixtureTable) {
  const auto L = binary_from_ternary_at(lie2_ternary(), 0);
  const auto& B = L.op("bracket2");
  EXPECT_EQ(B.nonzero_count(), 1u);
  EXPECT_EQ(B(e(1), e(1)), e(0));
}

TEST(XiContraction, WrongXiIsPrecondition) {
  try {
    binary_from_ternary_at(lie2_ternary(), 1);
    FAIL();
  } catch (const PreconditionError& err) {
    EXPECT_FALSE(err.report().witnesses.empty());
  }
}

TEST(XiContraction, ZeroTernaryAnyXi) {
  auto T = lie2_ternary();
  T.set_op(MultilinearOp::on_space("bracket3", 3, 2));
  EXPECT_TRUE(binary_from_ternary_at(T, 0).op("bracket2").is_zero());
}

TEST(BinaryTwist, NijenhuisIdentityIsOriginal) {
  const auto L = nonabelian_lie2();
  const auto out = twist_binary(L, EvenLinearMap::identity(2), BinaryTwist::NIJENHUIS);
  EXPECT_TRUE(same_constants(out.op("bracket2"), L.op("bracket2")));
}

TEST(BinaryTwist, RotaBaxterZeroMapScales) {
  const auto L = paper_example();
  for (int w : {2, -3}) {
    const auto out = twist_binary(L, EvenLinearMap::zero(3), BinaryTwist::ROTA_BAXTER, Scalar(w));
    EXPECT_TRUE(same_constants(out.op("bracket2"), scaled(L.op("bracket2"), Scalar(w))));
  }
}

TEST(BinaryTwist, CentroidHomothety) {
  const auto L = paper_example();
  const auto out = twist_binary(L, EvenLinearMap::homothety(3, Scalar(5)), BinaryTwist::CENTROID);
  EXPECT_TRUE(same_constants(out.op("bracket2"), scaled(L.op("bracket2"), Scalar(5))));
  EXPECT_EQ(oracle::leibniz2_violations(out), 0u);
}

TEST(TernaryTwist, CentroidCases) {
  const auto T = lie2_ternary();
  const auto c = ternary_twist(T, EvenLinearMap::identity(2), TernaryTwist::CENTROID_C);
  EXPECT_TRUE(same_constants(c.op("bracket3"), T.op("bracket3")));
  const auto a = ternary_twist(T, EvenLinearMap::homothety(2, Scalar(3)), TernaryTwist::CENTROID_A);
  EXPECT_TRUE(same_constants(a.op("bracket3"), scaled(T.op("bracket3"), Scalar(3))));
  EXPECT_EQ(oracle::ternary_leibniz_violations(a), 0u);
}

TEST(TernaryTwist, RotaBaxterZero) {
  const auto out = ternary_twist(lie2_ternary(), EvenLinearMap::zero(2), TernaryTwist::ROTA_BAXTER3, Scalar(0));
  EXPECT_TRUE(out.op("bracket3").is_zero());
}

TEST(DirectSum, FixtureSquared) {
  const auto S = direct_sum(paper_example(), paper_example(), SumKind::BINARY);
  EXPECT_EQ(S.dim(), 6u);
  EXPECT_EQ(oracle::leibniz2_violations(S), 0u);
  EXPECT_EQ(S.basis.name(0), "a.e1");
  EXPECT_EQ(S.basis.name(3), "b.e1");
}

TEST(DirectSum, ZeroDimensionalSummand) {
  const auto L = paper_example();
  GradedAlgebraObject Z;
  Z.field = L.field;
  Z.bicharacter = L.bicharacter;
  Z.set_op(MultilinearOp::on_space("bracket2", 2, 0));
  const auto S = direct_sum(L, Z, SumKind::BINARY);
  EXPECT_EQ(S.dim(), 3u);
  EXPECT_TRUE(same_constants(S.op("bracket2"), L.op("bracket2")));
}

TEST(DirectSum, TernaryAndPoisson) {
  const auto T = direct_sum(lie2_ternary(), lie2_ternary(), SumKind::TERNARY);
  EXPECT_EQ(oracle::ternary_leibniz_violations(T), 0u);
  const auto P = poisson_to_ternary(from_dialgebra(with_products(upper_triangular(), {"left", "right"})),
                                    PoissonRecipe::NESTED_BRACKET);
  const auto S = direct_sum(P, P, SumKind::TERNARY_POISSON);
  EXPECT_TRUE(check_identity(S, Identity::TERNARY_LEIBNIZ_POISSON).pass());
}

TEST(SemidirectSum, AdjointSelfAction) {
  const auto L = paper_example();
  const auto b = action_bimodule(L, L, L.op("bracket2"), L.op("bracket2"));
  const auto S = semidirect_sum(b);
  EXPECT_EQ(S.dim(), 6u);
  EXPECT_EQ(oracle::leibniz2_violations(S), 0u);
}

TEST(SemidirectSum, ModuleCorollary) {
  const auto L = paper_example();
  auto b = as_bimodule(with_module(bimodule_adjoint(L)));
  b.module.actions.erase("mod_bracket2");
  const auto S = semidirect_sum(b);
  EXPECT_EQ(oracle::leibniz2_violations(S), 0u);
}

TEST(TensorSquareTernary, LieTernary) {
  const auto S = tensor_square_ternary(lie2_ternary());
  EXPECT_EQ(S.dim(), 4u);
  EXPECT_EQ(oracle::leibniz2_violations(S), 0u);
  auto Z = lie2_ternary();
  Z.set_op(MultilinearOp::on_space("bracket3", 3, 2));
  EXPECT_TRUE(tensor_square_ternary(Z).op("bracket2").is_zero());
}

TEST(TensorAssocTernary, DualNumbersAndUnit) {
  const auto S = tensor_assoc_ternary(dual_numbers(), lie2_ternary());
  EXPECT_EQ(S.dim(), 4u);
  EXPECT_EQ(oracle::ternary_leibniz_violations(S), 0u);

  GradedAlgebraObject K = dual_numbers();
  K.basis = GradedBasis({{"1", GroupElement{}}});
  auto one = MultilinearOp::on_space("product2", 2, 1);
  one.add({0, 0}, 0, Scalar(1));
  K.ops.clear();
  K.set_op(one);
  const auto U = tensor_assoc_ternary(K, lie2_ternary());
  EXPECT_TRUE(same_constants(U.op("bracket3"), lie2_ternary().op("bracket3")));
}

TEST(Trialgebra, StarProductIsProduct) {
  const auto T = with_products(upper_triangular(), {"left", "middle", "right"});
  const auto S = from_trialgebra(T, TrialgebraTarget::STAR_ASSOC);
  EXPECT_TRUE(same_constants(S.op("product2"), upper_triangular().op("product2")));
}

TEST(Trialgebra, CommutativePrintedGivesZeroBracket) {
  const auto T = with_products(dual_numbers(), {"left", "middle", "right"});
  const auto P = from_trialgebra(T, TrialgebraTarget::LEIBNIZ_POISSON);
  EXPECT_TRUE(P.op("bracket2").is_zero());
}

TEST(Trialgebra, AmendedGivesCommutator) {
  const auto T = with_products(upper_triangular(), {"left", "middle", "right"});
  const auto P = from_trialgebra(T, TrialgebraTarget::LEIBNIZ_POISSON, {.variant = "amended"});
  const auto L = from_associative(upper_triangular(), AssocTarget::COMMUTATOR_LIE);
  EXPECT_TRUE(same_constants(P.op("bracket2"), L.op("bracket2")));
}

TEST(RbTrialgebra, ZeroAndIdentity) {
  const auto T = with_products(upper_triangular(), {"left", "middle", "right"});
  const auto Z = rb_trialgebra_derived(T, EvenLinearMap::zero(3), Scalar(0), Identity::LEFT_SYMMETRIC);
  EXPECT_TRUE(Z.op("product2").is_zero());
  const auto I = rb_trialgebra_derived(T, EvenLinearMap::identity(3), Scalar(-1), Identity::ASSOC);
  const oracle::Dense P(upper_triangular(), "product2"), Q(I, "product2");
  for (std::size_t x = 0; x < 3; ++x)
    for (std::size_t y = 0; y < 3; ++y) {
      auto neg = P(P.unit(y), P.unit(x));
      for (auto& s : neg) s = -s;
      EXPECT_EQ(Q(Q.unit(x), Q.unit(y)), neg);
    }
}

TEST(Dialgebra, CommutativeAndNoncommutative) {
  EXPECT_TRUE(from_dialgebra(with_products(dual_numbers(), {"left", "right"})).op("bracket2").is_zero());
  const auto P = from_dialgebra(with_products(upper_triangular(), {"left", "right"}));
  EXPECT_FALSE(P.op("bracket2").is_zero());
  EXPECT_TRUE(check_identity(P, Identity::LEIBNIZ_POISSON).pass());
}

TEST(Dialgebra, PerturbedRightIsPrecondition) {
  auto D = with_products(upper_triangular(), {"left", "right"});
  auto r = D.op("right");
  r.add({0, 0}, 1, Scalar(1));
  D.set_op(r);
  EXPECT_THROW(from_dialgebra(D), PreconditionError);
}

TEST(PoissonToTernary, RecipesDiffer) {
  const auto P = from_dialgebra(with_products(upper_triangular(), {"left", "right"}));
  const auto a = poisson_to_ternary(P, PoissonRecipe::NESTED_BRACKET);
  const auto b = poisson_to_ternary(P, PoissonRecipe::BRACKET_OF_PRODUCT);
  EXPECT_FALSE(same_constants(a.op("bracket3"), b.op("bracket3")));
  auto C = from_dialgebra(with_products(dual_numbers(), {"left", "right"}));
  EXPECT_TRUE(poisson_to_ternary(C, PoissonRecipe::NESTED_BRACKET).op("bracket3").is_zero());
}

TEST(Associative, UpperTriangularTargets) {
  const auto A = upper_triangular();
  EXPECT_TRUE(check_identity(from_associative(A, AssocTarget::LTS), Identity::LTS).pass());
  const auto J = from_associative(A, AssocTarget::JTS_PLAIN);
  EXPECT_TRUE(check_identity(J, Identity::JTS).pass());
  const auto Ji = from_associative(A, AssocTarget::JTS_INVOLUTION, flip_transpose());
  EXPECT_TRUE(check_identity(Ji, Identity::JTS).pass());
  EXPECT_TRUE(check_operator(A, flip_transpose(), Predicate::INVOLUTION_ANTIAUTO).pass());
  EXPECT_TRUE(check_identity(jts_to_lts(J), Identity::LTS).pass());
  EXPECT_TRUE(check_identity(jts_to_lts(Ji), Identity::LTS).pass());
}

TEST(Associative, CommutativeGivesZeroBracket) {
  EXPECT_TRUE(from_associative(dual_numbers(), AssocTarget::COMMUTATOR_LIE).op("bracket2").is_zero());
}

TEST(Lie, Targets) {
  auto ab = nonabelian_lie2();
  ab.set_op(MultilinearOp::on_space("bracket2", 2, 2));
  EXPECT_TRUE(from_lie(ab, LieTarget::LTS).op("bracket3").is_zero());
  EXPECT_TRUE(check_identity(from_lie(nonabelian_lie2(), LieTarget::LTS), Identity::LTS).pass());
}

TEST(JtsToLts, SymmetricTripleGivesZero) {
  auto J = upper_triangular();
  J.ops.clear();
  auto T = MultilinearOp::on_space("bracket3", 3, 3);
  for (std::uint32_t i = 0; i < 3; ++i) T.add({i, i, i}, i, Scalar(1));
  J.set_op(T);
  J.claims = {"JTS"};
  EXPECT_TRUE(jts_to_lts(J, {.verify = false}).op("bracket3").is_zero());
}

TEST(ComstransForm, ZeroAndOneDimensional) {
  const auto L = nonabelian_lie2();
  auto f = MultilinearOp::on_space("form2", 2, 2, true);
  const auto Z = comstrans_from_bilinear_form(L.basis, L.bicharacter, L.field, f);
  EXPECT_TRUE(Z.op("commutator3").is_zero());
  EXPECT_TRUE(Z.op("translator3").is_zero());

  const GradedBasis one({{"e", GroupElement{}}});
  auto g = MultilinearOp::on_space("form2", 2, 1, true);
  g.add_scalar(std::vector<std::uint32_t>{0, 0}, Scalar(1));
  const auto O = comstrans_from_bilinear_form(one, L.bicharacter, L.field, g);
  EXPECT_TRUE(O.op("commutator3").is_zero());
}

TEST(Opposite, TwiceIsIdentityAndCommutativeFixed) {
  const auto A = poisson_to_ternary(from_dialgebra(with_products(upper_triangular(), {"left", "right"})),
                                    PoissonRecipe::NESTED_BRACKET);
  const auto O = opposite_product(A);
  EXPECT_FALSE(same_constants(O.op("product2"), A.op("product2")));
  EXPECT_TRUE(same_constants(opposite_product(O).op("product2"), A.op("product2")));
  const auto D = poisson_to_ternary(from_dialgebra(with_products(dual_numbers(), {"left", "right"})),
                                    PoissonRecipe::NESTED_BRACKET);
  EXPECT_TRUE(same_constants(opposite_product(D).op("product2"), D.op("product2")));
  EXPECT_TRUE(same_constants(opposite_product(D).op("bracket3"), D.op("bracket3")));
}

TEST(Bimodules, AdjointSemidirect) {
  const auto S = bimodule_semidirect3(bimodule_adjoint(lie2_ternary()));
  EXPECT_EQ(S.dim(), 4u);
  EXPECT_EQ(oracle::ternary_leibniz_violations(S), 0u);
}

TEST(Bimodules, PullbackAlongIdentityIsAdjoint) {
  const auto T = lie2_ternary();
  const auto p = bimodule_pullback(T, T, EvenLinearMap::identity(2));
  const auto a = bimodule_adjoint(T);
  for (const char* n : {"act_MLL", "act_LML", "act_LLM"})
    EXPECT_TRUE(same_constants(p.module.action(n), a.module.action(n))) << n;
}

TEST(Bimodules, RepresentationRoundTrip) {
  const auto a = bimodule_adjoint(lie2_ternary());
  const auto back = from_representation(to_representation(a));
  for (const char* n : {"act_MLL", "act_LML", "act_LLM"})
    EXPECT_TRUE(same_constants(back.module.action(n), a.module.action(n))) << n;
}

TEST(Bimodules, TensorWithZeroModule) {
  const auto a = bimodule_adjoint(lie2_ternary());
  BimoduleObject z;
  z.algebra = a.algebra;
  for (const char* n : {"act_MLL", "act_LML", "act_LLM"}) z.module.actions[n] = make_action(n, 2, 0);
  const auto t = bimodule_tensor(a, z, {.variant = "amended"});
  EXPECT_EQ(t.module.basis.size(), 0u);
}

TEST(Bimodules, DirectSumAndFromBinary) {
  const auto a = bimodule_adjoint(lie2_ternary());
  EXPECT_TRUE(check_bimodule(bimodule_direct_sum(a, a), Identity::BIMODULE3).pass());
  const auto b = bimodule_from_binary(bimodule_adjoint(nonabelian_lie2()));
  EXPECT_TRUE(check_bimodule(b, Identity::BIMODULE3).pass());
}
