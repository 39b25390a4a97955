#include <gtest/gtest.h>

#include "colalg/analysis.hpp"
#include "colalg/constructions.hpp"
#include "colalg/corpus.hpp"
#include "colalg/errors.hpp"
#include "colalg/identities.hpp"
#include "oracle.hpp"

using namespace colalg;

namespace {

GradedElement e(std::uint32_t i) { return GradedElement::basis(i); }

std::uint64_t power(std::uint64_t b, std::size_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

std::vector<GradedAlgebraObject> leibniz_members() {
  std::vector<GradedAlgebraObject> out;
  for (const auto& A : generate_corpus(1))
    if (A.has_op("bracket2") && A.dim() <= 6 && check_identity(A, Identity::LEIBNIZ2).pass()) out.push_back(A);
  return out;
}

}  // namespace

TEST(Centers, ExampleFixture) {
  const auto s = structure_subspaces(paper_example());
  const auto e13 = Subspace::span(3, {e(0), e(2)});
  EXPECT_EQ(s.leibniz_kernel, Subspace::span(3, {e(0)}));
  EXPECT_EQ(s.right_center, e13);
  EXPECT_EQ(s.left_center, e13);
  EXPECT_EQ(s.center, e13);
}

TEST(Centers, AbelianIsWhole) {
  auto L = paper_example();
  L.set_op(MultilinearOp::on_space("bracket2", 2, 3));
  const auto s = structure_subspaces(L);
  EXPECT_EQ(s.center, Subspace::whole(3));
  EXPECT_EQ(s.left_center, Subspace::whole(3));
  EXPECT_EQ(s.leibniz_kernel.dim(), 0u);
}

TEST(Centers, NonabelianLie) {
  const auto s = structure_subspaces(nonabelian_lie2());
  EXPECT_EQ(s.leibniz_kernel.dim(), 0u);
  EXPECT_EQ(s.right_center.dim(), 0u);
  EXPECT_EQ(s.center.dim(), 0u);
}

TEST(Centers, NonLeibnizIsPrecondition) {
  auto L = paper_example();
  auto B = L.op("bracket2");
  B.add({1, 1}, 1, Scalar(1));
  L.set_op(B);
  EXPECT_THROW(structure_subspaces(L), PreconditionError);
}

// Annihilators over GF(3) counted by brute force have 3^dim elements.
TEST(Centers, MatchBruteForceOverGF3) {
  for (const auto& A : leibniz_members()) {
    const auto R = reduce_mod(A, 3);
    const auto s = structure_subspaces(R);
    EXPECT_EQ(oracle::annihilator_count(R, true), power(3, s.left_center.dim())) << A.name;
    EXPECT_EQ(oracle::annihilator_count(R, false), power(3, s.right_center.dim())) << A.name;
  }
}

TEST(Centroid, FixtureDimensionThree) {
  const auto L = paper_example();
  const auto C = centroid_space(L, 2);
  EXPECT_EQ(C.size(), 3u);
  for (const auto& m : C) EXPECT_TRUE(check_operator(L, m, Predicate::CENTROID2).pass());
}

TEST(Centroid, ZeroTernaryIsAllEvenMaps) {
  auto L = paper_example();
  L.ops.clear();
  L.set_op(MultilinearOp::on_space("bracket3", 3, 3));
  EXPECT_EQ(centroid_space(L, 3).size(), 2u * 2u + 1u);
  EXPECT_EQ(even_entries(L.basis).size(), 5u);
}

TEST(Centroid, ContainsIdentity) {
  for (const auto& A : leibniz_members()) {
    const auto C = centroid_space(A, 2);
    std::vector<GradedElement> flat;
    for (const auto& m : C) {
      GradedElement v;
      for (std::uint32_t j = 0; j < A.dim(); ++j)
        for (const auto& t : m.column(j).terms()) v.add_term(t.index * A.dim() + j, t.coef);
      flat.push_back(v);
    }
    GradedElement id;
    for (std::uint32_t j = 0; j < A.dim(); ++j) id.add_term(j * A.dim() + j, Scalar(1));
    EXPECT_TRUE(Subspace::span(A.dim() * A.dim(), flat).contains(id)) << A.name;
  }
}

TEST(Search, FixtureCentroidOverGF3) {
  SearchConfig cfg;
  cfg.prime = 3;
  cfg.predicate = Predicate::CENTROID2;
  const auto r = search_operators(paper_example(), cfg);
  EXPECT_EQ(r.candidates, power(3, 5));
  EXPECT_EQ(r.matches, 27u);
  const auto id = EvenLinearMap::identity(3).transformed([](const Scalar& s) { return s.reduce_mod(3); });
  bool has_id = false, has_zero = false;
  for (const auto& m : r.maps) {
    has_id = has_id || m == id;
    has_zero = has_zero || m == EvenLinearMap::zero(3);
  }
  EXPECT_TRUE(has_id);
  EXPECT_TRUE(has_zero);
}

TEST(Search, ZeroAlgebraRotaBaxterAcceptsEverything) {
  auto L = paper_example();
  L.set_op(MultilinearOp::on_space("bracket2", 2, 3));
  SearchConfig cfg;
  cfg.predicate = Predicate::ROTA_BAXTER2;
  cfg.weight = Scalar(0);
  const auto r = search_operators(L, cfg);
  EXPECT_EQ(r.matches, r.candidates);
}

TEST(Search, NijenhuisAgreesWithReference) {
  SearchConfig cfg;
  cfg.predicate = Predicate::NIJENHUIS;
  const auto L = nonabelian_lie2();
  const auto par = search_operators(L, cfg);
  const auto ser = search_operators_serial(L, cfg);
  const auto ref = search_operators_reference(L, cfg);
  EXPECT_EQ(par.maps, ser.maps);
  EXPECT_EQ(par.maps, ref.maps);
  EXPECT_EQ(par.matches, ref.matches);
  for (const auto& m : par.maps) EXPECT_TRUE(check_operator(par.algebra, m, Predicate::NIJENHUIS).pass());
}

TEST(Search, KernelsAgreeOnCorpusAcrossPredicates) {
  for (const auto& A : generate_corpus(1)) {
    if (A.dim() > 3 || !(A.has_op("bracket2") || A.has_op("product2"))) continue;
    for (Predicate p : {Predicate::CENTROID2, Predicate::AVERAGING, Predicate::REYNOLDS2, Predicate::ROTA_BAXTER2,
                        Predicate::NIJENHUIS}) {
      SearchConfig cfg;
      cfg.predicate = p;
      if (needs_weight(p)) cfg.weight = Scalar(1);
      const auto par = search_operators(A, cfg);
      const auto ref = search_operators_reference(A, cfg);
      EXPECT_EQ(par.maps, ref.maps) << A.name << " " << to_string(p);
    }
  }
}

TEST(Search, CountEqualsCentroidDimension) {
  for (const auto& A : leibniz_members()) {
    if (power(3, even_entries(A.basis).size()) > 531441) continue;
    SearchConfig cfg;
    const auto r = search_operators(A, cfg);
    EXPECT_EQ(r.matches, power(3, centroid_space(reduce_mod(A, 3), 2).size())) << A.name;
  }
}

TEST(Search, InputErrors) {
  SearchConfig cfg;
  cfg.prime = 4;
  EXPECT_THROW(search_operators(paper_example(), cfg), InputError);
  cfg.prime = 2;
  EXPECT_THROW(search_operators(paper_example(), cfg), InputError);
  cfg.prime = 3;
  cfg.budget = 10;
  EXPECT_THROW(search_operators(paper_example(), cfg), InputError);
}

TEST(Leibniz, PolarizationGeneratorsAreRightAnnihilated) {
  for (const auto& A : leibniz_members()) {
    const auto& B = A.op("bracket2");
    for (const auto& s : leibniz_generators(A))
      for (std::uint32_t i = 0; i < A.dim(); ++i) EXPECT_TRUE(B(GradedElement::basis(i), s).is_zero()) << A.name;
  }
}
