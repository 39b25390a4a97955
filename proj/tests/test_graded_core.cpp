#include <gtest/gtest.h>

#include <random>

#include "colalg/algebra.hpp"
#include "colalg/corpus.hpp"
#include "colalg/errors.hpp"
#include "colalg/linalg.hpp"
#include "colalg/linear_map.hpp"
#include "colalg/multilinear.hpp"

#include "oracle.hpp"

using namespace colalg;

namespace {

GradedElement e(std::uint32_t i) { return GradedElement::basis(i); }

}  // namespace

TEST(Element, SparseArithmeticDropsZeros) {
  GradedElement a = e(0) + Scalar(2) * e(2);
  GradedElement b = e(2);
  a -= Scalar(2) * b;
  EXPECT_EQ(a, e(0));
  a -= e(0);
  EXPECT_TRUE(a.is_zero());
  EXPECT_EQ(a.to_string(), "0");
}

TEST(Multilinear, FixtureBracketValues) {
  const auto L = paper_example();
  const auto& B = L.op("bracket2");
  EXPECT_EQ(B(e(1), e(1)), e(0));
  EXPECT_EQ(B(e(1) + e(0), e(1)), e(0));
  EXPECT_TRUE(B(GradedElement{}, e(1)).is_zero());
  EXPECT_TRUE(B(e(1), GradedElement{}).is_zero());
  EXPECT_EQ(B.nonzero_count(), 1u);
}

TEST(Multilinear, AddCancelsAndRangeChecks) {
  auto op = MultilinearOp::on_space("bracket2", 2, 3);
  op.add({0, 1}, 2, Scalar(3));
  op.add({0, 1}, 2, Scalar(-3));
  EXPECT_TRUE(op.is_zero());
  EXPECT_THROW(op.add({0, 3}, 0, Scalar(1)), InputError);
  EXPECT_THROW(op.add({0, 1}, 3, Scalar(1)), InputError);
}

TEST(MultilinearProperty, ApplyIsMultilinear) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> c(-3, 3), idx(0, 3);
  for (int round = 0; round < 30; ++round) {
    auto op = MultilinearOp::on_space("bracket3", 3, 4);
    for (int k = 0; k < 10; ++k)
      op.add({std::uint32_t(idx(rng)), std::uint32_t(idx(rng)), std::uint32_t(idx(rng))}, idx(rng), Scalar(c(rng)));
    auto rand_vec = [&] {
      GradedElement v;
      for (std::uint32_t i = 0; i < 4; ++i) v.add_term(i, Scalar(c(rng)));
      return v;
    };
    const auto x = rand_vec(), x2 = rand_vec(), y = rand_vec(), z = rand_vec();
    const Scalar s(c(rng));
    EXPECT_EQ(op(x + s * x2, y, z), op(x, y, z) + s * op(x2, y, z));
    EXPECT_EQ(op(y, x + s * x2, z), op(y, x, z) + s * op(y, x2, z));
    EXPECT_EQ(op(y, z, x + s * x2), op(y, z, x) + s * op(y, z, x2));
  }
}

TEST(Multilinear, TuplesAreLexicographic) {
  auto op = MultilinearOp::on_space("bracket2", 2, 3);
  op.add({2, 0}, 0, Scalar(1));
  op.add({0, 2}, 0, Scalar(1));
  op.add({1, 1}, 0, Scalar(1));
  std::vector<std::vector<std::uint32_t>> seen;
  op.for_each([&](std::span<const std::uint32_t> a, std::uint32_t, const Scalar&) { seen.emplace_back(a.begin(), a.end()); });
  EXPECT_EQ(seen, (std::vector<std::vector<std::uint32_t>>{{0, 2}, {1, 1}, {2, 0}}));
}

TEST(GradingCheck, FixtureAndEmptyPass) {
  EXPECT_TRUE(grading_check(paper_example()).pass());
  auto empty = paper_example();
  empty.ops.clear();
  EXPECT_TRUE(grading_check(empty).pass());
}

TEST(GradingCheck, InjectedOddConstantFails) {
  auto L = paper_example();
  auto B = L.op("bracket2");
  B.add({0, 0}, 2, Scalar(1));
  L.set_op(B);
  const auto r = grading_check(L);
  ASSERT_FALSE(r.pass());
  ASSERT_EQ(r.witnesses.size(), 1u);
  EXPECT_EQ(r.witnesses[0].tuple, (std::vector<std::uint32_t>{0, 0, 2}));
  EXPECT_EQ(r.witnesses[0].names, (std::vector<std::string>{"e1", "e1", "e3"}));
}

TEST(EvenMap, IdentityHomothetyAndOdd) {
  const auto L = paper_example();
  EXPECT_TRUE(EvenLinearMap::identity(3).check_even(L.basis).pass());
  EXPECT_TRUE(EvenLinearMap::homothety(3, Scalar(7)).check_even(L.basis).pass());
  EvenLinearMap odd(3, 3);
  odd.set(2, 0, Scalar(1));
  const auto r = odd.check_even(L.basis);
  ASSERT_FALSE(r.pass());
  EXPECT_EQ(r.witnesses[0].names, (std::vector<std::string>{"e3", "e1"}));
}

TEST(Linalg, NullspaceIsExactAndCanonical) {
  Matrix M(2, 4);
  // x0 + 2 x1 = 0, x2 - 1/3 x3 = 0
  M(0, 0) = Scalar(1);
  M(0, 1) = Scalar(2);
  M(1, 2) = Scalar(1);
  M(1, 3) = Scalar(mpq_class(-1, 3));
  const auto ns = M.nullspace();
  ASSERT_EQ(ns.size(), 2u);
  for (const auto& v : ns) {
    EXPECT_TRUE((v[0] + Scalar(2) * v[1]).is_zero());
    EXPECT_TRUE((v[2] - Scalar(mpq_class(1, 3)) * v[3]).is_zero());
  }
  EXPECT_EQ(M.rank(), 2u);
}

TEST(LinalgProperty, NullspaceVectorsAnnihilateRandomMatrices) {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> c(-2, 2);
  for (int round = 0; round < 40; ++round) {
    const std::size_t rows = 1 + round % 4, cols = 2 + round % 5;
    Matrix M(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) M(i, j) = Scalar(c(rng));
    const auto ns = M.nullspace();
    EXPECT_EQ(ns.size() + M.rank(), cols);
    for (const auto& v : ns)
      for (std::size_t i = 0; i < rows; ++i) {
        Scalar s(0);
        for (std::size_t j = 0; j < cols; ++j) s += M(i, j) * v[j];
        EXPECT_TRUE(s.is_zero());
      }
  }
}

TEST(Subspace, SpanEqualityIsBasisIndependent) {
  const auto a = Subspace::span(3, {e(0) + e(1), e(1)});
  const auto b = Subspace::span(3, {e(0), Scalar(2) * e(1) - e(0)});
  EXPECT_EQ(a, b);
  EXPECT_TRUE(a.contains(e(0)));
  EXPECT_FALSE(a.contains(e(2)));
  EXPECT_EQ(a.intersect(Subspace::span(3, {e(1) + e(2), e(0)})).dim(), 1u);
  EXPECT_EQ(a.canonicalized(), a);
}

TEST(ReduceMod, PreservesStructureAndRejectsBadDenominators) {
  auto L = paper_example();
  const auto R = reduce_mod(L, 3);
  EXPECT_EQ(R.field.characteristic(), 3u);
  EXPECT_EQ(R.op("bracket2").on_basis(1, 1).at(0).coef, Scalar::residue(1, 3));
  auto B = L.op("bracket2");
  B.add({1, 1}, 0, Scalar(mpq_class(1, 3)));
  L.set_op(B);
  EXPECT_THROW(reduce_mod(L, 3), InputError);
}

TEST(Algebra, MissingOpNamed) {
  const auto L = paper_example();
  try {
    L.op("bracket3");
    FAIL();
  } catch (const InputError& err) {
    EXPECT_NE(std::string(err.what()).find("bracket3"), std::string::npos);
  }
}
