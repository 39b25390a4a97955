#include "colalg/corpus.hpp"

#include <random>

#include "colalg/constructions.hpp"

namespace colalg {

namespace {

GradedAlgebraObject skeleton(const std::string& name, Bicharacter bc, std::vector<BasisEntry> basis) {
  GradedAlgebraObject obj;
  obj.name = name;
  obj.bicharacter = std::move(bc);
  obj.basis = GradedBasis(std::move(basis));
  return obj;
}

std::vector<BasisEntry> trivial_basis(std::initializer_list<const char*> names) {
  std::vector<BasisEntry> out;
  for (const char* n : names) out.push_back({n, GroupElement{}});
  return out;
}

}  // namespace

GradedAlgebraObject paper_example() {
  const Field Q = Field::rationals();
  const Bicharacter bc = Bicharacter::builtin(BuiltinBicharacter::Z2, Q);
  GradedAlgebraObject L = skeleton("paper_example", bc, {{"e1", {{0}}}, {"e2", {{0}}}, {"e3", {{1}}}});
  MultilinearOp b = MultilinearOp::on_space("bracket2", 2, 3);
  b.add({1, 1}, 0, Q.one());
  L.set_op(std::move(b));
  L.claims = {"LEIBNIZ2"};
  L.comment =
      "Described as two-dimensional but listed with three basis vectors; "
      "e3 is kept as an odd basis vector and every bracket involving it is zero.";
  return L;
}

GradedAlgebraObject nonabelian_lie2() {
  const Field Q = Field::rationals();
  GradedAlgebraObject L = skeleton("nonabelian_lie2", Bicharacter::trivial(Q), trivial_basis({"e1", "e2"}));
  MultilinearOp b = MultilinearOp::on_space("bracket2", 2, 2);
  b.add({0, 1}, 0, Q.one());
  b.add({1, 0}, 0, -Q.one());
  L.set_op(std::move(b));
  L.claims = {"LIE_COLOR", "LEIBNIZ2"};
  return L;
}

GradedAlgebraObject dual_numbers() {
  const Field Q = Field::rationals();
  GradedAlgebraObject A = skeleton("dual_numbers", Bicharacter::trivial(Q), trivial_basis({"1", "t"}));
  MultilinearOp p = MultilinearOp::on_space("product2", 2, 2);
  p.add({0, 0}, 0, Q.one());
  p.add({0, 1}, 1, Q.one());
  p.add({1, 0}, 1, Q.one());
  A.set_op(std::move(p));
  A.claims = {"ASSOC", "EPS_COMM"};
  return A;
}

GradedAlgebraObject upper_triangular() {
  const Field Q = Field::rationals();
  GradedAlgebraObject A =
      skeleton("upper_triangular", Bicharacter::trivial(Q), trivial_basis({"E11", "E12", "E22"}));
  MultilinearOp p = MultilinearOp::on_space("product2", 2, 3);
  p.add({0, 0}, 0, Q.one());
  p.add({0, 1}, 1, Q.one());
  p.add({1, 2}, 1, Q.one());
  p.add({2, 2}, 2, Q.one());
  A.set_op(std::move(p));
  A.claims = {"ASSOC"};
  return A;
}

GradedAlgebraObject twisted_group_algebra(std::size_t n, const std::vector<int>& B, const std::vector<std::int64_t>& f,
                                          const std::string& name) {
  const Field Q = Field::rationals();
  const std::size_t dim = std::size_t{1} << n;
  const Bicharacter bc = n == 1 ? Bicharacter::builtin(BuiltinBicharacter::Z2, Q)
                                : Bicharacter::builtin(BuiltinBicharacter::Z2xZ2, Q);
  // Element g is the bit vector of its index, first coordinate in the low bit.
  auto coords = [&](std::size_t g) {
    std::vector<std::int64_t> c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = static_cast<std::int64_t>((g >> i) & 1u);
    return c;
  };
  std::vector<BasisEntry> basis;
  for (std::size_t g = 0; g < dim; ++g) {
    std::string label = "g";
    for (auto c : coords(g)) label += std::to_string(c);
    basis.push_back({label, GroupElement{coords(g)}});
  }
  GradedAlgebraObject A = skeleton(name, bc, std::move(basis));
  MultilinearOp p = MultilinearOp::on_space("product2", 2, dim);
  for (std::size_t g = 0; g < dim; ++g)
    for (std::size_t h = 0; h < dim; ++h) {
      const auto cg = coords(g), ch = coords(h);
      int e = 0;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) e += B[i * n + j] * static_cast<int>(cg[i] * ch[j]);
      mpq_class c(f[g] * f[h], f[g ^ h]);
      c.canonicalize();
      if (e % 2) c = -c;
      p.add({static_cast<std::uint32_t>(g), static_cast<std::uint32_t>(h)}, static_cast<std::uint32_t>(g ^ h), Scalar(c));
    }
  A.set_op(std::move(p));
  A.claims = {"ASSOC"};
  return A;
}

GradedAlgebraObject forget_grading(const GradedAlgebraObject& obj) {
  GradedAlgebraObject out = obj;
  out.bicharacter = Bicharacter::trivial(obj.field);
  std::vector<BasisEntry> entries;
  for (const auto& e : obj.basis.entries()) entries.push_back({e.name, GroupElement{}});
  out.basis = GradedBasis(std::move(entries));
  if (out.module) {
    std::vector<BasisEntry> m;
    for (const auto& e : out.module->basis.entries()) m.push_back({e.name, GroupElement{}});
    out.module->basis = GradedBasis(std::move(m));
  }
  out.name = obj.name + ".ungraded";
  return out;
}

std::vector<GradedAlgebraObject> generate_corpus(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto pick = [&](std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
  };
  // Rescaling factors stay units mod 3 so every instance reduces into GF(3).
  auto unit = [&] {
    static const std::int64_t kUnits[] = {1, 2, -1, 4};
    return kUnits[pick(0, 3)];
  };
  const Field Q = Field::rationals();
  std::vector<GradedAlgebraObject> out;

  out.push_back(paper_example());

  const Bicharacter z2 = Bicharacter::builtin(BuiltinBicharacter::Z2, Q);
  for (std::size_t d = 1; d <= 4; ++d) {
    std::vector<BasisEntry> basis;
    for (std::size_t i = 0; i < d; ++i)
      basis.push_back({"x" + std::to_string(i + 1), GroupElement{{pick(0, 1)}}});
    GradedAlgebraObject L = skeleton("b.abelian" + std::to_string(d), z2, std::move(basis));
    L.set_op(MultilinearOp::on_space("bracket2", 2, d));
    L.claims = {"LIE_COLOR", "LEIBNIZ2"};
    out.push_back(std::move(L));
  }

  std::vector<GradedAlgebraObject> assoc;
  for (int k = 0; k < 2; ++k) {
    std::vector<int> B = {static_cast<int>(pick(0, 1))};
    std::vector<std::int64_t> f = {1, unit()};
    assoc.push_back(twisted_group_algebra(1, B, f, "c.z2." + std::to_string(k)));
  }
  for (int k = 0; k < 3; ++k) {
    // The first Z2 x Z2 member uses the cocycle whose commutation factor is the builtin sign,
    // which makes it eps-commutative.
    std::vector<int> B = {0, 1, 0, 0};
    if (k > 0)
      for (auto& b : B) b = static_cast<int>(pick(0, 1));
    std::vector<std::int64_t> f = {1, unit(), unit(), unit()};
    assoc.push_back(twisted_group_algebra(2, B, f, "c.z2z2." + std::to_string(k)));
    if (k == 0) assoc.back().claims.push_back("EPS_COMM");
  }
  for (const auto& A : assoc) out.push_back(A);

  for (const auto& A : assoc) {
    GradedAlgebraObject C = from_associative(A, AssocTarget::COMMUTATOR_LIE);
    C.name = "d.commutator." + A.name.substr(2);
    out.push_back(std::move(C));
  }

  GradedAlgebraObject lie2 = nonabelian_lie2();
  GradedAlgebraObject tern = derive_ternary_from_binary(lie2);
  lie2.name = "e.lie2";
  tern.name = "e.lie2.ternary";
  out.push_back(std::move(lie2));
  out.push_back(std::move(tern));

  for (const auto& A : assoc) {
    GradedAlgebraObject T = A;
    T.ops.clear();
    for (const char* op : {"left", "middle", "right"}) T.set_op(A.op("product2").renamed(op));
    T.claims = {"TRIALGEBRA"};
    T.name = "f.trialgebra." + A.name.substr(2);
    out.push_back(std::move(T));
  }

  for (const auto& A : assoc) {
    GradedAlgebraObject D = A;
    D.ops.clear();
    for (const char* op : {"left", "right"}) D.set_op(A.op("product2").renamed(op));
    D.claims = {"DIALGEBRA"};
    GradedAlgebraObject P = from_dialgebra(D);
    P.name = "g.poisson." + A.name.substr(2);
    out.push_back(std::move(P));
  }
  return out;
}

}  // namespace colalg
