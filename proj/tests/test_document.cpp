#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "colalg/constructions.hpp"
#include "colalg/corpus.hpp"
#include "colalg/document.hpp"
#include "colalg/errors.hpp"

#include "oracle.hpp"

using namespace colalg;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<fs::path> fixture_files() {
  std::vector<fs::path> out;
  for (const auto& entry : fs::recursive_directory_iterator(COLALG_FIXTURE_DIR))
    if (entry.path().extension() == ".alg") out.push_back(entry.path());
  std::sort(out.begin(), out.end());
  return out;
}

const char* kMinimal = R"({
  "basis": [{"name": "x", "degree": [0]}, {"name": "y", "degree": [1]}],
  "bicharacter": {"builtin": "Z2"},
  "claims": [],
  "field": {"rationals": true},
  "group": {"free_rank": 0, "torsion": [2]},
  "ops": {}
})";

std::string with_ops(const std::string& ops) {
  std::string doc = kMinimal;
  doc.replace(doc.find("\"ops\": {}"), 9, "\"ops\": " + ops);
  return doc;
}

bool has_float(const nlohmann::json& j) {
  if (j.is_number_float()) return true;
  if (j.is_structured())
    for (const auto& v : j)
      if (has_float(v)) return true;
  return false;
}

bool has_float(const std::string& text) { return has_float(nlohmann::json::parse(text)); }

}  // namespace

TEST(Document, EveryFixtureRoundTripsByteIdentically) {
  const auto files = fixture_files();
  ASSERT_GE(files.size(), 3u);
  for (const auto& f : files) {
    const std::string text = slurp(f);
    EXPECT_EQ(serialize_algebra(parse_algebra(text)), text) << f;
  }
}

TEST(Document, ExampleFixtureContents) {
  const auto L = read_algebra_file(std::string(COLALG_FIXTURE_DIR) + "/paper_example.alg");
  EXPECT_EQ(L.dim(), 3u);
  const auto& B = L.op("bracket2");
  EXPECT_EQ(B.nonzero_count(), 1u);
  EXPECT_EQ(B(GradedElement::basis(1), GradedElement::basis(1)), GradedElement::basis(0));
}

TEST(Document, CorpusMemberAMatchesFixture) {
  EXPECT_EQ(serialize_algebra(generate_corpus(1).front()),
            slurp(std::string(COLALG_FIXTURE_DIR) + "/paper_example.alg"));
}

TEST(Document, EmptyOps) {
  const auto A = parse_algebra(kMinimal);
  EXPECT_TRUE(A.ops.empty());
  EXPECT_EQ(A.dim(), 2u);
  EXPECT_EQ(parse_algebra(serialize_algebra(A)), A);
}

TEST(Document, ZeroDenominatorNamesEntry) {
  try {
    parse_algebra(with_ops(R"({"bracket2": [{"args": [0, 0], "out": 0, "coef": "1"},
                                          {"args": [1, 1], "out": 0, "coef": "1/0"}]})"));
    FAIL();
  } catch (const InputError& err) {
    EXPECT_NE(std::string(err.what()).find("ops.bracket2[1].coef"), std::string::npos) << err.what();
  }
}

TEST(Document, RejectsMalformedInputs) {
  // float coefficient, bad index, grading violation, wrong degree length, unknown key, non-reduced
  EXPECT_THROW(parse_algebra(with_ops(R"({"bracket2": [{"args": [0, 0], "out": 0, "coef": 0.5}]})")), InputError);
  EXPECT_THROW(parse_algebra(with_ops(R"({"bracket2": [{"args": [0, 2], "out": 0, "coef": "1"}]})")), InputError);
  EXPECT_THROW(parse_algebra(with_ops(R"({"bracket2": [{"args": [0, 0], "out": 1, "coef": "1"}]})")), InputError);
  EXPECT_THROW(parse_algebra(with_ops(R"({"bracket2": [{"args": [0, 0], "out": 0, "coef": "2/4"}]})")), InputError);
  EXPECT_THROW(parse_algebra(with_ops(R"({"bogus": []})")), InputError);
  std::string bad_degree = kMinimal;
  bad_degree.replace(bad_degree.find("[1]"), 3, "[1, 0]");
  EXPECT_THROW(parse_algebra(bad_degree), InputError);
  EXPECT_THROW(parse_algebra("{"), InputError);
}

TEST(Document, PrimeFieldRecorded) {
  const auto R = reduce_mod(paper_example(), 3);
  const std::string text = serialize_algebra(R);
  EXPECT_NE(text.find("\"prime\": 3"), std::string::npos);
  EXPECT_EQ(parse_algebra(text), R);
}

TEST(Document, CanonicalizationSortsConstants) {
  const auto A = parse_algebra(with_ops(R"({"bracket2": [{"args": [1, 1], "out": 0, "coef": "1"},
                                                       {"args": [0, 0], "out": 0, "coef": "-3/2"}]})"));
  const std::string text = serialize_algebra(A);
  EXPECT_LT(text.find("-3/2"), text.find("\"coef\": \"1\""));
  EXPECT_EQ(serialize_algebra(parse_algebra(text)), text);
}

TEST(Document, DirectSumNamesInOrder) {
  const auto S = direct_sum(paper_example(), paper_example(), SumKind::BINARY);
  const std::string text = serialize_algebra(S);
  std::size_t last = 0;
  for (const char* n : {"a.e1", "a.e2", "a.e3", "b.e1", "b.e2", "b.e3"}) {
    const auto at = text.find(std::string("\"") + n + "\"");
    ASSERT_NE(at, std::string::npos) << n;
    EXPECT_GT(at, last) << n;
    last = at;
  }
  EXPECT_EQ(serialize_algebra(parse_algebra(text)), text);
}

TEST(Document, ModuleBlockAndMapsRoundTrip) {
  auto doc = with_module(bimodule_adjoint(derive_ternary_from_binary(nonabelian_lie2())));
  doc.maps["half"] = EvenLinearMap::homothety(2, Scalar(mpq_class(1, 2)));
  const std::string text = serialize_algebra(doc);
  EXPECT_EQ(parse_algebra(text), doc);
  EXPECT_EQ(serialize_algebra(parse_algebra(text)), text);
}

TEST(Document, NoFloatingPointInCorpus) {
  for (const auto& A : generate_corpus(5)) {
    const std::string text = serialize_algebra(A);
    EXPECT_FALSE(has_float(text)) << A.name;
    EXPECT_EQ(serialize_algebra(parse_algebra(text)), text) << A.name;
  }
}
