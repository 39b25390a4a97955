// Serial reference vs OpenMP paths for the identity kernel and the operator search.

#include <benchmark/benchmark.h>

#include "colalg/analysis.hpp"
#include "colalg/constructions.hpp"
#include "colalg/corpus.hpp"
#include "colalg/identities.hpp"

using namespace colalg;

namespace {

// A 16-dimensional ternary algebra: enough 5-tuples (about a million) to split.
const GradedAlgebraObject& big_ternary() {
  static const GradedAlgebraObject T = [] {
    const auto corpus = generate_corpus(1);
    GradedAlgebraObject A, L;
    for (const auto& c : corpus) {
      if (c.name == "c.z2z2.0") A = c;
      if (c.name == "d.commutator.z2z2.1") L = c;
    }
    return tensor_assoc_ternary(A, derive_ternary_from_binary(L), {.verify = false});
  }();
  return T;
}

const GradedAlgebraObject& search_input() {
  // Largest even-map space within 3^12 candidates.
  static const GradedAlgebraObject L = [] {
    GradedAlgebraObject best = paper_example();
    for (const auto& c : generate_corpus(1)) {
      if (!c.has_op("bracket2") && !c.has_op("product2")) continue;
      const auto k = even_entries(c.basis).size();
      if (k <= 12 && k > even_entries(best.basis).size()) best = c;
    }
    return best;
  }();
  return L;
}

void BM_TernaryLeibniz(benchmark::State& state) {
  const bool parallel = state.range(0) != 0;
  const auto& T = big_ternary();
  for (auto _ : state) {
    auto r = check_identity(T, Identity::TERNARY_LEIBNIZ, {.parallel = parallel});
    benchmark::DoNotOptimize(r.violation_count);
  }
  state.SetLabel(parallel ? "openmp" : "serial");
}

void BM_SearchCentroid(benchmark::State& state) {
  SearchConfig cfg;
  cfg.predicate = Predicate::CENTROID2;
  const auto& L = search_input();
  for (auto _ : state) {
    auto r = state.range(0) ? search_operators(L, cfg) : search_operators_serial(L, cfg);
    benchmark::DoNotOptimize(r.matches);
  }
  state.SetLabel(state.range(0) ? "openmp" : "serial");
}

void BM_SearchReference(benchmark::State& state) {
  SearchConfig cfg;
  cfg.predicate = Predicate::NIJENHUIS;
  const auto L = nonabelian_lie2();
  for (auto _ : state) {
    auto r = state.range(0) ? search_operators(L, cfg) : search_operators_reference(L, cfg);
    benchmark::DoNotOptimize(r.matches);
  }
  state.SetLabel(state.range(0) ? "openmp" : "reference");
}

}  // namespace

BENCHMARK(BM_TernaryLeibniz)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SearchCentroid)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SearchReference)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
