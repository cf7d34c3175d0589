#include <benchmark/benchmark.h>

#include "symgraph/checks.hpp"
#include "symgraph/constructions.hpp"
#include "symgraph/dims.hpp"
#include "symgraph/elementary.hpp"
#include "symgraph/symmetrize.hpp"

using namespace symgraph;

static void BM_SymmetrizeQuintic(benchmark::State& state) {
  const ExactPoly f = graph_monomial(quintic_example(1));
  SymmetrizeOptions o;
  o.threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(symmetrize_full(f, o));
}
BENCHMARK(BM_SymmetrizeQuintic)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

static void BM_SymmEvalModN9(benchmark::State& state) {
  const EdgeMatrix m = thm2_bordered(quintic_example(1)).matrix;
  const PrimeModulus mod = auto_modulus(0);
  const auto pt = witness_point(m.size(), 0, 0);
  for (auto _ : state) benchmark::DoNotOptimize(symm_eval_mod(m, pt, mod));
}
BENCHMARK(BM_SymmEvalModN9)->Unit(benchmark::kMillisecond);

static void BM_SemidimN15(benchmark::State& state) {
  const std::int64_t w = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(semidim(w, static_cast<std::size_t>(w - 71), 15));
}
BENCHMARK(BM_SemidimN15)->Arg(95)->Arg(145);

static void BM_ToElementary(benchmark::State& state) {
  const ExactPoly f = symmetrize_full(graph_monomial(sextic_example(1)));
  for (auto _ : state) benchmark::DoNotOptimize(to_elementary(f));
}
BENCHMARK(BM_ToElementary)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
