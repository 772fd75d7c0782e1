#include <benchmark/benchmark.h>

#include "spherex/boundary.hpp"
#include "spherex/dual_group.hpp"
#include "spherex/lfactors.hpp"
#include "spherex/root_data.hpp"

using namespace spherex;

namespace {

// Simply connected root datum of type A_n (SL_{n+1}) in the fundamental-weight basis.
RootDatum type_a(std::size_t n) {
  RootDatum rd;
  rd.rank = n;
  for (std::size_t i = 0; i < n; ++i) {
    IntVec root(n, 0), coroot(n, 0);
    root[i] = 2;
    if (i > 0) root[i - 1] = -1;
    if (i + 1 < n) root[i + 1] = -1;
    coroot[i] = 1;
    rd.simple_roots.push_back(root);
    rd.simple_coroots.push_back(coroot);
    rd.names.push_back("a" + std::to_string(i + 1));
  }
  return rd;
}

SphericalDatum torus_datum(std::size_t r) {
  SphericalDatum d;
  d.g.rank = r;
  d.lambda = identity(r);
  return d;
}

void BM_WeylGeneration(benchmark::State& state) {
  RootDatum rd = type_a(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(generate_weyl(rd).size());
}
BENCHMARK(BM_WeylGeneration)->DenseRange(2, 5);

void BM_EvalAdjoint(benchmark::State& state) {
  std::size_t r = static_cast<std::size_t>(state.range(0));
  GradedWeightMultiset rep;
  for (std::size_t i = 0; i < r; ++i)
    for (Int s : {-1, 1}) {
      IntVec w(r, 0);
      w[i] = 2 * s;
      rep.add(w, 0);
    }
  rep.add(IntVec(r, 0), 0, static_cast<Int>(r));
  auto chi = SatakeParam::formal(r);
  for (auto _ : state) benchmark::DoNotOptimize(eval_L(rep, chi, 2).to_string());
}
BENCHMARK(BM_EvalAdjoint)->DenseRange(1, 4);

void BM_SmoothSubdivision(benchmark::State& state) {
  Int k = state.range(0);
  auto d = torus_datum(2);
  Fan f = make_fan(2, {{{1, 0}, {1, k}}});
  for (auto _ : state) benchmark::DoNotOptimize(smooth_subdivision(d, f).cones.size());
}
BENCHMARK(BM_SmoothSubdivision)->Arg(3)->Arg(7)->Arg(15);

void BM_SmoothSubdivision3(benchmark::State& state) {
  auto d = torus_datum(3);
  Fan f = make_fan(3, {{{1, 0, 0}, {0, 1, 0}, {1, 1, state.range(0)}}});
  for (auto _ : state) benchmark::DoNotOptimize(smooth_subdivision(d, f).cones.size());
}
BENCHMARK(BM_SmoothSubdivision3)->Arg(2)->Arg(5);

}  // namespace
BENCHMARK_MAIN();
