#include <benchmark/benchmark.h>

#include "zetashuffle/closed_form.hpp"
#include "zetashuffle/mzv.hpp"
#include "zetashuffle/restricted.hpp"
#include "zetashuffle/shuffle.hpp"

namespace zs = zetashuffle;

namespace {

// xyxy... of the given length.
zs::Word alternating(int len) {
  std::string text;
  for (int i = 0; i < len; ++i) text += (i % 2 == 0) ? 'x' : 'y';
  return zs::parse_word(text);
}

void BM_ShuffleRecursive(benchmark::State& state) {
  const zs::Word u = alternating(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(zs::shuffle_recursive(u, u));
}
BENCHMARK(BM_ShuffleRecursive)->DenseRange(4, 12, 4);

void BM_ShufflePermutation(benchmark::State& state) {
  const zs::Word u = alternating(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(zs::shuffle_permutation(u, u));
}
BENCHMARK(BM_ShufflePermutation)->DenseRange(4, 10, 2);

void BM_ExpandGeneral(benchmark::State& state) {
  const zs::ExponentForm e = zs::to_exponent_form(alternating(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(zs::expand_general(e, e));
}
BENCHMARK(BM_ExpandGeneral)->DenseRange(4, 8, 2);

void BM_ExpandRes22(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const zs::Res22Params p{n, n, n, n, n, n, n, n};
  for (auto _ : state) benchmark::DoNotOptimize(zs::expand_res_2_2(p));
}
BENCHMARK(BM_ExpandRes22)->DenseRange(1, 2);

void BM_MzvEval(benchmark::State& state) {
  const zs::MzvIndex idx({3, 1, 2});
  for (auto _ : state) benchmark::DoNotOptimize(zs::mzv_eval(idx, state.range(0)));
}
BENCHMARK(BM_MzvEval)->Arg(1'000)->Arg(20'000)->Arg(200'000);

}  // namespace

BENCHMARK_MAIN();
