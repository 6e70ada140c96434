// Serial reference kernels against their OpenMP versions.
#include <benchmark/benchmark.h>

#include "kr/diagram.hpp"
#include "kr/homology.hpp"
#include "kr/matrix.hpp"
#include "kr/reducer.hpp"

namespace {

using namespace kr;

// Explicit form of a chain of wide edges; two rows per edge, so 2^(2 pieces - 1) square blocks.
ExplicitMF wide_chain(int n, int pieces) {
  std::string text = "n " + std::to_string(n) + "\n";
  for (int i = 0; i < pieces; ++i) {
    const int b = 4 * i;
    text += "wide x" + std::to_string(b + 1) + " x" + std::to_string(b + 2) + " x" + std::to_string(b + 3) + " x" +
            std::to_string(b + 4) + "\n";
    if (i > 0) {
      text += "glue x" + std::to_string(b - 1) + " x" + std::to_string(b + 1) + "\n";
      text += "glue x" + std::to_string(b) + " x" + std::to_string(b + 2) + "\n";
    }
  }
  return to_explicit(glue(parse_diagram(text)));
}

void BM_multiply_serial(benchmark::State& state) {
  const ExplicitMF e = wide_chain(4, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(multiply_serial(e.d1, e.d0));
}

void BM_multiply_parallel(benchmark::State& state) {
  const ExplicitMF e = wide_chain(4, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(multiply(e.d1, e.d0));
}

MFSum reduced(int n) { return auto_reduce(glue(parse_diagram("n " + std::to_string(n) + "\ndline d1 d2\nglue d1 d2\n"))).result; }

ExplicitMF theta(int n) {
  const Reduction r = auto_reduce(glue(parse_diagram(
      "n " + std::to_string(n) + "\nvin x1 x2 d1\nvout d2 x3 x4\nglue d1 d2\nglue x3 x1\nglue x4 x2\n")));
  return to_explicit(std::get<KoszulMF>(r.result.summands.front()));
}

void BM_homology_serial(benchmark::State& state) {
  const ExplicitMF e = theta(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(graded_homology_serial(e));
}

void BM_homology_parallel(benchmark::State& state) {
  const ExplicitMF e = theta(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(graded_homology(e));
}

void BM_homology_double_loop(benchmark::State& state) {
  const MFSum s = reduced(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(graded_homology(s));
}

}  // namespace

BENCHMARK(BM_multiply_serial)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_multiply_parallel)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_homology_serial)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_homology_parallel)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_homology_double_loop)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
