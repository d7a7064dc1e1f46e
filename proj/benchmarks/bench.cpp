#include <benchmark/benchmark.h>

#include "sss/camouflage.hpp"
#include "sss/shortlex.hpp"

using namespace sss;

namespace {

const Presentation& platform() {
  static Presentation p = [] {
    GenerationParams gp;
    Rng rng(7);
    return random_small_cancellation(gp, rng);
  }();
  return p;
}

void BM_GenerateGroup(benchmark::State& state) {
  GenerationParams gp;
  std::uint64_t seed = 0;
  for (auto _ : state) {
    Rng rng(seed++);
    benchmark::DoNotOptimize(random_small_cancellation(gp, rng));
  }
}
BENCHMARK(BM_GenerateGroup)->Unit(benchmark::kMillisecond);

void BM_PadWord(benchmark::State& state) {
  const Presentation& p = platform();
  Rng rng(1);
  Word s = random_reduced_word(p.alphabet_size(), 8, rng);
  for (auto _ : state)
    benchmark::DoNotOptimize(camo::pad_word(s, p, state.range(0), rng));
}
BENCHMARK(BM_PadWord)->Arg(100)->Arg(500)->Unit(benchmark::kMicrosecond);

void BM_DehnReduce(benchmark::State& state) {
  const Presentation& p = platform();
  Rng rng(2);
  Word s = random_reduced_word(p.alphabet_size(), 8, rng);
  Word w = camo::pad_word(s, p, state.range(0), rng);
  for (auto _ : state) benchmark::DoNotOptimize(dehn::dehn_reduce(w, p));
}
BENCHMARK(BM_DehnReduce)->Arg(100)->Arg(500)->Unit(benchmark::kMicrosecond);

void BM_Rank(benchmark::State& state) {
  Rng rng(3);
  Word w = random_reduced_word(40, 10, rng);
  for (auto _ : state) benchmark::DoNotOptimize(shortlex::rank(w));
}
BENCHMARK(BM_Rank);

void BM_Unrank(benchmark::State& state) {
  BigInt idx = shortlex::count_words_up_to(40, 9) - 1;
  for (auto _ : state) benchmark::DoNotOptimize(shortlex::unrank(idx, 40));
}
BENCHMARK(BM_Unrank);

}  // namespace

BENCHMARK_MAIN();
