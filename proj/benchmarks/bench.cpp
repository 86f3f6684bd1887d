#include <benchmark/benchmark.h>

#include <random>

#include "lcd/classify.hpp"
#include "lcd/covers.hpp"
#include "lcd/equivalence.hpp"

namespace {

lcd::BinaryMatrix random_matrix(std::mt19937_64& rng, int rows, int cols) {
  std::vector<std::uint64_t> words(rows);
  for (auto& w : words) w = rng() & lcd::low_mask(cols);
  return lcd::BinaryMatrix(cols, std::move(words));
}

lcd::LinearCode random_code(std::mt19937_64& rng, int n, int k) {
  for (;;) {
    lcd::BinaryMatrix g = random_matrix(rng, k, n);
    if (lcd::rank(g) == k) return lcd::LinearCode(std::move(g));
  }
}

void BM_Rank(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const int n = static_cast<int>(state.range(0));
  const lcd::BinaryMatrix m = random_matrix(rng, n, n);
  for (auto _ : state) benchmark::DoNotOptimize(lcd::rank(m));
}
BENCHMARK(BM_Rank)->Arg(8)->Arg(16)->Arg(64);

void BM_WeightEnumerator(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const lcd::LinearCode c = random_code(rng, 16, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(lcd::weight_enumerator(c));
}
BENCHMARK(BM_WeightEnumerator)->Arg(4)->Arg(8)->Arg(12);

void BM_CanonicalForm(benchmark::State& state) {
  std::mt19937_64 rng(3);
  const int n = static_cast<int>(state.range(0));
  const lcd::LinearCode c = random_code(rng, n, n / 2);
  for (auto _ : state) benchmark::DoNotOptimize(lcd::canonical_key(c));
}
BENCHMARK(BM_CanonicalForm)->Arg(8)->Arg(12)->Arg(16)->Arg(24);

// The simplex code has a large automorphism group; pruning carries it.
void BM_CanonicalFormSimplex(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  std::vector<std::uint64_t> cols;
  for (std::uint64_t v = 1; v < (std::uint64_t{1} << r); ++v) cols.push_back(v);
  const lcd::LinearCode c(lcd::BinaryMatrix::from_columns(r, cols));
  for (auto _ : state) benchmark::DoNotOptimize(lcd::canonical_key(c));
}
BENCHMARK(BM_CanonicalFormSimplex)->Arg(3)->Arg(4)->Arg(5);

void BM_DisorderedCovers(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lcd::count_disordered_covers(m, 3));
}
BENCHMARK(BM_DisorderedCovers)->DenseRange(2, 8, 2);

void BM_Classify(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int k = static_cast<int>(state.range(1));
  const auto strategy = state.range(2) ? lcd::Strategy::OrderedRows : lcd::Strategy::ColumnAugmentation;
  const int d = *lcd::d_formula(n, k);
  for (auto _ : state) benchmark::DoNotOptimize(lcd::classify_lcd(n, k, d, strategy).count);
}
BENCHMARK(BM_Classify)
    ->Args({10, 5, 0})
    ->Args({10, 5, 1})
    ->Args({12, 6, 0})
    ->Args({13, 9, 0})
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
