#include <benchmark/benchmark.h>

#include <oinv/analysis.hpp>
#include <oinv/eval.hpp>
#include <oinv/expansion.hpp>
#include <oinv/expr.hpp>
#include <oinv/io.hpp>
#include <oinv/matrix.hpp>
#include <oinv/quiver.hpp>
#include <oinv/word.hpp>

#include <random>
#include <vector>

using namespace oinv;

namespace {
const FieldDesc Q = FieldDesc::rationals();

Word random_word(std::mt19937_64& rng, int d, int len) {
  std::vector<Letter> ls;
  for (int i = 0; i < len; ++i)
    ls.push_back({1 + static_cast<int>(rng() % static_cast<unsigned>(d)),
                  (rng() % 2) != 0});
  return Word(std::move(ls));
}
}  // namespace

static void BM_Canonical(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::vector<Word> words;
  for (int i = 0; i < 256; ++i)
    words.push_back(random_word(rng, 2, static_cast<int>(state.range(0))));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(canonical(words[i++ & 255]));
  }
}
BENCHMARK(BM_Canonical)->Arg(4)->Arg(8)->Arg(16);

static void BM_EnumerateClasses(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_classes(2, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_EnumerateClasses)->Arg(6)->Arg(8);

static void BM_Normalize(benchmark::State& state) {
  auto expr = parse_expr("s3(x1+2*x2-x1 x2')", Q);
  for (auto _ : state) {
    benchmark::DoNotOptimize(normalize(expr));
  }
}
BENCHMARK(BM_Normalize);

static void BM_PowerExpandCold(benchmark::State& state) {
  // The cache makes repeated calls free, so measure a fresh (t, l) pattern
  // through the uncached amitsur path instead: expansion of s_t over p parts.
  for (auto _ : state) {
    benchmark::DoNotOptimize(amitsur_expand(static_cast<int>(state.range(0)), 3));
  }
}
BENCHMARK(BM_PowerExpandCold)->Arg(3)->Arg(5);

static void BM_CharCoeffs(benchmark::State& state) {
  auto tuple = random_tuple(static_cast<int>(state.range(0)), 1, Q, 7, 9);
  const Matrix& a = tuple.matrices.front();
  for (auto _ : state) {
    benchmark::DoNotOptimize(char_coeffs(a));
  }
}
BENCHMARK(BM_CharCoeffs)->Arg(3)->Arg(6)->Arg(10);

static void BM_SigmaTrSubstitute(benchmark::State& state) {
  auto a = parse_word_sum("x1", Q);
  auto b = parse_word_sum("x2", Q);
  auto c = parse_word_sum("x2'", Q);
  const auto& poly = sigma_tr(2, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(substitute(poly, a, b, c));
  }
}
BENCHMARK(BM_SigmaTrSubstitute);

static void BM_VerifyRelation(benchmark::State& state) {
  auto a = parse_word_sum("x1", Q);
  auto b = parse_word_sum("x2", Q);
  auto c = parse_word_sum("x2'", Q);
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_relation(1, 1, a, b, c, 2, 5, 11));
  }
}
BENCHMARK(BM_VerifyRelation);

static void BM_Analyze(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(analyze(2, 1, static_cast<int>(state.range(0)), 0, Q, 3));
  }
}
BENCHMARK(BM_Analyze)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
