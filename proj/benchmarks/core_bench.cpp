#include <benchmark/benchmark.h>

#include "kflag/verify.hpp"

using namespace kflag;

static void BM_AllElementsA3(benchmark::State& state) {
  RootSystem rs("A3");
  for (auto _ : state) benchmark::DoNotOptimize(all_elements(rs));
}
BENCHMARK(BM_AllElementsA3);

static void BM_SubwordExpansionA3(benchmark::State& state) {
  RootSystem rs("A3");
  Word w0_word = longest_element(rs).canonical_word();
  for (auto _ : state) benchmark::DoNotOptimize(r_element(rs, w0_word));
}
BENCHMARK(BM_SubwordExpansionA3);

static void BM_BasisValueA3(benchmark::State& state) {
  RootSystem rs("A3");
  auto w = element_from_word(rs, {3, 2});
  Word word{2, 3, 2, 1, 2};
  for (auto _ : state) benchmark::DoNotOptimize(psi(rs, w, word));
}
BENCHMARK(BM_BasisValueA3);

static void BM_ExactDiv(benchmark::State& state) {
  RootSystem rs("B2");
  auto denom = weyl_denominator(rs);
  auto w0 = longest_element(rs);
  auto diag = psi(rs, w0, w0.canonical_word());
  auto product = denom * diag;
  for (auto _ : state) benchmark::DoNotOptimize(exact_div(product, diag));
}
BENCHMARK(BM_ExactDiv);

static void BM_EulerCharB2(benchmark::State& state) {
  RootSystem rs("B2");
  Word word{1, 2, 1, 2};
  auto cube = all_epsilons(4);
  BSFn f;
  for (const auto& eps : cube) f.values.emplace(eps, LaurentPoly::one(2));
  auto top = Epsilon::ones(4);
  for (auto _ : state) benchmark::DoNotOptimize(euler_char(rs, word, top, f));
}
BENCHMARK(BM_EulerCharB2);

static void BM_SheafCoefficientB2(benchmark::State& state) {
  RootSystem rs("B2");
  Word word = longest_element(rs).canonical_word();
  for (auto _ : state) benchmark::DoNotOptimize(b_coeff(rs, word));
}
BENCHMARK(BM_SheafCoefficientB2);

static void BM_SheafExpansionB2(benchmark::State& state) {
  RootSystem rs("B2");
  auto w0 = longest_element(rs);
  for (auto _ : state) benchmark::DoNotOptimize(expand_sigma(rs, w0));
}
BENCHMARK(BM_SheafExpansionB2);

static void BM_BasisAxiomsA2(benchmark::State& state) {
  RootSystem rs("A2");
  for (auto _ : state) benchmark::DoNotOptimize(verify_psi_axioms(rs));
}
BENCHMARK(BM_BasisAxiomsA2);

BENCHMARK_MAIN();
