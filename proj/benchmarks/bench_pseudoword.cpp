// Micro-benchmarks for the hot paths: prefix generation, normalization,
// the periodicity decision, and the factor-complexity oracle.
#include <benchmark/benchmark.h>

#include "pseudoword/bisequence.hpp"
#include "pseudoword/closure.hpp"
#include "pseudoword/normalize.hpp"
#include "pseudoword/oracle.hpp"
#include "pseudoword/periodicity.hpp"

namespace {

using namespace pseudoword;

DirectiveBiSequence make_bi(const std::string& alphabetText, const std::string& deltaText,
                            const std::string& thetaText) {
  Alphabet a = parse_alphabet(alphabetText);
  AntimorphismRegistry reg = builtin_registry(a);
  return DirectiveBiSequence(a, parse_letter_track(deltaText, a),
                             parse_antimorphism_track(thetaText, reg));
}

void BM_WordPrefix_BinaryAperiodic(benchmark::State& state) {
  DirectiveBiSequence bi = make_bi("2", "(01)", "(E)");
  const std::size_t len = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(word_prefix(bi, len));
  }
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations()) * len);
}
BENCHMARK(BM_WordPrefix_BinaryAperiodic)->Arg(1000)->Arg(10000)->Arg(100000);

void BM_WordPrefix_TernaryAperiodic(benchmark::State& state) {
  DirectiveBiSequence bi = make_bi("3", "(01)", "(R E1)");
  const std::size_t len = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(word_prefix(bi, len));
  }
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations()) * len);
}
BENCHMARK(BM_WordPrefix_TernaryAperiodic)->Arg(1000)->Arg(10000)->Arg(100000);

void BM_NormalizeBinary(benchmark::State& state) {
  DirectiveBiSequence bi = make_bi("2", "01(0110)", "EE(ERRE)");
  for (auto _ : state) {
    benchmark::DoNotOptimize(normalize_binary(bi));
  }
}
BENCHMARK(BM_NormalizeBinary);

void BM_TernaryExhaustRewrites(benchmark::State& state) {
  DirectiveBiSequence bi = make_bi("3", "0(211)", "(R E0 E0)");
  for (auto _ : state) {
    benchmark::DoNotOptimize(ternary_exhaust_rewrites(bi));
  }
}
BENCHMARK(BM_TernaryExhaustRewrites);

void BM_Decide_Binary(benchmark::State& state) {
  DirectiveBiSequence bi = make_bi("2", "(011)", "(EER)");
  for (auto _ : state) {
    benchmark::DoNotOptimize(decide(bi));
  }
}
BENCHMARK(BM_Decide_Binary);

void BM_Decide_Ternary(benchmark::State& state) {
  DirectiveBiSequence bi = make_bi("3", "(102)", "(E2 E0 E1)");
  for (auto _ : state) {
    benchmark::DoNotOptimize(decide(bi));
  }
}
BENCHMARK(BM_Decide_Ternary);

void BM_FactorProfile(benchmark::State& state) {
  DirectiveBiSequence bi = make_bi("3", "(01)", "(R E1)");
  Word w = word_prefix(bi, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(factor_profile(w, 50));
  }
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations()) * state.range(0));
}
BENCHMARK(BM_FactorProfile)->Arg(2000)->Arg(20000);

void BM_ClassifyEmpirically(benchmark::State& state) {
  DirectiveBiSequence bi = make_bi("2", "(011)", "(EER)");
  for (auto _ : state) {
    benchmark::DoNotOptimize(classify_empirically(bi, 2000, 200));
  }
}
BENCHMARK(BM_ClassifyEmpirically);

}  // namespace

BENCHMARK_MAIN();
