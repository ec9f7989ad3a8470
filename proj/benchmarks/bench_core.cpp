#include <benchmark/benchmark.h>

#include <numeric>

#include "rbd/hjcf.hpp"
#include "rbd/lattice.hpp"
#include "rbd/surgery.hpp"

namespace {

void BM_HjExpandEvaluate(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  for (auto _ : state) {
    for (int q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      auto chain = rbd::hj_expand(rbd::CyclicSingularity(p, q));
      benchmark::DoNotOptimize(rbd::hj_evaluate(chain));
    }
  }
}
BENCHMARK(BM_HjExpandEvaluate)->Arg(101)->Arg(997);

void BM_ChainGramMinors(benchmark::State& state) {
  auto chain = rbd::blowdown_chain(state.range(0), 1).chain;
  for (auto _ : state) benchmark::DoNotOptimize(rbd::chain_gram_minors(chain));
}
BENCHMARK(BM_ChainGramMinors)->Arg(30)->Arg(300);

void BM_DenseMinors(benchmark::State& state) {
  auto gram = rbd::chain_gram(rbd::blowdown_chain(state.range(0), 1).chain);
  for (auto _ : state) benchmark::DoNotOptimize(rbd::leading_principal_minors(gram));
}
BENCHMARK(BM_DenseMinors)->Arg(10)->Arg(30);

void BM_SolveSymmetric(benchmark::State& state) {
  auto gram = rbd::chain_gram(rbd::blowdown_chain(state.range(0), 1).chain);
  std::vector<rbd::Rat> rhs(gram.dim());
  rhs[0] = rbd::Rat(-1);
  for (auto _ : state) benchmark::DoNotOptimize(rbd::solve_symmetric(gram, rhs));
}
BENCHMARK(BM_SolveSymmetric)->Arg(10)->Arg(40);

void BM_VerifyCollapsedEn(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(rbd::verify_prop41(n));
}
BENCHMARK(BM_VerifyCollapsedEn)->Arg(5)->Arg(40);

void BM_EnFamily(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(rbd::en_family(n, rbd::EnMode::BothChains));
}
BENCHMARK(BM_EnFamily)->Arg(4)->Arg(50);

}  // namespace

BENCHMARK_MAIN();
