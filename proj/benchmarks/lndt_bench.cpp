#include <benchmark/benchmark.h>

#include <random>

#include "lndt/checker.hpp"
#include "lndt/corpus.hpp"
#include "lndt/generators.hpp"
#include "lndt/nbp.hpp"
#include "lndt/php.hpp"
#include "lndt/search.hpp"
#include "lndt/sim.hpp"

using namespace lndt;

namespace {

Word iota(int n) {
  Word w;
  for (int i = 1; i <= n; ++i) w.push_back(static_cast<Var>(i));
  return w;
}

void BM_GenPhp(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  std::uint64_t tokens = 0;
  for (auto _ : state) {
    Proof p = gen_php(n);
    tokens = proof_size(p);
    benchmark::DoNotOptimize(tokens);
  }
  state.counters["tokens"] = static_cast<double>(tokens);
}
BENCHMARK(BM_GenPhp)->DenseRange(1, 5)->Unit(benchmark::kMillisecond);

void BM_CheckPhp(benchmark::State& state) {
  Proof p = gen_php(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(check_proof(p).ok);
  state.counters["lines/s"] = benchmark::Counter(static_cast<double>(p.lines.size()), benchmark::Counter::kIsIterationInvariantRate);
}
BENCHMARK(BM_CheckPhp)->DenseRange(1, 5)->Unit(benchmark::kMillisecond);

void BM_Symmetry(benchmark::State& state) {
  Word w = iota(static_cast<int>(state.range(0)));
  Word rev(w.rbegin(), w.rend());
  for (auto _ : state) benchmark::DoNotOptimize(gen_symmetry(w, rev, static_cast<int>(w.size()) / 2));
}
BENCHMARK(BM_Symmetry)->DenseRange(2, 12, 2)->Unit(benchmark::kMillisecond);

void BM_Merge(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Word w = iota(2 * n);
  Word pv(w.begin(), w.begin() + n), qv(w.begin() + n, w.end());
  for (auto _ : state) benchmark::DoNotOptimize(gen_merge(pv, qv, n / 2, n / 2));
}
BENCHMARK(BM_Merge)->DenseRange(1, 8)->Unit(benchmark::kMillisecond);

void BM_Search(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::vector<Sequent> ss;
  for (int i = 0; i < 64; ++i) ss.push_back(random_valid_sequent(rng, {0, 1, 2, 3}, static_cast<int>(state.range(0))));
  for (auto _ : state)
    for (const Sequent& s : ss) benchmark::DoNotOptimize(prove_by_search(s, {}).proof.has_value());
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(ss.size()));
}
BENCHMARK(BM_Search)->DenseRange(1, 3);

void BM_Simulate(benchmark::State& state) {
  CorpusOptions opt;
  opt.count = 8;
  opt.seed = 3;
  opt.max_vars = static_cast<int>(state.range(0));
  auto corpus = make_corpus(opt);
  for (auto _ : state)
    for (const CorpusEntry& e : corpus) benchmark::DoNotOptimize(proof_size(simulate(e.proof)));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(corpus.size()));
}
BENCHMARK(BM_Simulate)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

void BM_ClosureTable(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Nbp g = build_exact_obdd(n, n / 2);
  for (auto _ : state) benchmark::DoNotOptimize(nbp_truth_table(positive_closure(g), iota(n)));
}
BENCHMARK(BM_ClosureTable)->DenseRange(4, 16, 4);

}  // namespace

BENCHMARK_MAIN();
