// Serial reference vs. OpenMP batch encode/decode over a random corpus.

#include <benchmark/benchmark.h>

#include "hierbrack/batch.hpp"
#include "hierbrack/testkit.hpp"

namespace hb = hierbrack;

namespace {

const std::vector<hb::DepGraph>& corpus() {
  static const std::vector<hb::DepGraph> trees = [] {
    std::vector<hb::DepGraph> out;
    for (std::uint64_t i = 0; i < 2000; ++i)
      out.push_back(hb::random_tree(8 + static_cast<int>(i % 25), i));
    return out;
  }();
  return trees;
}

const std::vector<hb::LabelSequence>& encoded() {
  static const std::vector<hb::LabelSequence> seqs = [] {
    std::vector<hb::LabelSequence> out;
    for (const hb::EncodeOutcome& e : hb::encode_corpus_serial(corpus(), {}))
      out.push_back(*e.labels);
    return out;
  }();
  return seqs;
}

void BM_EncodeSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(hb::encode_corpus_serial(corpus(), {}));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(corpus().size()));
}

void BM_EncodeParallel(benchmark::State& state) {
  const int jobs = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hb::encode_corpus(corpus(), {}, jobs));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(corpus().size()));
}

void BM_DecodeSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(hb::decode_corpus_serial(encoded(), false));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(encoded().size()));
}

void BM_DecodeParallel(benchmark::State& state) {
  const int jobs = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hb::decode_corpus(encoded(), false, jobs));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(encoded().size()));
}

}  // namespace

BENCHMARK(BM_EncodeSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EncodeParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DecodeSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DecodeParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
