#include "hierbrack/batch.hpp"

#include <omp.h>

#include "hierbrack/pseudoproj.hpp"

namespace hierbrack {

EncodeOutcome encode_one(const DepGraph& t, const BatchConfig& config) {
  EncodeOutcome out;
  try {
    const DepGraph input = config.pseudoprojective ? projectivize(t) : t;
    out.labels = encode(input, config.scheme, {config.max_index, config.lenient});
  } catch (const std::exception& e) {
    out.error = e.what();
  }
  return out;
}

DecodeOutcome decode_one(const LabelSequence& ls, bool deprojectivize_after) {
  DecodeResult r = decode_robust(ls, true);
  DecodeOutcome out{std::move(r.graph), std::move(r.diagnostics), {}};
  if (deprojectivize_after) out.graph = deprojectivize(out.graph, &out.unresolved_lifts);
  return out;
}

std::vector<EncodeOutcome> encode_corpus_serial(std::span<const DepGraph> trees,
                                                const BatchConfig& config) {
  std::vector<EncodeOutcome> out;
  out.reserve(trees.size());
  for (const DepGraph& t : trees) out.push_back(encode_one(t, config));
  return out;
}

std::vector<DecodeOutcome> decode_corpus_serial(std::span<const LabelSequence> seqs,
                                                bool deprojectivize_after) {
  std::vector<DecodeOutcome> out;
  out.reserve(seqs.size());
  for (const LabelSequence& ls : seqs) out.push_back(decode_one(ls, deprojectivize_after));
  return out;
}

namespace {

int thread_count(int jobs) { return jobs > 0 ? jobs : omp_get_max_threads(); }

}  // namespace

std::vector<EncodeOutcome> encode_corpus(std::span<const DepGraph> trees,
                                         const BatchConfig& config, int jobs) {
  std::vector<EncodeOutcome> out(trees.size());
  const auto n = static_cast<std::ptrdiff_t>(trees.size());
#pragma omp parallel for schedule(dynamic, 16) num_threads(thread_count(jobs))
  for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = encode_one(trees[i], config);
  return out;
}

std::vector<DecodeOutcome> decode_corpus(std::span<const LabelSequence> seqs,
                                         bool deprojectivize_after, int jobs) {
  std::vector<DecodeOutcome> out(seqs.size());
  const auto n = static_cast<std::ptrdiff_t>(seqs.size());
#pragma omp parallel for schedule(dynamic, 16) num_threads(thread_count(jobs))
  for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = decode_one(seqs[i], deprojectivize_after);
  return out;
}

}  // namespace hierbrack
