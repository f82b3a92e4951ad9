#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <span>
#include <stdexcept>
#include <string>

#include "hierbrack/batch.hpp"
#include "hierbrack/deptree.hpp"
#include "hierbrack/encoder.hpp"

namespace hierbrack {

struct Score {
  double uas = 1.0, las = 1.0, um = 1.0, lm = 1.0;
  std::size_t tokens = 0, sentences = 0;
};

// Raw counts behind a Score; sums over sentences.
struct ScoreCounts {
  std::size_t tokens = 0, heads = 0, labeled = 0;
  std::size_t sentences = 0, unlabeled_match = 0, labeled_match = 0;

  void add(const DepGraph& gold, const DepGraph& pred);
  ScoreCounts& operator+=(const ScoreCounts& o);
  Score finish() const;
};

class ScoreMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Punctuation counts like any other token. Empty input scores 1.0.
Score score(std::span<const DepGraph> gold, std::span<const DepGraph> pred);

// Configuration of the encode, decode and (optionally) lift/restore pipeline.
struct PipelineConfig {
  Scheme scheme = Scheme::kOptimalNonprojective;
  bool pseudoprojective = false;
  int jobs = 0;
};

// Encodes every tree (projective schemes encode crossing trees anyway),
// drops the root label, decodes into a tree and scores against the input.
Score theoretical_coverage(std::span<const DepGraph> treebank, const PipelineConfig& config);

// As theoretical_coverage, except that labels and relations missing from
// the training encodings become the most frequent training label/relation.
Score empirical_coverage(std::span<const DepGraph> train, std::span<const DepGraph> eval,
                         const PipelineConfig& config);

struct EncodingStats {
  std::size_t trees = 0;    // trees encoded
  std::size_t skipped = 0;  // crossing trees under a projective scheme
  std::size_t distinct_labels = 0;
  std::map<std::string, std::size_t> label_counts;  // tokens 1..n only
  // Trees whose largest index is 0, 1, 2, >= 3 (counts and percentages).
  std::array<std::size_t, 4> index_trees{};
  std::array<double, 4> index_histogram{};
  int rope_thickness_max = 0;
};

EncodingStats encoding_stats(std::span<const DepGraph> treebank, const PipelineConfig& config);

// Largest number of proper-cover structural arcs spanning one gap between
// adjacent nodes.
int rope_thickness(const DepGraph& t);

}  // namespace hierbrack
