#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hierbrack/decoder.hpp"
#include "hierbrack/encoder.hpp"

namespace hierbrack {

struct BatchConfig {
  Scheme scheme = Scheme::kOptimalNonprojective;
  bool pseudoprojective = false;  // projectivize before encoding
  std::optional<std::uint32_t> max_index;
  bool lenient = false;           // see EncodeOptions::lenient
};

struct EncodeOutcome {
  std::optional<LabelSequence> labels;
  std::string error;  // set when labels is empty
};

struct DecodeOutcome {
  DepGraph graph;
  std::vector<Diagnostic> diagnostics;
  std::vector<std::string> unresolved_lifts;
};

EncodeOutcome encode_one(const DepGraph& t, const BatchConfig& config);
DecodeOutcome decode_one(const LabelSequence& ls, bool deprojectivize_after);

// Reference implementations, one sentence after another.
std::vector<EncodeOutcome> encode_corpus_serial(std::span<const DepGraph> trees,
                                                const BatchConfig& config);
std::vector<DecodeOutcome> decode_corpus_serial(std::span<const LabelSequence> seqs,
                                                bool deprojectivize_after);

// Same results, sentences spread over `jobs` OpenMP threads (0 = runtime
// default). Output order follows input order.
std::vector<EncodeOutcome> encode_corpus(std::span<const DepGraph> trees,
                                         const BatchConfig& config, int jobs = 0);
std::vector<DecodeOutcome> decode_corpus(std::span<const LabelSequence> seqs,
                                         bool deprojectivize_after, int jobs = 0);

}  // namespace hierbrack
