#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "hierbrack/brackets.hpp"

namespace hierbrack {

// One label (and relation) per node position 0..n. Position 0 is the dummy
// root; when `has_root_label` is false its label is not part of the
// sequence and decoders reconstruct it.
struct LabelSequence {
  std::vector<Label> labels;
  std::vector<std::string> deprels;
  bool has_root_label = true;

  // Sequence for n tokens with empty labels and relations.
  static LabelSequence empty(int n);

  int size() const { return labels.empty() ? 0 : static_cast<int>(labels.size()) - 1; }
  std::size_t symbol_count() const;
  std::uint32_t max_index() const;
  LabelSequence without_root_label() const;

  friend bool operator==(const LabelSequence&, const LabelSequence&) = default;
};

// Space-separated label texts for positions 0..n (root omitted when absent).
std::string render(const LabelSequence& ls);

}  // namespace hierbrack
