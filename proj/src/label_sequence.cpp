#include "hierbrack/label_sequence.hpp"

#include <algorithm>

namespace hierbrack {

LabelSequence LabelSequence::empty(int n) {
  LabelSequence ls;
  ls.labels.resize(static_cast<std::size_t>(n) + 1);
  ls.deprels.resize(static_cast<std::size_t>(n) + 1);
  return ls;
}

std::size_t LabelSequence::symbol_count() const {
  std::size_t count = 0;
  for (std::size_t p = has_root_label ? 0 : 1; p < labels.size(); ++p)
    count += labels[p].size();
  return count;
}

std::uint32_t LabelSequence::max_index() const {
  std::uint32_t m = 0;
  for (const Label& l : labels) m = std::max(m, l.max_index());
  return m;
}

LabelSequence LabelSequence::without_root_label() const {
  LabelSequence out = *this;
  if (!out.labels.empty()) out.labels[0] = Label{};
  out.has_root_label = false;
  return out;
}

std::string render(const LabelSequence& ls) {
  std::string out;
  const std::size_t first = ls.has_root_label ? 0 : 1;
  for (std::size_t p = first; p < ls.labels.size(); ++p) {
    if (p > first) out += ' ';
    out += render_label(ls.labels[p]);
  }
  return out;
}

}  // namespace hierbrack
