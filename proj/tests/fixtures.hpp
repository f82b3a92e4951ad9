#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "hierbrack/deptree.hpp"
#include "hierbrack/label_sequence.hpp"

namespace hierbrack::fixtures {

// Seven-token projective tree with two root dependents.
inline DepGraph small_projective() {
  return DepGraph(7, {{0, 4}, {0, 1}, {4, 2}, {4, 3}, {4, 7}, {7, 6}, {6, 5}});
}

// Eight-token tree with crossing arcs 2->7, 3->8 and 6->3, 7->4.
inline DepGraph crossing_eight() {
  return DepGraph(8, {{0, 6}, {0, 2}, {6, 1}, {6, 3}, {2, 7}, {3, 8}, {7, 4}, {8, 5}});
}

// Thirteen-token tree whose indexed encoding needs an opening semibracket
// index and a leftward structural arc.
inline DepGraph crossing_thirteen() {
  return DepGraph(13, {{0, 6}, {2, 7}, {3, 8}, {8, 12}, {13, 9}, {0, 2}, {6, 1}, {6, 3},
                       {7, 4}, {8, 5}, {8, 10}, {8, 11}, {10, 13}});
}

// Space-separated label texts for positions 0..n; "-" is an empty label.
inline LabelSequence labels(const std::string& text) {
  LabelSequence ls;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) ls.labels.push_back(parse_label(tok == "-" ? "" : tok));
  ls.deprels.resize(ls.labels.size());
  return ls;
}

inline std::vector<std::string> texts(const LabelSequence& ls) {
  std::vector<std::string> out;
  for (const Label& l : ls.labels) out.push_back(render_label(l));
  return out;
}

inline std::vector<std::string> split(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

inline DepGraph unlabeled(const DepGraph& g) { return g.with_deprels({}); }

}  // namespace hierbrack::fixtures
