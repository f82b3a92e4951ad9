#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hierbrack/deptree.hpp"

namespace hierbrack {

// Malformed CoNLL-U text. `line` is 1-based.
class ConlluParseError : public std::runtime_error {
 public:
  ConlluParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Well-formed lines whose HEAD structure is unusable (out of range, self
// loop). Names the sentence by its sent_id comment or its ordinal.
class ConlluStructureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using ConlluColumns = std::array<std::string, 10>;

// One sentence: comments, token rows, and multiword/empty-node lines kept
// verbatim together with how many token rows precede each of them.
struct Sentence {
  std::vector<std::string> comments;
  std::vector<ConlluColumns> tokens;
  std::vector<std::pair<std::size_t, std::string>> verbatim;
  DepGraph graph;

  std::string id() const;  // sent_id comment value, or empty
};

std::vector<Sentence> read_conllu(std::istream& in);
// HEAD and DEPREL columns are regenerated from each sentence's graph.
void write_conllu(const std::vector<Sentence>& sentences, std::ostream& out);

// Minimal sentence for a bare graph: FORM is "w<k>", HEAD and DEPREL come
// from the graph, other columns are "_".
Sentence make_sentence(const DepGraph& g);
Sentence with_graph(Sentence s, DepGraph g);

std::vector<DepGraph> graphs_of(const std::vector<Sentence>& sentences);

}  // namespace hierbrack
