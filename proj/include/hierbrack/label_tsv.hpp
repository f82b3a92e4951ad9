#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "hierbrack/label_sequence.hpp"

namespace hierbrack {

class LabelTsvError : public std::runtime_error {
 public:
  LabelTsvError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// One sentence of a label file. forms[0] is unused.
struct TaggedSentence {
  std::vector<std::string> forms;
  LabelSequence labels;
};

// Rows "ID<TAB>FORM<TAB>LABEL<TAB>DEPREL", a blank line after each sentence.
// Empty labels and relations are written as "_". With `emit_root_label` a
// row with ID 0 carries the root's label.
void write_label_tsv(std::ostream& out, const std::vector<TaggedSentence>& sentences,
                     bool emit_root_label);

// Accepts an optional ID 0 row per sentence; without one the sentence's
// root label is marked absent.
std::vector<TaggedSentence> read_label_tsv(std::istream& in);

}  // namespace hierbrack
