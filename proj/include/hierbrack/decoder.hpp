#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hierbrack/deptree.hpp"
#include "hierbrack/label_sequence.hpp"

namespace hierbrack {

enum class DecodeAction {
  kUnmatchedCloser,       // closing bracket found nothing to match
  kMismatchedSuper,       // '>*' met '<*' (or vice versa) in the plain decoder
  kClampedIndex,          // semibracket index beyond the available superbrackets
  kIgnoredIndex,          // index in input to the plain decoder
  kLeftoverOpener,        // opening bracket never closed
  kSelfLoop,
  kArcIntoRoot,
  kDuplicateArc,
  kSecondHead,            // tree mode: dependent already has a head
  kCycle,                 // tree mode: arc would close a cycle
  kAttachedToRoot,        // tree mode: headless node attached afterwards
};

std::string_view to_string(DecodeAction a);

struct Diagnostic {
  int position = 0;
  std::string symbol;  // text of the symbol, empty for attachments
  DecodeAction action = DecodeAction::kUnmatchedCloser;
  std::string detail;
};

// "position<TAB>symbol<TAB>action[<TAB>detail]"
std::string format_diagnostic(const Diagnostic& d);

// Stack instrumentation. Pushes are counted apart from the accesses that
// retrieve or re-insert entries. Skipping a superbracket of the wrong shape
// inside a sweep is part of the conditional Remove and costs nothing.
struct StackStats {
  std::size_t symbols_read = 0;
  std::size_t pushes = 0;
  std::size_t peeks = 0;         // successful closing semibracket lookups
  std::size_t match_pops = 0;    // superbracket removed by its closer
  std::size_t sweep_pops = 0;    // opening semibrackets completed by a sweep
  std::size_t reinsertions = 0;  // Remove + Put of a skipped indexed entry
  std::size_t failed_pops = 0;   // closer found nothing
  std::size_t max_super_depth = 0;

  std::size_t accesses() const {
    return peeks + match_pops + sweep_pops + 2 * reinsertions + failed_pops;
  }
};

struct DecodeResult {
  DepGraph graph;
  std::vector<Diagnostic> diagnostics;
  StackStats stats;
  int root_brackets = 0;  // root label size when it was reconstructed

  std::size_t symbol_diagnostics() const;
  std::size_t attachments() const;
};

// Single-stack decoding for noncrossing graphs. Closing semibrackets look
// through opening semibrackets to the nearest superbracket; closing
// superbrackets pop semibrackets (creating their arcs) down to the first
// superbracket.
DecodeResult decode_noncrossing(const LabelSequence& ls);

// Indexed decoding for graphs with crossing arcs.
DecodeResult decode_indexed(const LabelSequence& ls);

// decode_indexed plus, when `want_tree`, single-head and acyclicity checks
// at arc insertion and attachment of headless nodes to the syntactic root.
DecodeResult decode_robust(const LabelSequence& ls, bool want_tree);

}  // namespace hierbrack
