#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "hierbrack/deptree.hpp"

namespace hierbrack {

// Separator between a lifted token's own relation and the relation of the
// head it was lifted from: "obj↑xcomp".
inline constexpr std::string_view kLiftMarker = "↑";

struct LiftAnnotation {
  std::string original;     // relation before lifting
  std::string head_deprel;  // relation of the former head; empty if not lifted
  bool lifted = false;
};

LiftAnnotation parse_lift(std::string_view deprel);
std::string format_lift(const LiftAnnotation& a);

// Lifts the shortest non-projective arc (leftmost on ties) to the head's
// head until the tree is projective. A token lifted more than once keeps its
// first annotation. `lifts` receives the number of lift steps.
DepGraph projectivize(const DepGraph& t, std::size_t* lifts = nullptr);

// Moves every annotated token, top-down, to the nearest descendant of its
// current head (breadth-first, left to right, outside its own subtree)
// whose relation matches the annotation. Unresolved annotations are
// stripped and described in `unresolved`.
DepGraph deprojectivize(const DepGraph& t, std::vector<std::string>* unresolved = nullptr);

}  // namespace hierbrack
