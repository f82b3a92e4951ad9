#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <stdexcept>
#include <vector>

#include "hierbrack/deptree.hpp"

namespace hierbrack {

// Structural arcs of a graph plus, for every auxiliary arc, the structural
// arc it is encoded against.
struct RopeCover {
  std::vector<Arc> structural;       // canonical order
  std::map<Arc, Arc> aux_support;    // auxiliary -> supporting structural

  bool is_structural(const Arc& a) const;
  std::size_t size() const { return structural.size(); }
};

// Literal definitions over an arbitrary arc subset of `g`.
bool is_rope_cover(const DepGraph& g, std::span<const Arc> r);
bool is_proper(const DepGraph& g, std::span<const Arc> r);
bool is_compact(const DepGraph& g, std::span<const Arc> r);

// Every auxiliary arc of `g` has a recorded supporter in the cover, and it
// leans on it.
bool supports_consistent(const DepGraph& g, const RopeCover& r);

// Marking procedure: repeatedly take the longest unmarked arc with the
// leftmost left endpoint (rightward wins a length tie), make it structural,
// and mark every unmarked arc leaning on it as auxiliary. Accepts crossing
// graphs.
RopeCover proper_rope_cover(const DepGraph& g);

// Longest rightward and longest leftward outgoing arc of every node.
RopeCover fourbit_rope_cover(const DepGraph& t);

// All arcs structural.
RopeCover naive_rope_cover(const DepGraph& g);

class CoverSearchTooLarge : public std::length_error {
 public:
  using std::length_error::length_error;
};

inline constexpr std::size_t kMaxBruteForceArcs = 20;

// Smallest rope cover by subset enumeration in increasing cardinality.
// Throws CoverSearchTooLarge above kMaxBruteForceArcs arcs.
std::size_t min_rope_cover_size(const DepGraph& g);

}  // namespace hierbrack
