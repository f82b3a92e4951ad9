#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hierbrack {

// Node 0 is the dummy root; tokens are 1..n.
using NodeId = int;

struct Arc {
  NodeId head = 0;
  NodeId dep = 0;

  NodeId left() const { return std::min(head, dep); }
  NodeId right() const { return std::max(head, dep); }
  int length() const { return right() - left(); }
  bool rightward() const { return head < dep; }

  friend bool operator==(const Arc&, const Arc&) = default;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

std::string to_string(const Arc& a);

// Interleaved endpoints. Symmetric.
bool crosses(const Arc& a, const Arc& b);
// min(a) <= min(b) < max(b) <= max(a). Every arc covers itself.
bool covers(const Arc& a, const Arc& b);
// `b` leans on `a` (equivalently `a` supports `b`): `a` covers `b`, they
// share the left or the right endpoint, and they are different arcs.
bool leans_on(const Arc& b, const Arc& a);

// Canonical iteration order: by left endpoint, then longer first, then
// rightward before leftward.
bool canonical_less(const Arc& a, const Arc& b);

// A dependency graph over nodes 0..n. Arcs are stored in canonical order,
// each with an optional relation string (empty when absent). Immutable
// after construction.
class DepGraph {
 public:
  DepGraph() = default;
  explicit DepGraph(int n) : n_(n) {}
  // Throws std::invalid_argument on out-of-range nodes, self loops, arcs
  // into node 0, duplicate arcs, or a deprel vector of the wrong size.
  DepGraph(int n, std::vector<Arc> arcs, std::vector<std::string> deprels = {});

  // heads[k] is the head of token k + 1; a negative entry means "no head".
  static DepGraph from_heads(std::span<const NodeId> heads,
                             std::span<const std::string> deprels = {});

  int size() const { return n_; }
  std::span<const Arc> arcs() const { return arcs_; }
  std::size_t arc_count() const { return arcs_.size(); }
  bool empty() const { return arcs_.empty(); }

  std::optional<std::size_t> find(const Arc& a) const;
  bool contains(const Arc& a) const { return find(a).has_value(); }

  const std::string& deprel(std::size_t arc_index) const {
    return deprels_[arc_index];
  }
  // Empty when the arc is absent or unlabeled.
  std::string_view deprel_of(const Arc& a) const;
  bool has_deprels() const;

  // Head per node (index 0..n, -1 when the node has no head). When a node
  // has several heads the one appearing first in canonical order wins.
  std::vector<NodeId> heads() const;
  // Relation of each node's incoming arc, indexed 0..n, same tie rule.
  std::vector<std::string> dependent_deprels() const;

  DepGraph with_deprels(std::vector<std::string> deprels) const;

  friend bool operator==(const DepGraph&, const DepGraph&) = default;

 private:
  int n_ = 0;
  std::vector<Arc> arcs_;
  std::vector<std::string> deprels_;
};

std::string to_string(const DepGraph& g);

enum class TreeDefect {
  kNone,
  kRootHasHead,
  kMultipleHeads,
  kHeadless,
  kCycle,
};

std::string_view to_string(TreeDefect d);

struct TreeCheck {
  bool ok = true;
  TreeDefect defect = TreeDefect::kNone;
  NodeId node = -1;  // offending node, when one applies

  explicit operator bool() const { return ok; }
};

// Single head for every token, node 0 parentless, no cycles.
TreeCheck validate_tree(const DepGraph& g);

// First crossing pair in canonical order, if any.
std::optional<std::pair<Arc, Arc>> find_crossing_pair(const DepGraph& g);
bool has_crossing_arcs(const DepGraph& g);

// Throws std::invalid_argument unless `g` is a tree.
bool is_projective(const DepGraph& g);
// Same predicate through the descendants definition: every node strictly
// between the endpoints of an arc descends from one of them.
bool is_projective_by_descendants(const DepGraph& g);

// descendant[i][k] is true when k is reachable from i (i itself excluded).
std::vector<std::vector<bool>> descendant_matrix(const DepGraph& g);

}  // namespace hierbrack
