#include "hierbrack/pseudoproj.hpp"

#include <deque>
#include <optional>
#include <span>
#include <stdexcept>

namespace hierbrack {

LiftAnnotation parse_lift(std::string_view deprel) {
  const std::size_t at = deprel.find(kLiftMarker);
  if (at == std::string_view::npos) return {std::string(deprel), "", false};
  return {std::string(deprel.substr(0, at)),
          std::string(deprel.substr(at + kLiftMarker.size())), true};
}

std::string format_lift(const LiftAnnotation& a) {
  if (!a.lifted) return a.original;
  return a.original + std::string(kLiftMarker) + a.head_deprel;
}

namespace {

// heads[v] for v in 1..n, rels[v] likewise; index 0 unused.
struct HeadTree {
  std::vector<NodeId> heads;
  std::vector<std::string> rels;

  explicit HeadTree(const DepGraph& t) : heads(t.heads()), rels(t.dependent_deprels()) {
    if (!validate_tree(t)) throw std::invalid_argument("not a tree: " + to_string(t));
  }

  int size() const { return static_cast<int>(heads.size()) - 1; }

  bool dominates(NodeId a, NodeId v) const {
    while (v > 0 && v != a) v = heads[v];
    return v == a;
  }

  std::vector<std::vector<NodeId>> children() const {
    std::vector<std::vector<NodeId>> out(heads.size());
    for (NodeId v = 1; v <= size(); ++v) out[heads[v]].push_back(v);
    return out;
  }

  DepGraph graph() const {
    return DepGraph::from_heads(std::span(heads).subspan(1), std::span(rels).subspan(1));
  }
};

std::optional<NodeId> shortest_nonprojective(const HeadTree& t) {
  std::optional<NodeId> best;
  int best_len = 0, best_left = 0;
  for (NodeId d = 1; d <= t.size(); ++d) {
    const NodeId h = t.heads[d];
    const NodeId lo = std::min(h, d), hi = std::max(h, d);
    const int len = hi - lo;
    if (best && (len > best_len || (len == best_len && lo >= best_left))) continue;
    for (NodeId v = lo + 1; v < hi; ++v) {
      if (!t.dominates(h, v)) {
        best = d;
        best_len = len;
        best_left = lo;
        break;
      }
    }
  }
  return best;
}

}  // namespace

DepGraph projectivize(const DepGraph& t, std::size_t* lifts) {
  HeadTree tree(t);
  std::size_t steps = 0;
  while (auto d = shortest_nonprojective(tree)) {
    const NodeId h = tree.heads[*d];
    if (!parse_lift(tree.rels[*d]).lifted)
      tree.rels[*d] = format_lift({tree.rels[*d], parse_lift(tree.rels[h]).original, true});
    tree.heads[*d] = tree.heads[h];
    ++steps;
  }
  if (lifts) *lifts = steps;
  return tree.graph();
}

DepGraph deprojectivize(const DepGraph& t, std::vector<std::string>* unresolved) {
  HeadTree tree(t);

  std::vector<NodeId> order;
  {
    const auto kids = tree.children();
    std::deque<NodeId> queue{0};
    while (!queue.empty()) {
      const NodeId v = queue.front();
      queue.pop_front();
      if (v > 0) order.push_back(v);
      for (NodeId c : kids[v]) queue.push_back(c);
    }
  }

  for (NodeId d : order) {
    const LiftAnnotation lift = parse_lift(tree.rels[d]);
    if (!lift.lifted) continue;
    const auto kids = tree.children();
    std::optional<NodeId> target;
    std::deque<NodeId> queue(kids[tree.heads[d]].begin(), kids[tree.heads[d]].end());
    while (!queue.empty() && !target) {
      const NodeId v = queue.front();
      queue.pop_front();
      if (v == d) continue;
      if (parse_lift(tree.rels[v]).original == lift.head_deprel)
        target = v;
      else
        for (NodeId c : kids[v]) queue.push_back(c);
    }
    tree.rels[d] = lift.original;
    if (target)
      tree.heads[d] = *target;
    else if (unresolved)
      unresolved->push_back("token " + std::to_string(d) + ": no '" + lift.head_deprel +
                            "' below head " + std::to_string(tree.heads[d]));
  }
  return tree.graph();
}

}  // namespace hierbrack
