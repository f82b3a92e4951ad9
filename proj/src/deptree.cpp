#include "hierbrack/deptree.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hierbrack {

std::string to_string(const Arc& a) {
  return std::to_string(a.head) + "->" + std::to_string(a.dep);
}

bool crosses(const Arc& a, const Arc& b) {
  return (a.left() < b.left() && b.left() < a.right() &&
          a.right() < b.right()) ||
         (b.left() < a.left() && a.left() < b.right() &&
          b.right() < a.right());
}

bool covers(const Arc& a, const Arc& b) {
  return a.left() <= b.left() && b.left() < b.right() &&
         b.right() <= a.right();
}

bool leans_on(const Arc& b, const Arc& a) {
  return a != b && covers(a, b) &&
         (a.left() == b.left() || a.right() == b.right());
}

bool canonical_less(const Arc& a, const Arc& b) {
  if (a.left() != b.left()) return a.left() < b.left();
  if (a.length() != b.length()) return a.length() > b.length();
  if (a.rightward() != b.rightward()) return a.rightward();
  return a < b;
}

DepGraph::DepGraph(int n, std::vector<Arc> arcs,
                   std::vector<std::string> deprels)
    : n_(n) {
  if (n < 0) throw std::invalid_argument("negative token count");
  if (!deprels.empty() && deprels.size() != arcs.size())
    throw std::invalid_argument("deprel count does not match arc count");
  if (deprels.empty()) deprels.resize(arcs.size());

  for (const Arc& a : arcs) {
    if (a.head < 0 || a.head > n || a.dep < 0 || a.dep > n)
      throw std::invalid_argument("arc " + to_string(a) + " out of range 0.." +
                                  std::to_string(n));
    if (a.head == a.dep)
      throw std::invalid_argument("self loop " + to_string(a));
    if (a.dep == 0)
      throw std::invalid_argument("arc into the root " + to_string(a));
  }

  std::vector<std::size_t> order(arcs.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return canonical_less(arcs[x], arcs[y]);
  });
  arcs_.reserve(arcs.size());
  deprels_.reserve(arcs.size());
  for (std::size_t k : order) {
    if (!arcs_.empty() && arcs_.back() == arcs[k])
      throw std::invalid_argument("duplicate arc " + to_string(arcs[k]));
    arcs_.push_back(arcs[k]);
    deprels_.push_back(std::move(deprels[k]));
  }
}

DepGraph DepGraph::from_heads(std::span<const NodeId> heads,
                              std::span<const std::string> deprels) {
  if (!deprels.empty() && deprels.size() != heads.size())
    throw std::invalid_argument("deprel count does not match head count");
  std::vector<Arc> arcs;
  std::vector<std::string> rels;
  for (std::size_t k = 0; k < heads.size(); ++k) {
    if (heads[k] < 0) continue;
    arcs.push_back({heads[k], static_cast<NodeId>(k + 1)});
    rels.push_back(deprels.empty() ? std::string() : deprels[k]);
  }
  return DepGraph(static_cast<int>(heads.size()), std::move(arcs),
                  std::move(rels));
}

std::optional<std::size_t> DepGraph::find(const Arc& a) const {
  auto it = std::lower_bound(arcs_.begin(), arcs_.end(), a, canonical_less);
  if (it != arcs_.end() && *it == a)
    return static_cast<std::size_t>(it - arcs_.begin());
  return std::nullopt;
}

std::string_view DepGraph::deprel_of(const Arc& a) const {
  auto k = find(a);
  return k ? std::string_view(deprels_[*k]) : std::string_view();
}

bool DepGraph::has_deprels() const {
  return std::any_of(deprels_.begin(), deprels_.end(),
                     [](const std::string& r) { return !r.empty(); });
}

std::vector<NodeId> DepGraph::heads() const {
  std::vector<NodeId> h(n_ + 1, -1);
  for (const Arc& a : arcs_)
    if (h[a.dep] < 0) h[a.dep] = a.head;
  return h;
}

std::vector<std::string> DepGraph::dependent_deprels() const {
  std::vector<std::string> rels(n_ + 1);
  std::vector<bool> seen(n_ + 1, false);
  for (std::size_t k = 0; k < arcs_.size(); ++k) {
    if (seen[arcs_[k].dep]) continue;
    seen[arcs_[k].dep] = true;
    rels[arcs_[k].dep] = deprels_[k];
  }
  return rels;
}

DepGraph DepGraph::with_deprels(std::vector<std::string> deprels) const {
  return DepGraph(n_, arcs_, std::move(deprels));
}

std::string to_string(const DepGraph& g) {
  std::ostringstream os;
  os << "n=" << g.size() << " {";
  for (std::size_t k = 0; k < g.arc_count(); ++k) {
    if (k) os << ", ";
    os << to_string(g.arcs()[k]);
    if (!g.deprel(k).empty()) os << ":" << g.deprel(k);
  }
  os << "}";
  return os.str();
}

std::string_view to_string(TreeDefect d) {
  switch (d) {
    case TreeDefect::kNone: return "ok";
    case TreeDefect::kRootHasHead: return "root-has-head";
    case TreeDefect::kMultipleHeads: return "multiple-heads";
    case TreeDefect::kHeadless: return "headless";
    case TreeDefect::kCycle: return "cycle";
  }
  return "unknown";
}

TreeCheck validate_tree(const DepGraph& g) {
  const int n = g.size();
  std::vector<NodeId> head(n + 1, -1);
  for (const Arc& a : g.arcs()) {
    if (a.dep == 0) return {false, TreeDefect::kRootHasHead, 0};
    if (head[a.dep] >= 0) return {false, TreeDefect::kMultipleHeads, a.dep};
    head[a.dep] = a.head;
  }
  for (NodeId v = 1; v <= n; ++v)
    if (head[v] < 0) return {false, TreeDefect::kHeadless, v};

  // Every token must reach node 0 by following heads.
  std::vector<char> state(n + 1, 0);  // 0 unseen, 1 on path, 2 reaches root
  state[0] = 2;
  for (NodeId v = 1; v <= n; ++v) {
    std::vector<NodeId> path;
    NodeId u = v;
    while (state[u] == 0) {
      state[u] = 1;
      path.push_back(u);
      u = head[u];
    }
    if (state[u] == 1) return {false, TreeDefect::kCycle, u};
    for (NodeId p : path) state[p] = 2;
  }
  return {};
}

std::optional<std::pair<Arc, Arc>> find_crossing_pair(const DepGraph& g) {
  auto arcs = g.arcs();
  for (std::size_t i = 0; i < arcs.size(); ++i)
    for (std::size_t j = i + 1; j < arcs.size(); ++j)
      if (crosses(arcs[i], arcs[j])) return std::pair{arcs[i], arcs[j]};
  return std::nullopt;
}

bool has_crossing_arcs(const DepGraph& g) {
  return find_crossing_pair(g).has_value();
}

bool is_projective(const DepGraph& g) {
  if (!validate_tree(g))
    throw std::invalid_argument("is_projective requires a tree");
  return !has_crossing_arcs(g);
}

std::vector<std::vector<bool>> descendant_matrix(const DepGraph& g) {
  const int n = g.size();
  std::vector<std::vector<NodeId>> children(n + 1);
  for (const Arc& a : g.arcs()) children[a.head].push_back(a.dep);
  std::vector<std::vector<bool>> desc(n + 1, std::vector<bool>(n + 1, false));
  for (NodeId v = 0; v <= n; ++v) {
    std::vector<NodeId> todo = children[v];
    while (!todo.empty()) {
      NodeId u = todo.back();
      todo.pop_back();
      if (desc[v][u]) continue;
      desc[v][u] = true;
      for (NodeId c : children[u]) todo.push_back(c);
    }
  }
  return desc;
}

bool is_projective_by_descendants(const DepGraph& g) {
  if (!validate_tree(g))
    throw std::invalid_argument("is_projective requires a tree");
  auto desc = descendant_matrix(g);
  for (const Arc& a : g.arcs()) {
    for (NodeId k = a.left() + 1; k < a.right(); ++k)
      if (!desc[a.head][k] && !desc[a.dep][k]) return false;
  }
  return true;
}

}  // namespace hierbrack
