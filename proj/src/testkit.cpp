#include "hierbrack/testkit.hpp"

#include <random>

namespace hierbrack {

namespace {

void check_size(int n) {
  if (n < 0 || n > kMaxEnumerationTokens)
    throw EnumerationTooLarge("enumeration limited to " +
                              std::to_string(kMaxEnumerationTokens) + " tokens, got " +
                              std::to_string(n));
}

// heads[k] is the head of token k + 1.
bool forms_tree(const std::vector<NodeId>& heads) {
  const int n = static_cast<int>(heads.size());
  // 0 unvisited, 1 on current path, 2 reaches the root
  std::vector<char> state(n + 1, 0);
  state[0] = 2;
  for (int v = 1; v <= n; ++v) {
    int u = v;
    while (state[u] == 0) {
      state[u] = 1;
      u = heads[u - 1];
    }
    if (state[u] == 1) return false;
    for (u = v; state[u] == 1; u = heads[u - 1]) state[u] = 2;
  }
  return true;
}

DepGraph sample(int n, std::mt19937_64& rng, bool allow_nonprojective) {
  std::uniform_int_distribution<NodeId> pick(0, n);
  std::vector<NodeId> heads(n);
  while (true) {
    bool ok = true;
    for (int k = 0; k < n; ++k) {
      heads[k] = pick(rng);
      if (heads[k] == k + 1) ok = false;
    }
    if (!ok || !forms_tree(heads)) continue;
    DepGraph t = DepGraph::from_heads(heads);
    if (allow_nonprojective || !has_crossing_arcs(t)) return t;
  }
}

}  // namespace

std::uint64_t head_vector_count(int n) {
  std::uint64_t c = 1;
  for (int k = 0; k < n; ++k) c *= static_cast<std::uint64_t>(n + 1);
  return c;
}

std::optional<DepGraph> tree_from_code(int n, std::uint64_t code) {
  std::vector<NodeId> heads(n);
  for (int k = 0; k < n; ++k) {
    heads[k] = static_cast<NodeId>(code % static_cast<std::uint64_t>(n + 1));
    code /= static_cast<std::uint64_t>(n + 1);
    if (heads[k] == k + 1) return std::nullopt;
  }
  if (!forms_tree(heads)) return std::nullopt;
  return DepGraph::from_heads(heads);
}

void for_each_tree(int n, bool projective_only,
                   const std::function<void(const DepGraph&)>& visit) {
  check_size(n);
  const std::uint64_t total = head_vector_count(n);
  for (std::uint64_t code = 0; code < total; ++code) {
    auto t = tree_from_code(n, code);
    if (!t || (projective_only && has_crossing_arcs(*t))) continue;
    visit(*t);
  }
}

std::vector<DepGraph> enumerate_trees(int n, bool projective_only) {
  std::vector<DepGraph> out;
  for_each_tree(n, projective_only, [&](const DepGraph& t) { out.push_back(t); });
  return out;
}

std::uint64_t count_trees(int n, bool projective_only) {
  std::uint64_t c = 0;
  for_each_tree(n, projective_only, [&](const DepGraph&) { ++c; });
  return c;
}

DepGraph random_tree(int n, std::uint64_t seed, bool allow_nonprojective) {
  if (n < 1) throw std::invalid_argument("random_tree needs at least one token");
  std::mt19937_64 rng(seed);
  return sample(n, rng, allow_nonprojective);
}

DepGraph random_nonprojective_tree(int n, std::uint64_t seed) {
  if (n < 3) throw std::invalid_argument("crossing arcs need at least three tokens");
  std::mt19937_64 rng(seed);
  while (true) {
    DepGraph t = sample(n, rng, true);
    if (has_crossing_arcs(t)) return t;
  }
}

}  // namespace hierbrack
