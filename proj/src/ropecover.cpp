#include "hierbrack/ropecover.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdlib>
#include <set>

namespace hierbrack {

bool RopeCover::is_structural(const Arc& a) const {
  return std::binary_search(structural.begin(), structural.end(), a,
                            canonical_less);
}

bool is_rope_cover(const DepGraph& g, std::span<const Arc> r) {
  std::set<Arc> in_r(r.begin(), r.end());
  for (const Arc& e : g.arcs()) {
    if (in_r.count(e)) continue;
    bool supported = false;
    for (const Arc& s : r)
      if (leans_on(e, s)) {
        supported = true;
        break;
      }
    if (!supported) return false;
  }
  return true;
}

bool is_proper(const DepGraph& /*g*/, std::span<const Arc> r) {
  for (const Arc& a : r)
    for (const Arc& b : r)
      if (leans_on(a, b)) return false;
  return true;
}

bool is_compact(const DepGraph& g, std::span<const Arc> r) {
  const int n = g.size();
  // [node][direction] counts; direction 1 = rightward.
  std::vector<std::array<int, 2>> out(n + 1, {0, 0}), in(n + 1, {0, 0});
  for (const Arc& a : r) {
    const int dir = a.rightward() ? 1 : 0;
    if (++out[a.head][dir] > 1) return false;
    if (++in[a.dep][dir] > 1) return false;
  }
  return true;
}

bool supports_consistent(const DepGraph& g, const RopeCover& r) {
  for (const Arc& e : g.arcs()) {
    if (r.is_structural(e)) continue;
    auto it = r.aux_support.find(e);
    if (it == r.aux_support.end()) return false;
    if (!r.is_structural(it->second) || !leans_on(e, it->second)) return false;
  }
  return true;
}

RopeCover proper_rope_cover(const DepGraph& g) {
  auto arcs = g.arcs();
  const std::size_t m = arcs.size();
  // Arcs sharing a right endpoint, for marking the ones that lean from the
  // right side.
  std::vector<std::vector<std::size_t>> by_right(g.size() + 1);
  for (std::size_t k = 0; k < m; ++k) by_right[arcs[k].right()].push_back(k);

  RopeCover cover;
  std::vector<bool> marked(m, false);
  // Canonical order is exactly "leftmost left endpoint, then longest, then
  // rightward", so the next structural arc is the first unmarked one.
  for (std::size_t k = 0; k < m; ++k) {
    if (marked[k]) continue;
    const Arc s = arcs[k];
    marked[k] = true;
    cover.structural.push_back(s);
    for (std::size_t j = k + 1; j < m && arcs[j].left() == s.left(); ++j)
      if (!marked[j] && leans_on(arcs[j], s)) {
        marked[j] = true;
        cover.aux_support.emplace(arcs[j], s);
      }
    for (std::size_t j : by_right[s.right()])
      if (!marked[j] && leans_on(arcs[j], s)) {
        marked[j] = true;
        cover.aux_support.emplace(arcs[j], s);
      }
  }
  return cover;
}

RopeCover fourbit_rope_cover(const DepGraph& t) {
  const int n = t.size();
  // Longest outgoing arc per node and direction.
  std::vector<std::array<int, 2>> longest(n + 1, {-1, -1});
  for (const Arc& a : t.arcs()) {
    int& best = longest[a.head][a.rightward() ? 1 : 0];
    if (best < 0 || std::abs(a.dep - a.head) > std::abs(best - a.head))
      best = a.dep;
  }
  RopeCover cover;
  for (const Arc& a : t.arcs()) {
    const Arc top{a.head, longest[a.head][a.rightward() ? 1 : 0]};
    if (top == a)
      cover.structural.push_back(a);
    else
      cover.aux_support.emplace(a, top);
  }
  return cover;
}

RopeCover naive_rope_cover(const DepGraph& g) {
  RopeCover cover;
  cover.structural.assign(g.arcs().begin(), g.arcs().end());
  return cover;
}

std::size_t min_rope_cover_size(const DepGraph& g) {
  auto arcs = g.arcs();
  const std::size_t m = arcs.size();
  if (m > kMaxBruteForceArcs)
    throw CoverSearchTooLarge("brute-force cover search refused for " +
                              std::to_string(m) + " arcs (limit " +
                              std::to_string(kMaxBruteForceArcs) + ")");
  if (m == 0) return 0;
  // supporters[e] = bitmask of arcs that e leans on.
  std::vector<std::uint32_t> supporters(m, 0);
  for (std::size_t e = 0; e < m; ++e)
    for (std::size_t s = 0; s < m; ++s)
      if (leans_on(arcs[e], arcs[s])) supporters[e] |= 1u << s;

  const std::uint32_t full = (m == 32) ? ~0u : ((1u << m) - 1);
  auto is_cover = [&](std::uint32_t r) {
    for (std::size_t e = 0; e < m; ++e)
      if (!(r >> e & 1u) && !(supporters[e] & r)) return false;
    return true;
  };
  for (std::size_t k = 1; k <= m; ++k) {
    // Gosper's hack: all m-bit masks with exactly k bits, ascending.
    std::uint32_t r = (1u << k) - 1;
    while (r <= full) {
      if (is_cover(r)) return k;
      const std::uint32_t c = r & (~r + 1);
      const std::uint32_t next = r + c;
      if (next == 0) break;
      r = (((r ^ next) >> 2) / c) | next;
    }
  }
  return m;
}

}  // namespace hierbrack
