#include <gtest/gtest.h>

#include <set>

#include "fixtures.hpp"
#include "hierbrack/ropecover.hpp"
#include "hierbrack/testkit.hpp"

namespace hierbrack {
namespace {

std::set<Arc> as_set(const std::vector<Arc>& v) { return {v.begin(), v.end()}; }

TEST(RopeCover, Predicates) {
  const DepGraph g = fixtures::small_projective();
  const std::vector<Arc> proper{{0, 4}, {4, 7}, {6, 5}};
  EXPECT_TRUE(is_rope_cover(g, proper));
  EXPECT_TRUE(is_proper(g, proper));
  EXPECT_TRUE(is_compact(g, proper));
  const std::vector<Arc> all(g.arcs().begin(), g.arcs().end());
  EXPECT_TRUE(is_rope_cover(g, all));
  const std::vector<Arc> root_only{{0, 4}};
  EXPECT_FALSE(is_rope_cover(g, root_only));
  const std::vector<Arc> fourbit{{0, 4}, {4, 2}, {4, 7}, {7, 6}, {6, 5}};
  EXPECT_TRUE(is_rope_cover(g, fourbit));
  EXPECT_FALSE(is_proper(g, fourbit));
  const DepGraph one(1, {{0, 1}});
  const std::vector<Arc> single{{0, 1}};
  EXPECT_TRUE(is_proper(one, single));
  const DepGraph fan(3, {{0, 3}, {0, 2}});
  const std::vector<Arc> both{{0, 3}, {0, 2}};
  EXPECT_FALSE(is_compact(fan, both));
}

TEST(RopeCover, ProperCover) {
  const RopeCover r = proper_rope_cover(fixtures::small_projective());
  EXPECT_EQ(as_set(r.structural), (std::set<Arc>{{0, 4}, {4, 7}, {6, 5}}));
  EXPECT_EQ(r.aux_support.size(), 4u);
  EXPECT_EQ(r.aux_support.at({0, 1}), (Arc{0, 4}));
  EXPECT_EQ(r.aux_support.at({7, 6}), (Arc{4, 7}));
  EXPECT_TRUE(supports_consistent(fixtures::small_projective(), r));
  EXPECT_EQ(as_set(proper_rope_cover(DepGraph(1, {{0, 1}})).structural),
            (std::set<Arc>{{0, 1}}));
}

TEST(RopeCover, ProperCoverOfCrossingTree) {
  const RopeCover r = proper_rope_cover(fixtures::crossing_eight());
  EXPECT_EQ(as_set(r.structural), (std::set<Arc>{{0, 6}, {2, 7}, {3, 8}}));
  EXPECT_TRUE(supports_consistent(fixtures::crossing_eight(), r));
}

TEST(RopeCover, TwoCycleKeepsRightwardArc) {
  const DepGraph g(2, {{0, 1}, {1, 2}, {2, 1}});
  const RopeCover r = proper_rope_cover(g);
  EXPECT_TRUE(r.is_structural({1, 2}));
  EXPECT_FALSE(r.is_structural({2, 1}));
  EXPECT_EQ(r.aux_support.at({2, 1}), (Arc{1, 2}));
}

TEST(RopeCover, FourBitCover) {
  const RopeCover r = fourbit_rope_cover(fixtures::small_projective());
  EXPECT_EQ(as_set(r.structural), (std::set<Arc>{{0, 4}, {4, 2}, {4, 7}, {7, 6}, {6, 5}}));
  const DepGraph chain(3, {{0, 1}, {1, 2}, {2, 3}});
  EXPECT_EQ(fourbit_rope_cover(chain).structural.size(), 3u);
}

TEST(RopeCover, NaiveCover) {
  const RopeCover r = naive_rope_cover(fixtures::small_projective());
  EXPECT_EQ(r.size(), 7u);
  EXPECT_TRUE(r.aux_support.empty());
  EXPECT_EQ(naive_rope_cover(DepGraph(3)).size(), 0u);
}

TEST(RopeCover, BruteForceMinimum) {
  EXPECT_EQ(min_rope_cover_size(fixtures::small_projective()), 3u);
  EXPECT_EQ(min_rope_cover_size(DepGraph(1, {{0, 1}})), 1u);
  EXPECT_EQ(min_rope_cover_size(DepGraph(2)), 0u);
  std::vector<Arc> many;
  for (int k = 1; k <= 21; ++k) many.push_back({0, k});
  EXPECT_THROW(min_rope_cover_size(DepGraph(21, many)), CoverSearchTooLarge);
}

TEST(RopeCover, PropertiesUpToSixTokens) {
  for (int n = 1; n <= 6; ++n)
    for_each_tree(n, false, [&](const DepGraph& t) {
      const RopeCover r = proper_rope_cover(t);
      ASSERT_TRUE(is_rope_cover(t, r.structural)) << to_string(t);
      ASSERT_TRUE(is_proper(t, r.structural)) << to_string(t);
      ASSERT_TRUE(is_compact(t, r.structural)) << to_string(t);
      ASSERT_TRUE(supports_consistent(t, r)) << to_string(t);
      ASSERT_EQ(r.structural.size() + r.aux_support.size(), t.arc_count());
      if (!has_crossing_arcs(t)) {
        const RopeCover f = fourbit_rope_cover(t);
        ASSERT_TRUE(is_compact(t, f.structural)) << to_string(t);
        ASSERT_TRUE(supports_consistent(t, f)) << to_string(t);
        ASSERT_LE(r.size(), f.size());
      }
    });
}

// Exactly one arc subset is a proper rope cover of a noncrossing tree.
TEST(RopeCover, ProperCoverIsUniqueUpToFiveTokens) {
  for (int n = 1; n <= 5; ++n)
    for_each_tree(n, true, [&](const DepGraph& t) {
      const std::vector<Arc> arcs(t.arcs().begin(), t.arcs().end());
      int found = 0;
      for (unsigned mask = 0; mask < (1u << arcs.size()); ++mask) {
        std::vector<Arc> sub;
        for (std::size_t k = 0; k < arcs.size(); ++k)
          if (mask & (1u << k)) sub.push_back(arcs[k]);
        if (is_rope_cover(t, sub) && is_proper(t, sub)) {
          ++found;
          ASSERT_EQ(as_set(sub), as_set(proper_rope_cover(t).structural));
        }
      }
      ASSERT_EQ(found, 1) << to_string(t);
    });
}

}  // namespace
}  // namespace hierbrack
