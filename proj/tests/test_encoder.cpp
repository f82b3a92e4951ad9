#include <gtest/gtest.h>

#include <set>

#include "fixtures.hpp"
#include "hierbrack/encoder.hpp"
#include "hierbrack/testkit.hpp"

namespace hierbrack {
namespace {

using fixtures::split;
using fixtures::texts;

TEST(EncodeNoncrossing, ThreeCoversOfSmallTree) {
  const DepGraph t = fixtures::small_projective();
  const LabelSequence proper = encode_noncrossing(t, proper_rope_cover(t));
  EXPECT_EQ(texts(proper), split("/* > < < >*/* <* \\*< >*"));
  EXPECT_EQ(proper.symbol_count(), 10u);
  const LabelSequence fourbit = encode_noncrossing(t, fourbit_rope_cover(t));
  EXPECT_EQ(texts(fourbit), split("/* > <* < \\*>*/* <* \\*<* \\*>*"));
  EXPECT_EQ(fourbit.symbol_count(), 12u);
  const LabelSequence naive = encode_noncrossing(t, naive_rope_cover(t));
  EXPECT_EQ(texts(naive), split("/*/* >* <* <* \\*\\*>*/* <* \\*<* \\*>*"));
  EXPECT_EQ(naive.symbol_count(), 14u);
}

TEST(EncodeNoncrossing, CarriesDependentRelations) {
  const DepGraph t(2, {{0, 2}, {2, 1}}, {"root", "nsubj"});
  const LabelSequence ls = encode_noncrossing(t, proper_rope_cover(t));
  EXPECT_EQ(ls.deprels, (std::vector<std::string>{"", "nsubj", "root"}));
}

TEST(EncodeNoncrossing, RejectsCrossingArcs) {
  const DepGraph t = fixtures::crossing_eight();
  try {
    encode_noncrossing(t, proper_rope_cover(t));
    FAIL();
  } catch (const CrossingArcsError& e) {
    EXPECT_TRUE(crosses(e.first(), e.second()));
  }
  EXPECT_NO_THROW(encode_noncrossing(t, proper_rope_cover(t), {.allow_crossing = true}));
}

TEST(EncodeNoncrossing, RejectsInvalidCover) {
  const DepGraph t = fixtures::small_projective();
  RopeCover r = proper_rope_cover(t);
  r.aux_support.erase(Arc{0, 1});
  EXPECT_THROW(encode_noncrossing(t, r), InvalidCoverError);
  RopeCover wrong = proper_rope_cover(t);
  wrong.aux_support[Arc{0, 1}] = Arc{4, 7};
  EXPECT_THROW(encode_noncrossing(t, wrong), InvalidCoverError);
  RopeCover foreign = proper_rope_cover(t);
  foreign.structural.push_back({1, 2});
  EXPECT_THROW(encode_noncrossing(t, foreign), InvalidCoverError);
}

TEST(EncodeNonprojective, EightTokenTree) {
  const DepGraph t = fixtures::crossing_eight();
  const LabelSequence ls = encode_nonprojective(t, proper_rope_cover(t));
  EXPECT_EQ(texts(ls), split("/* < >/* /*< <1 <2 >*2 >*1 >*"));
}

TEST(EncodeNonprojective, ThirteenTokenTree) {
  const DepGraph t = fixtures::crossing_thirteen();
  const LabelSequence ls = encode_nonprojective(t, proper_rope_cover(t));
  EXPECT_EQ(texts(ls), split("/* < >/* /*< <1 <2 >*2 >*1 >*/* <* >1/1 >1 >* \\*"));
}

TEST(EncodeNonprojective, IndexCap) {
  const DepGraph t = fixtures::crossing_eight();
  try {
    encode_nonprojective(t, proper_rope_cover(t), {.max_index = 1});
    FAIL();
  } catch (const IndexCapExceeded& e) {
    EXPECT_EQ(e.required(), 2u);
  }
  EXPECT_NO_THROW(encode_nonprojective(t, proper_rope_cover(t), {.max_index = 2}));
  EXPECT_THROW(encode(t, Scheme::kOptimalNonprojective, {.max_index = 0}), IndexCapExceeded);
}

TEST(Encode, Dispatch) {
  const DepGraph t = fixtures::small_projective();
  EXPECT_EQ(texts(encode(t, Scheme::kOptimalProjective)),
            split("/* > < < >*/* <* \\*< >*"));
  EXPECT_EQ(encode(t, Scheme::kOptimalNonprojective), encode(t, Scheme::kOptimalProjective));
  const LabelSequence fb = encode(t, Scheme::kFourBit);
  EXPECT_EQ(label_to_fourbit(fb.labels[4]).bits(), "1111");
  EXPECT_EQ(encode(t, Scheme::kNaive).symbol_count(), 14u);
}

TEST(Encode, ProjectiveSchemesNameTheCrossingPair) {
  const DepGraph t = fixtures::crossing_eight();
  for (Scheme s : {Scheme::kOptimalProjective, Scheme::kFourBit}) {
    try {
      encode(t, s);
      FAIL();
    } catch (const CrossingArcsError& e) {
      EXPECT_TRUE(crosses(e.first(), e.second()));
      EXPECT_NE(std::string(e.what()).find(to_string(e.first())), std::string::npos);
    }
    EXPECT_NO_THROW(encode(t, s, {.lenient = true}));
  }
  EXPECT_GT(encode(t, Scheme::kNaive).max_index(), 0u);
}

TEST(Encode, RejectsNonTrees) {
  EXPECT_THROW(encode(DepGraph(2, {{0, 1}}), Scheme::kNaive), EncodeError);
  EXPECT_THROW(encode(DepGraph(2, {{1, 2}, {2, 1}}), Scheme::kNaive), EncodeError);
}

TEST(Encode, SchemeNames) {
  for (Scheme s : {Scheme::kNaive, Scheme::kFourBit, Scheme::kOptimalProjective,
                   Scheme::kOptimalNonprojective})
    EXPECT_EQ(parse_scheme(scheme_name(s)), s);
  EXPECT_FALSE(parse_scheme("hexatag").has_value());
  EXPECT_TRUE(is_projective_scheme(Scheme::kFourBit));
  EXPECT_FALSE(is_projective_scheme(Scheme::kNaive));
}

bool is_dependent_bracket(const BracketSymbol& s) {
  return s.shape == Shape::kCloseRight || s.shape == Shape::kOpenLeft;
}

TEST(Encode, ProjectiveLabelShapeUpToSixTokens) {
  for (int n = 1; n <= 6; ++n)
    for_each_tree(n, true, [&](const DepGraph& t) {
      const RopeCover r = proper_rope_cover(t);
      const LabelSequence nc = encode_noncrossing(t, r);
      ASSERT_EQ(encode_nonprojective(t, r), nc) << to_string(t);
      ASSERT_EQ(nc.max_index(), 0u);
      ASSERT_EQ(nc.symbol_count(), t.arc_count() + r.size());
      for (Scheme s : {Scheme::kOptimalProjective, Scheme::kFourBit}) {
        const LabelSequence ls = encode(t, s);
        for (int p = 1; p <= n; ++p) {
          const Label& l = ls.labels[p];
          ASSERT_TRUE(matches_projective_form(l)) << render_label(l);
          ASSERT_EQ(std::count_if(l.begin(), l.end(), is_dependent_bracket), 1);
          for (const BracketSymbol& b : l)
            ASSERT_FALSE(!b.is_super() &&
                         (b.shape == Shape::kCloseLeft || b.shape == Shape::kOpenRight));
        }
      }
    });
}

TEST(Encode, NoRepeatedSemibrackets) {
  for (std::uint64_t seed = 0; seed < 2000; ++seed) {
    const DepGraph t = random_tree(3 + static_cast<int>(seed % 8), seed);
    const LabelSequence ls = encode(t, Scheme::kOptimalNonprojective);
    for (const Label& l : ls.labels)
      for (std::size_t a = 0; a < l.size(); ++a)
        for (std::size_t b = a + 1; b < l.size(); ++b)
          ASSERT_FALSE(!l.symbols[a].is_super() && l.symbols[a] == l.symbols[b])
              << to_string(t);
  }
}

}  // namespace
}  // namespace hierbrack
