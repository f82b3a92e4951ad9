#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "fixtures.hpp"
#include "hierbrack/decoder.hpp"
#include "hierbrack/encoder.hpp"
#include "hierbrack/testkit.hpp"

namespace hierbrack {
namespace {

using fixtures::labels;

std::size_t count_symbols(const LabelSequence& ls, bool opening, bool semis_only = false) {
  std::size_t c = 0;
  for (const Label& l : ls.labels)
    for (const BracketSymbol& s : l)
      if (s.opening() == opening && (!semis_only || !s.is_super())) ++c;
  return c;
}

TEST(DecodeNoncrossing, SmallTreeUnderThreeCovers) {
  const DepGraph t = fixtures::small_projective();
  for (const char* text : {"/* > < < >*/* <* \\*< >*", "/* > <* < \\*>*/* <* \\*<* \\*>*",
                           "/*/* >* <* <* \\*\\*>*/* <* \\*<* \\*>*"}) {
    const DecodeResult r = decode_noncrossing(labels(text));
    EXPECT_EQ(r.graph, t) << text;
    EXPECT_TRUE(r.diagnostics.empty()) << text;
  }
}

TEST(DecodeNoncrossing, CrossingAuxiliaryArcs) {
  const DecodeResult r = decode_noncrossing(labels("/* > < > < >*"));
  EXPECT_EQ(r.graph, DepGraph(5, {{0, 1}, {0, 3}, {5, 2}, {5, 4}, {0, 5}}));
  EXPECT_TRUE(r.diagnostics.empty());
}

TEST(DecodeNoncrossing, ShapeMismatchMakesNoArc) {
  const DecodeResult r = decode_noncrossing(labels("- <* >*"));
  EXPECT_TRUE(r.graph.empty());
  ASSERT_FALSE(r.diagnostics.empty());
  EXPECT_EQ(r.diagnostics[0].action, DecodeAction::kMismatchedSuper);
}

TEST(DecodeNoncrossing, IgnoresIndices) {
  const DecodeResult r = decode_noncrossing(labels("/* >*1"));
  EXPECT_EQ(r.graph, DepGraph(1, {{0, 1}}));
  ASSERT_EQ(r.diagnostics.size(), 1u);
  EXPECT_EQ(r.diagnostics[0].action, DecodeAction::kIgnoredIndex);
}

TEST(DecodeIndexed, EightTokenTree) {
  const DecodeResult r = decode_indexed(labels("/* < >/* /*< <1 <2 >*2 >*1 >*"));
  EXPECT_EQ(r.graph, fixtures::crossing_eight());
  EXPECT_TRUE(r.diagnostics.empty());
}

TEST(DecodeIndexed, ThirteenTokenTree) {
  const DecodeResult r =
      decode_indexed(labels("/* < >/* /*< <1 <2 >*2 >*1 >*/* <* >1/1 >1 >* \\*"));
  EXPECT_EQ(r.graph, fixtures::crossing_thirteen());
  EXPECT_TRUE(r.graph.contains({10, 13}));
  EXPECT_TRUE(r.diagnostics.empty());
}

TEST(DecodeIndexed, AgreesWithPlainDecoderOnProjectiveEncodings) {
  for (int n = 1; n <= 6; ++n)
    for_each_tree(n, true, [&](const DepGraph& t) {
      for (Scheme s : {Scheme::kOptimalProjective, Scheme::kFourBit, Scheme::kNaive}) {
        const LabelSequence ls = encode(t, s);
        ASSERT_EQ(decode_indexed(ls).graph, decode_noncrossing(ls).graph) << to_string(t);
      }
    });
}

TEST(DecodeRobust, RebuildsMissingRootLabel) {
  const DepGraph t = fixtures::small_projective();
  const DecodeResult proper = decode_robust(encode(t, Scheme::kOptimalProjective).without_root_label(), true);
  EXPECT_EQ(proper.graph, t);
  EXPECT_EQ(proper.root_brackets, 1);
  EXPECT_TRUE(proper.diagnostics.empty());
  const DecodeResult naive = decode_robust(encode(t, Scheme::kNaive).without_root_label(), true);
  EXPECT_EQ(naive.graph, t);
  EXPECT_EQ(naive.root_brackets, 2);
  const LabelSequence np = encode(fixtures::crossing_thirteen(), Scheme::kOptimalNonprojective);
  EXPECT_EQ(decode_robust(np.without_root_label(), true).graph, fixtures::crossing_thirteen());
}

TEST(DecodeRobust, UnopenedClosersGiveFlatTree) {
  const int n = 5;
  LabelSequence ls = LabelSequence::empty(n);
  for (int p = 1; p <= n; ++p) ls.labels[p] = parse_label(">");
  ls.has_root_label = false;
  const DecodeResult r = decode_robust(ls, true);
  EXPECT_EQ(r.root_brackets, 0);
  for (int p = 1; p <= n; ++p) EXPECT_TRUE(r.graph.contains({0, p}));
  EXPECT_EQ(r.symbol_diagnostics(), static_cast<std::size_t>(n));
  EXPECT_EQ(r.attachments(), static_cast<std::size_t>(n));
  EXPECT_TRUE(validate_tree(r.graph));
}

TEST(DecodeRobust, ClampsOversizedIndex) {
  const DecodeResult r = decode_robust(labels("/* >3 >*"), true);
  EXPECT_EQ(r.graph, DepGraph(2, {{0, 1}, {0, 2}}));
  ASSERT_EQ(r.diagnostics.size(), 1u);
  EXPECT_EQ(r.diagnostics[0].action, DecodeAction::kClampedIndex);
}

bool has_action(const DecodeResult& r, DecodeAction a) {
  return std::any_of(r.diagnostics.begin(), r.diagnostics.end(),
                     [&](const Diagnostic& d) { return d.action == a; });
}

TEST(DecodeRobust, SkipsSecondHead) {
  const DecodeResult r = decode_robust(labels("/* >/* >*>"), true);
  EXPECT_EQ(r.graph, DepGraph(2, {{0, 1}, {1, 2}}));
  EXPECT_TRUE(has_action(r, DecodeAction::kSecondHead));
}

TEST(DecodeRobust, SkipsDuplicateAndCycle) {
  const DecodeResult r = decode_robust(labels("- /*< \\>*"), true);
  EXPECT_TRUE(validate_tree(r.graph));
  EXPECT_TRUE(r.graph.contains({2, 1}));
  EXPECT_TRUE(has_action(r, DecodeAction::kDuplicateArc));
  EXPECT_TRUE(has_action(r, DecodeAction::kCycle));
  EXPECT_TRUE(r.graph.contains({0, 2}));
}

TEST(DecodeRobust, HeadlessNodesGoToTheOnlyRootDependent) {
  const DecodeResult r = decode_robust(labels("/* >* - -"), true);
  EXPECT_EQ(r.graph, DepGraph(3, {{0, 1}, {1, 2}, {1, 3}}));
  EXPECT_EQ(r.attachments(), 2u);
}

TEST(DecodeRobust, ReportsLeftoversAndStrayClosers) {
  const DecodeResult r = decode_robust(labels("- \\ /*"), false);
  EXPECT_TRUE(r.graph.empty());
  ASSERT_EQ(r.diagnostics.size(), 2u);
  EXPECT_EQ(r.diagnostics[0].action, DecodeAction::kUnmatchedCloser);
  EXPECT_EQ(r.diagnostics[1].action, DecodeAction::kLeftoverOpener);
  EXPECT_EQ(format_diagnostic(r.diagnostics[0]),
            "1\t\\\tdiscarded-unmatched-closer\tno superbracket on stack");
}

TEST(DecodeRobust, ArbitraryGraphsKeepExtraHeads) {
  const DecodeResult r = decode_robust(labels("/* >/* >*>"), false);
  EXPECT_EQ(r.graph, DepGraph(2, {{0, 1}, {1, 2}, {0, 2}}));
}

TEST(DecodeRobust, RandomSequencesYieldTrees) {
  std::mt19937_64 rng(7);
  const char* pieces[] = {"/", "/*", "<", "<*", ">", ">*", "\\", "\\*", ">1", "<2", ">*1", "/1"};
  for (int iter = 0; iter < 20000; ++iter) {
    const int n = 1 + static_cast<int>(rng() % 9);
    LabelSequence ls = LabelSequence::empty(n);
    ls.has_root_label = rng() % 2;
    for (int p = ls.has_root_label ? 0 : 1; p <= n; ++p) {
      std::string text;
      for (int k = static_cast<int>(rng() % 4); k > 0; --k) text += pieces[rng() % 12];
      ls.labels[p] = parse_label(text);
    }
    const DecodeResult r = decode_robust(ls, true);
    ASSERT_TRUE(validate_tree(r.graph)) << render(ls);
  }
}

TEST(StackStats, IndexFreeInputIsLinear) {
  const LabelSequence ls = labels("/* > < < >*/* <* \\*< >*");
  const StackStats st = decode_noncrossing(ls).stats;
  EXPECT_EQ(st.symbols_read, ls.symbol_count());
  EXPECT_EQ(st.pushes, count_symbols(ls, true));
  EXPECT_EQ(st.match_pops + st.peeks, count_symbols(ls, false));
  EXPECT_EQ(st.sweep_pops, count_symbols(ls, true, true));
  EXPECT_EQ(st.reinsertions, 0u);
  EXPECT_EQ(st.max_super_depth, 2u);
}

TEST(StackStats, IndexedInputCountsReinsertions) {
  const LabelSequence ls = labels("/* < >/* /*< <1 <2 >*2 >*1 >*");
  const StackStats st = decode_indexed(ls).stats;
  EXPECT_EQ(st.pushes, count_symbols(ls, true));
  EXPECT_EQ(st.match_pops + st.peeks, count_symbols(ls, false));
  // >*2 puts back two semibrackets and skips two superbrackets, >*1 one of
  // each
  EXPECT_EQ(st.reinsertions, 6u);
  EXPECT_EQ(st.max_super_depth, 3u);
  EXPECT_LE(st.accesses(), 8u * 9u);
}

}  // namespace
}  // namespace hierbrack
