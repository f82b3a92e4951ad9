#include "hierbrack/decoder.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace hierbrack {

std::string_view to_string(DecodeAction a) {
  switch (a) {
    case DecodeAction::kUnmatchedCloser: return "discarded-unmatched-closer";
    case DecodeAction::kMismatchedSuper: return "mismatched-superbracket";
    case DecodeAction::kClampedIndex: return "clamped-index";
    case DecodeAction::kIgnoredIndex: return "ignored-index";
    case DecodeAction::kLeftoverOpener: return "ignored-unclosed-opener";
    case DecodeAction::kSelfLoop: return "skipped-self-loop";
    case DecodeAction::kArcIntoRoot: return "skipped-arc-into-root";
    case DecodeAction::kDuplicateArc: return "skipped-duplicate-arc";
    case DecodeAction::kSecondHead: return "skipped-second-head";
    case DecodeAction::kCycle: return "skipped-cycle";
    case DecodeAction::kAttachedToRoot: return "attached-to-root";
  }
  return "unknown";
}

std::string format_diagnostic(const Diagnostic& d) {
  std::string out = std::to_string(d.position) + "\t" +
                    (d.symbol.empty() ? "_" : d.symbol) + "\t" +
                    std::string(to_string(d.action));
  if (!d.detail.empty()) out += "\t" + d.detail;
  return out;
}

std::size_t DecodeResult::symbol_diagnostics() const {
  return diagnostics.size() - attachments();
}

std::size_t DecodeResult::attachments() const {
  return static_cast<std::size_t>(
      std::count_if(diagnostics.begin(), diagnostics.end(), [](const Diagnostic& d) {
        return d.action == DecodeAction::kAttachedToRoot;
      }));
}

namespace {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n), rank_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
  }

 private:
  std::vector<int> parent_;
  std::vector<int> rank_;
};

// Receives every arc the stack machine proposes and keeps the admissible
// ones.
class ArcCollector {
 public:
  ArcCollector(int n, bool want_tree, std::vector<Diagnostic>& diags)
      : n_(n), want_tree_(want_tree), diags_(diags), head_(n + 1, -1), uf_(n + 1) {}

  void add(NodeId head, NodeId dep, int position, const BracketSymbol& sym) {
    const Arc arc{head, dep};
    auto reject = [&](DecodeAction action) {
      diags_.push_back({position, render_symbol(sym), action, to_string(arc)});
    };
    if (dep == 0) return reject(DecodeAction::kArcIntoRoot);
    if (head == dep) return reject(DecodeAction::kSelfLoop);
    if (want_tree_) {
      if (head_[dep] == head) return reject(DecodeAction::kDuplicateArc);
      if (head_[dep] >= 0) return reject(DecodeAction::kSecondHead);
      if (uf_.find(head) == uf_.find(dep)) return reject(DecodeAction::kCycle);
      uf_.unite(head, dep);
    } else if (!seen_.insert(arc).second) {
      return reject(DecodeAction::kDuplicateArc);
    }
    if (head_[dep] < 0) head_[dep] = head;
    arcs_.push_back(arc);
  }

  // Headless tokens go under node 0's only dependent when there is exactly
  // one, otherwise under node 0.
  void attach_headless() {
    NodeId root = 0;
    int root_deps = 0;
    for (const Arc& a : arcs_)
      if (a.head == 0) {
        ++root_deps;
        root = a.dep;
      }
    if (root_deps != 1) root = 0;
    for (NodeId v = 1; v <= n_; ++v) {
      if (head_[v] >= 0) continue;
      head_[v] = root;
      arcs_.push_back({root, v});
      diags_.push_back({v, "", DecodeAction::kAttachedToRoot,
                        to_string(Arc{root, v})});
    }
  }

  const std::vector<Arc>& arcs() const { return arcs_; }

 private:
  int n_;
  bool want_tree_;
  std::vector<Diagnostic>& diags_;
  std::vector<NodeId> head_;
  UnionFind uf_;
  std::set<Arc> seen_;
  std::vector<Arc> arcs_;
};

enum class Algorithm { kPlain, kIndexed };

struct Entry {
  BracketSymbol sym;
  NodeId pos;
};

// The decoding stack. With no collector attached it only counts closing
// superbrackets that fall off the bottom (used to rebuild the root label).
class StackMachine {
 public:
  StackMachine(Algorithm alg, ArcCollector* sink, std::vector<Diagnostic>* diags,
               StackStats* stats)
      : alg_(alg), sink_(sink), diags_(diags), stats_(stats ? stats : &scratch_) {}

  void feed(int position, const BracketSymbol& sym) {
    ++stats_->symbols_read;
    if (alg_ == Algorithm::kPlain && sym.index > 0)
      note(position, sym, DecodeAction::kIgnoredIndex, "");
    if (sym.opening())
      push(position, sym);
    else if (!sym.is_super())
      close_semi(position, sym);
    else if (alg_ == Algorithm::kPlain)
      close_super_plain(position, sym);
    else
      close_super_indexed(position, sym);
  }

  void report_leftovers() {
    for (const Entry& e : stack_)
      note(e.pos, e.sym, DecodeAction::kLeftoverOpener, "");
  }

  int unmatched_super_closers() const { return unmatched_super_closers_; }

 private:
  void note(int position, const BracketSymbol& sym, DecodeAction action,
            std::string detail) {
    if (diags_)
      diags_->push_back({position, render_symbol(sym), action, std::move(detail)});
  }

  void arc(NodeId head, NodeId dep, int position, const BracketSymbol& sym) {
    if (sink_) sink_->add(head, dep, position, sym);
  }

  void push(int position, const BracketSymbol& sym) {
    BracketSymbol stored = sym;
    if (alg_ == Algorithm::kPlain) stored.index = 0;
    stack_.push_back({stored, position});
    ++stats_->pushes;
    if (sym.is_super()) {
      ++supers_;
      stats_->max_super_depth = std::max(stats_->max_super_depth, supers_);
    }
  }

  void complete_semi(const Entry& semi, int position, const BracketSymbol& closer) {
    ++stats_->sweep_pops;
    if (semi.sym.shape == Shape::kOpenRight)
      arc(semi.pos, position, position, closer);
    else
      arc(position, semi.pos, position, closer);
  }

  void close_semi(int position, const BracketSymbol& sym) {
    const std::uint32_t want = alg_ == Algorithm::kPlain ? 0 : sym.index;
    std::uint32_t seen = 0;
    const Entry* target = nullptr;
    for (auto it = stack_.rbegin(); it != stack_.rend(); ++it) {
      if (!it->sym.is_super()) continue;
      target = &*it;
      if (seen++ == want) break;
    }
    if (!target) {
      ++stats_->failed_pops;
      note(position, sym, DecodeAction::kUnmatchedCloser, "no superbracket on stack");
      return;
    }
    ++stats_->peeks;
    if (seen <= want)
      note(position, sym, DecodeAction::kClampedIndex,
           "used superbracket " + std::to_string(seen) + " of " +
               std::to_string(want + 1));
    if (sym.shape == Shape::kCloseRight)
      arc(target->pos, position, position, sym);
    else
      arc(position, target->pos, position, sym);
  }

  void close_super_plain(int position, const BracketSymbol& sym) {
    while (!stack_.empty() && !stack_.back().sym.is_super()) {
      const Entry semi = stack_.back();
      stack_.pop_back();
      complete_semi(semi, position, sym);
    }
    if (stack_.empty()) {
      fail(position, sym);
      return;
    }
    const Entry top = stack_.back();
    stack_.pop_back();
    --supers_;
    ++stats_->match_pops;
    if (completes(sym.shape, top.sym.shape))
      finish_super(top, position, sym);
    else
      note(position, sym, DecodeAction::kMismatchedSuper,
           "opened at " + std::to_string(top.pos) + " by " + render_symbol(top.sym));
  }

  // Walks down from the top. Opening semibrackets with a positive index are
  // put back one lower; the others are completed here. Superbrackets the
  // closer cannot complete are transparent; completable ones are skipped
  // while the closer's index is positive.
  void close_super_indexed(int position, const BracketSymbol& sym) {
    std::uint32_t skip = sym.index;
    std::size_t cur = stack_.size();
    while (cur > 0) {
      --cur;
      Entry& e = stack_[cur];
      if (!e.sym.is_super()) {
        if (e.sym.index > 0) {
          --e.sym.index;
          ++stats_->reinsertions;
          continue;
        }
        const Entry semi = e;
        stack_.erase(stack_.begin() + static_cast<std::ptrdiff_t>(cur));
        complete_semi(semi, position, sym);
        continue;
      }
      if (!completes(sym.shape, e.sym.shape)) continue;
      if (skip > 0) {
        --skip;
        ++stats_->reinsertions;
        continue;
      }
      const Entry match = e;
      stack_.erase(stack_.begin() + static_cast<std::ptrdiff_t>(cur));
      --supers_;
      ++stats_->match_pops;
      finish_super(match, position, sym);
      return;
    }
    fail(position, sym);
  }

  void finish_super(const Entry& opener, int position, const BracketSymbol& closer) {
    if (closer.shape == Shape::kCloseRight)
      arc(opener.pos, position, position, closer);
    else
      arc(position, opener.pos, position, closer);
  }

  void fail(int position, const BracketSymbol& sym) {
    ++stats_->failed_pops;
    ++unmatched_super_closers_;
    note(position, sym, DecodeAction::kUnmatchedCloser, "no superbracket to match");
  }

  Algorithm alg_;
  ArcCollector* sink_;
  std::vector<Diagnostic>* diags_;
  StackStats scratch_;
  StackStats* stats_;
  std::vector<Entry> stack_;
  std::size_t supers_ = 0;
  int unmatched_super_closers_ = 0;
};

DecodeResult run(const LabelSequence& ls, Algorithm alg, bool want_tree) {
  const int n = ls.size();
  DecodeResult result;

  Label root;
  if (ls.has_root_label) {
    if (!ls.labels.empty()) root = ls.labels[0];
  } else {
    // The root label is whatever opening superbrackets the rest of the
    // sequence leaves unmatched.
    StackMachine probe(alg, nullptr, nullptr, nullptr);
    for (int p = 1; p <= n; ++p)
      for (const BracketSymbol& sym : ls.labels[p]) probe.feed(p, sym);
    result.root_brackets = probe.unmatched_super_closers();
    root.symbols.assign(result.root_brackets,
                        BracketSymbol{Shape::kOpenRight, Strength::kSuper, 0});
  }

  ArcCollector sink(n, want_tree, result.diagnostics);
  StackMachine machine(alg, &sink, &result.diagnostics, &result.stats);
  for (const BracketSymbol& sym : root) machine.feed(0, sym);
  for (int p = 1; p <= n; ++p)
    for (const BracketSymbol& sym : ls.labels[p]) machine.feed(p, sym);
  machine.report_leftovers();
  if (want_tree) sink.attach_headless();

  std::vector<std::string> rels;
  rels.reserve(sink.arcs().size());
  for (const Arc& a : sink.arcs())
    rels.push_back(static_cast<std::size_t>(a.dep) < ls.deprels.size()
                       ? ls.deprels[a.dep]
                       : std::string());
  result.graph = DepGraph(n, sink.arcs(), std::move(rels));
  return result;
}

}  // namespace

DecodeResult decode_noncrossing(const LabelSequence& ls) {
  return run(ls, Algorithm::kPlain, false);
}

DecodeResult decode_indexed(const LabelSequence& ls) {
  return run(ls, Algorithm::kIndexed, false);
}

DecodeResult decode_robust(const LabelSequence& ls, bool want_tree) {
  return run(ls, Algorithm::kIndexed, want_tree);
}

}  // namespace hierbrack
