#include "hierbrack/encoder.hpp"

#include <algorithm>
#include <set>

#include "hierbrack/decoder.hpp"

namespace hierbrack {

namespace {

// Symbols per position, before ordering.
using Slots = std::vector<std::vector<AnnotatedSymbol>>;

Slots place_symbols(const DepGraph& g, const RopeCover& cover) {
  Slots slots(static_cast<std::size_t>(g.size()) + 1);
  for (const Arc& s : cover.structural) {
    if (!g.contains(s))
      throw InvalidCoverError("structural arc " + to_string(s) + " not in graph");
  }
  for (const Arc& a : g.arcs()) {
    if (cover.is_structural(a)) {
      const bool right = a.rightward();
      slots[a.left()].push_back(
          {{right ? Shape::kOpenRight : Shape::kOpenLeft, Strength::kSuper, 0}, a});
      slots[a.right()].push_back(
          {{right ? Shape::kCloseRight : Shape::kCloseLeft, Strength::kSuper, 0}, a});
      continue;
    }
    const auto it = cover.aux_support.find(a);
    if (it == cover.aux_support.end())
      throw InvalidCoverError("auxiliary arc " + to_string(a) + " has no supporter");
    const Arc& s = it->second;
    if (!cover.is_structural(s) || !leans_on(a, s))
      throw InvalidCoverError("arc " + to_string(a) + " does not lean on " +
                              to_string(s));
    if (a.left() == s.left()) {
      slots[a.right()].push_back(
          {{a.rightward() ? Shape::kCloseRight : Shape::kCloseLeft, Strength::kSemi, 0},
           a});
    } else {
      slots[a.left()].push_back(
          {{a.rightward() ? Shape::kOpenRight : Shape::kOpenLeft, Strength::kSemi, 0},
           a});
    }
  }
  return slots;
}

LabelSequence to_sequence(const DepGraph& g, const Slots& slots) {
  LabelSequence ls;
  ls.labels.resize(slots.size());
  for (std::size_t p = 0; p < slots.size(); ++p)
    for (const AnnotatedSymbol& a : slots[p]) ls.labels[p].symbols.push_back(a.symbol);
  ls.deprels = g.dependent_deprels();
  return ls;
}

void enforce_cap(const LabelSequence& ls, const std::optional<std::uint32_t>& cap) {
  if (cap && ls.max_index() > *cap) throw IndexCapExceeded(ls.max_index(), *cap);
}

struct SimEntry {
  AnnotatedSymbol* slot;
  NodeId pos;
};

// Replays the indexed decoder on the ordered symbols and writes into each
// slot the index that makes the decoder produce the slot's arc.
void assign_indices(Slots& slots) {
  std::vector<SimEntry> stack;
  for (std::size_t p = 0; p < slots.size(); ++p) {
    const auto pos = static_cast<NodeId>(p);
    for (AnnotatedSymbol& cur : slots[p]) {
      BracketSymbol& sym = cur.symbol;
      if (sym.opening()) {
        stack.push_back({&cur, pos});
        continue;
      }
      const NodeId opener_pos = cur.arc.left();
      if (!sym.is_super()) {
        std::uint32_t above = 0;
        bool found = false;
        for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
          if (!it->slot->symbol.is_super()) continue;
          if (it->pos == opener_pos) {
            found = true;
            break;
          }
          ++above;
        }
        if (!found)
          throw EncodeError("no superbracket at " + std::to_string(opener_pos) +
                            " for " + to_string(cur.arc));
        sym.index = above;
        continue;
      }
      std::uint32_t skipped = 0;
      std::size_t k = stack.size();
      bool matched = false;
      while (k > 0) {
        --k;
        AnnotatedSymbol& e = *stack[k].slot;
        if (!e.symbol.is_super()) {
          const NodeId consumer = e.arc.right();
          if (consumer == pos) {
            stack.erase(stack.begin() + static_cast<std::ptrdiff_t>(k));
          } else if (consumer > pos) {
            ++e.symbol.index;
          } else {
            throw EncodeError("opening semibracket for " + to_string(e.arc) +
                              " outlived its closer");
          }
          continue;
        }
        if (e.arc == cur.arc) {
          stack.erase(stack.begin() + static_cast<std::ptrdiff_t>(k));
          matched = true;
          break;
        }
        if (completes(sym.shape, e.symbol.shape)) ++skipped;
      }
      if (!matched)
        throw EncodeError("opening superbracket for " + to_string(cur.arc) +
                          " not on the stack");
      sym.index = skipped;
    }
  }
  if (!stack.empty())
    throw EncodeError("opening bracket for " + to_string(stack.back().slot->arc) +
                      " never closed");
}

void self_check(const DepGraph& t, const LabelSequence& ls) {
  DecodeResult r = decode_indexed(ls);
  const DepGraph expected = t.with_deprels({});
  const DepGraph decoded = r.graph.with_deprels({});
  if (!r.diagnostics.empty() || !(decoded == expected))
    throw EncoderConsistencyError("indexed labels do not decode to the input tree",
                                  expected, decoded);
}

}  // namespace

LabelSequence encode_noncrossing(const DepGraph& g, const RopeCover& cover,
                                 NoncrossingOptions options) {
  if (!options.allow_crossing) {
    if (auto pair = find_crossing_pair(g))
      throw CrossingArcsError(pair->first, pair->second,
                              "arcs " + to_string(pair->first) + " and " +
                                  to_string(pair->second) + " cross");
  }
  Slots slots = place_symbols(g, cover);
  const bool tree = validate_tree(g).ok;
  for (auto& s : slots) canonical_sort(s, tree);
  return to_sequence(g, slots);
}

LabelSequence encode_nonprojective(const DepGraph& t, const RopeCover& cover,
                                   IndexedOptions options) {
  Slots slots = place_symbols(t, cover);
  for (auto& s : slots) canonical_sort(s, false);
  assign_indices(slots);
  LabelSequence ls = to_sequence(t, slots);
  self_check(t, ls);
  enforce_cap(ls, options.max_index);
  return ls;
}

std::string_view scheme_name(Scheme s) {
  switch (s) {
    case Scheme::kNaive: return "naive";
    case Scheme::kFourBit: return "fourbit";
    case Scheme::kOptimalProjective: return "optimal";
    case Scheme::kOptimalNonprojective: return "optimal-np";
  }
  return "unknown";
}

std::optional<Scheme> parse_scheme(std::string_view name) {
  if (name == "naive") return Scheme::kNaive;
  if (name == "fourbit" || name == "4bit") return Scheme::kFourBit;
  if (name == "optimal" || name == "optimal-projective") return Scheme::kOptimalProjective;
  if (name == "optimal-np" || name == "optimal-nonprojective")
    return Scheme::kOptimalNonprojective;
  return std::nullopt;
}

bool is_projective_scheme(Scheme s) {
  return s == Scheme::kFourBit || s == Scheme::kOptimalProjective;
}

RopeCover cover_for(const DepGraph& t, Scheme s) {
  switch (s) {
    case Scheme::kNaive: return naive_rope_cover(t);
    case Scheme::kFourBit: return fourbit_rope_cover(t);
    case Scheme::kOptimalProjective:
    case Scheme::kOptimalNonprojective: return proper_rope_cover(t);
  }
  return proper_rope_cover(t);
}

LabelSequence encode(const DepGraph& t, Scheme scheme, EncodeOptions options) {
  if (const TreeCheck check = validate_tree(t); !check)
    throw EncodeError("not a tree: " + std::string(to_string(check.defect)) +
                      " at node " + std::to_string(check.node));
  const RopeCover cover = cover_for(t, scheme);
  const auto pair = find_crossing_pair(t);
  LabelSequence ls;
  if (!pair) {
    ls = encode_noncrossing(t, cover);
  } else if (is_projective_scheme(scheme)) {
    if (!options.lenient)
      throw CrossingArcsError(pair->first, pair->second,
                              "arcs " + to_string(pair->first) + " and " +
                                  to_string(pair->second) + " cross; scheme " +
                                  std::string(scheme_name(scheme)) +
                                  " needs a projective tree");
    ls = encode_noncrossing(t, cover, {.allow_crossing = true});
  } else {
    ls = encode_nonprojective(t, cover, {options.max_index});
  }
  enforce_cap(ls, options.max_index);
  return ls;
}

}  // namespace hierbrack
