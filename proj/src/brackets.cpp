#include "hierbrack/brackets.hpp"

#include <algorithm>
#include <limits>

namespace hierbrack {

char shape_char(Shape s) {
  switch (s) {
    case Shape::kOpenRight: return '/';
    case Shape::kCloseRight: return '>';
    case Shape::kOpenLeft: return '<';
    case Shape::kCloseLeft: return '\\';
  }
  return '?';
}

std::uint32_t Label::max_index() const {
  std::uint32_t m = 0;
  for (const BracketSymbol& s : symbols) m = std::max(m, s.index);
  return m;
}

Label parse_label(std::string_view text) {
  Label label;
  std::size_t i = 0;
  while (i < text.size()) {
    BracketSymbol sym;
    switch (text[i]) {
      case '/': sym.shape = Shape::kOpenRight; break;
      case '>': sym.shape = Shape::kCloseRight; break;
      case '<': sym.shape = Shape::kOpenLeft; break;
      case '\\': sym.shape = Shape::kCloseLeft; break;
      default:
        if (text[i] >= '0' && text[i] <= '9')
          throw LabelParseError(i, "index digits without a preceding bracket");
        if (text[i] == '*')
          throw LabelParseError(i, "'*' without a preceding bracket");
        throw LabelParseError(i, std::string("unknown character '") + text[i] +
                                     "'");
    }
    ++i;
    if (i < text.size() && text[i] == '*') {
      sym.strength = Strength::kSuper;
      ++i;
    }
    std::uint64_t index = 0;
    const std::size_t digits_at = i;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
      index = index * 10 + static_cast<std::uint64_t>(text[i] - '0');
      if (index > std::numeric_limits<std::uint32_t>::max())
        throw LabelParseError(digits_at, "bracket index overflow");
      ++i;
    }
    sym.index = static_cast<std::uint32_t>(index);
    label.symbols.push_back(sym);
  }
  return label;
}

std::string render_symbol(const BracketSymbol& s) {
  std::string out(1, shape_char(s.shape));
  if (s.is_super()) out += '*';
  if (s.index > 0) out += std::to_string(s.index);
  return out;
}

std::string render_label(const Label& label) {
  std::string out;
  for (const BracketSymbol& s : label) out += render_symbol(s);
  return out;
}

void canonical_sort(std::vector<AnnotatedSymbol>& symbols, bool projective_order) {
  auto rank = [&](const AnnotatedSymbol& a) {
    // closers first; projective labels pin '\*' first and '/*' last
    int group = a.symbol.closing() ? 1 : 2;
    if (projective_order && a.symbol.is_super()) {
      if (a.symbol.shape == Shape::kCloseLeft) group = 0;
      if (a.symbol.shape == Shape::kOpenRight) group = 3;
    }
    return group;
  };
  std::stable_sort(symbols.begin(), symbols.end(),
                   [&](const AnnotatedSymbol& x, const AnnotatedSymbol& y) {
                     const int gx = rank(x), gy = rank(y);
                     if (gx != gy) return gx < gy;
                     const int lx = x.arc.length(), ly = y.arc.length();
                     if (x.symbol.closing()) {
                       if (lx != ly) return lx < ly;
                       return !x.symbol.is_super() && y.symbol.is_super();
                     }
                     if (lx != ly) return lx > ly;
                     return x.symbol.is_super() && !y.symbol.is_super();
                   });
}

Label canonicalize(std::vector<AnnotatedSymbol> symbols, bool projective_order) {
  canonical_sort(symbols, projective_order);
  Label label;
  label.symbols.reserve(symbols.size());
  for (const AnnotatedSymbol& a : symbols) label.symbols.push_back(a.symbol);
  return label;
}

bool matches_projective_form(const Label& label) {
  auto it = label.begin();
  const auto end = label.end();
  auto is = [](const BracketSymbol& s, Shape shape, Strength strength) {
    return s.shape == shape && s.strength == strength && s.index == 0;
  };
  if (it != end && is(*it, Shape::kCloseLeft, Strength::kSuper)) ++it;
  if (it == end) return false;
  const BracketSymbol& mid = *it;
  if (mid.index != 0 ||
      !(mid.shape == Shape::kCloseRight || mid.shape == Shape::kOpenLeft))
    return false;
  ++it;
  if (it != end && is(*it, Shape::kOpenRight, Strength::kSuper)) ++it;
  return it == end;
}

FourBitLabel FourBitLabel::from_code(unsigned code) {
  return {(code & 8u) != 0, (code & 4u) != 0, (code & 2u) != 0,
          (code & 1u) != 0};
}

unsigned FourBitLabel::code() const {
  return (b0 ? 8u : 0u) | (b1 ? 4u : 0u) | (b2 ? 2u : 0u) | (b3 ? 1u : 0u);
}

std::string FourBitLabel::bits() const {
  return std::string{b0 ? '1' : '0', b1 ? '1' : '0', b2 ? '1' : '0',
                     b3 ? '1' : '0'};
}

Label fourbit_to_label(const FourBitLabel& bits) {
  Label label;
  if (bits.b2) label.symbols.push_back({Shape::kCloseLeft, Strength::kSuper, 0});
  label.symbols.push_back({bits.b0 ? Shape::kCloseRight : Shape::kOpenLeft,
                           bits.b1 ? Strength::kSuper : Strength::kSemi, 0});
  if (bits.b3) label.symbols.push_back({Shape::kOpenRight, Strength::kSuper, 0});
  return label;
}

FourBitLabel label_to_fourbit(const Label& label) {
  if (!matches_projective_form(label))
    throw std::domain_error("label '" + render_label(label) +
                            "' has no 4-bit equivalent");
  FourBitLabel bits;
  std::size_t i = 0;
  if (label.symbols[i].shape == Shape::kCloseLeft) {
    bits.b2 = true;
    ++i;
  }
  bits.b0 = label.symbols[i].shape == Shape::kCloseRight;
  bits.b1 = label.symbols[i].is_super();
  bits.b3 = i + 1 < label.size();
  return bits;
}

}  // namespace hierbrack
