#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hierbrack/deptree.hpp"

namespace hierbrack {

// Text form: '/' open-right, '>' close-right, '<' open-left, '\' close-left.
enum class Shape : std::uint8_t { kOpenRight, kCloseRight, kOpenLeft, kCloseLeft };
enum class Strength : std::uint8_t { kSemi, kSuper };

struct BracketSymbol {
  Shape shape = Shape::kOpenRight;
  Strength strength = Strength::kSemi;
  std::uint32_t index = 0;  // 0 = unindexed

  bool opening() const {
    return shape == Shape::kOpenRight || shape == Shape::kOpenLeft;
  }
  bool closing() const { return !opening(); }
  bool is_super() const { return strength == Strength::kSuper; }

  friend bool operator==(const BracketSymbol&, const BracketSymbol&) = default;
};

// Closing superbracket `c` completes opening superbracket `o`.
inline bool completes(Shape c, Shape o) {
  return (c == Shape::kCloseRight && o == Shape::kOpenRight) ||
         (c == Shape::kCloseLeft && o == Shape::kOpenLeft);
}

char shape_char(Shape s);

struct Label {
  std::vector<BracketSymbol> symbols;

  std::size_t size() const { return symbols.size(); }
  bool empty() const { return symbols.empty(); }
  auto begin() const { return symbols.begin(); }
  auto end() const { return symbols.end(); }
  std::uint32_t max_index() const;

  friend bool operator==(const Label&, const Label&) = default;
};

class LabelParseError : public std::invalid_argument {
 public:
  LabelParseError(std::size_t offset, const std::string& what)
      : std::invalid_argument("offset " + std::to_string(offset) + ": " + what),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// token = shape-char ['*'] [digits]; a label is tokens with no separator.
Label parse_label(std::string_view text);
std::string render_label(const Label& label);
std::string render_symbol(const BracketSymbol& s);

// A symbol tagged with the arc it encodes; only exists while encoding.
struct AnnotatedSymbol {
  BracketSymbol symbol;
  Arc arc;
};

// Closers by increasing arc length, then openers by decreasing arc length.
// Length ties (only possible with two-cycles) put semibrackets outside:
// closing semis before closing supers, opening supers before opening
// semis. With `projective_order`, closing '\*' is also moved to the front
// and opening '/*' to the back.
void canonical_sort(std::vector<AnnotatedSymbol>& symbols,
                    bool projective_order = false);
Label canonicalize(std::vector<AnnotatedSymbol> symbols,
                   bool projective_order = false);

// (\*)? (> | >* | < | <*) (/*)? with no indices.
bool matches_projective_form(const Label& label);

// Bits b0 b1 b2 b3: b0 right dependent, b1 outermost dependent of its head,
// b2 has left dependents, b3 has right dependents.
struct FourBitLabel {
  bool b0 = false, b1 = false, b2 = false, b3 = false;

  // code = b0 b1 b2 b3 read as a binary number.
  static FourBitLabel from_code(unsigned code);
  unsigned code() const;
  std::string bits() const;

  friend bool operator==(const FourBitLabel&, const FourBitLabel&) = default;
};

Label fourbit_to_label(const FourBitLabel& bits);
// Throws std::domain_error outside the 16-label image.
FourBitLabel label_to_fourbit(const Label& label);

}  // namespace hierbrack
