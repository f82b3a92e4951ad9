#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "hierbrack/deptree.hpp"
#include "hierbrack/label_sequence.hpp"
#include "hierbrack/ropecover.hpp"

namespace hierbrack {

class EncodeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CrossingArcsError : public EncodeError {
 public:
  CrossingArcsError(Arc a, Arc b, const std::string& what)
      : EncodeError(what), first_(a), second_(b) {}
  Arc first() const { return first_; }
  Arc second() const { return second_; }

 private:
  Arc first_, second_;
};

class InvalidCoverError : public EncodeError {
 public:
  using EncodeError::EncodeError;
};

class IndexCapExceeded : public EncodeError {
 public:
  IndexCapExceeded(std::uint32_t required, std::uint32_t cap)
      : EncodeError("tree needs bracket index " + std::to_string(required) +
                    " above the cap of " + std::to_string(cap)),
        required_(required) {}
  std::uint32_t required() const { return required_; }

 private:
  std::uint32_t required_;
};

// The stack simulation disagreed with the decoder. Never expected to fire.
class EncoderConsistencyError : public EncodeError {
 public:
  EncoderConsistencyError(const std::string& what, DepGraph expected,
                          DepGraph decoded)
      : EncodeError(what),
        expected_(std::move(expected)),
        decoded_(std::move(decoded)) {}
  const DepGraph& expected() const { return expected_; }
  const DepGraph& decoded() const { return decoded_; }

 private:
  DepGraph expected_, decoded_;
};

struct NoncrossingOptions {
  // Skip the crossing-arc check; the labels then need not decode back to
  // the input. Used for coverage measurements of projective schemes.
  bool allow_crossing = false;
};

// Hierarchical bracketing of a graph without crossing arcs, induced by
// `cover`. All indices are 0; position 0 carries the root's label.
LabelSequence encode_noncrossing(const DepGraph& g, const RopeCover& cover,
                                 NoncrossingOptions options = {});

struct IndexedOptions {
  std::optional<std::uint32_t> max_index;
};

// Indexed bracketing for trees with crossing arcs. Indices come from a
// simulation of the indexed decoder's stack; the result is decoded and
// compared with `t` before returning.
LabelSequence encode_nonprojective(const DepGraph& t, const RopeCover& cover,
                                   IndexedOptions options = {});

enum class Scheme { kNaive, kFourBit, kOptimalProjective, kOptimalNonprojective };

std::string_view scheme_name(Scheme s);
// Accepts naive, fourbit, optimal (= optimal-projective), optimal-np.
std::optional<Scheme> parse_scheme(std::string_view name);
bool is_projective_scheme(Scheme s);

RopeCover cover_for(const DepGraph& t, Scheme s);

struct EncodeOptions {
  std::optional<std::uint32_t> max_index;
  // Projective schemes encode crossing trees anyway instead of failing.
  bool lenient = false;
};

// Tree encoding under a named scheme. Naive falls back to indexed brackets
// on crossing trees; projective schemes reject them with CrossingArcsError
// unless `lenient`.
LabelSequence encode(const DepGraph& t, Scheme scheme, EncodeOptions options = {});

}  // namespace hierbrack
