#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "hierbrack/deptree.hpp"

namespace hierbrack {

inline constexpr int kMaxEnumerationTokens = 7;

class EnumerationTooLarge : public std::length_error {
 public:
  using std::length_error::length_error;
};

// (n + 1)^n: head vectors over tokens 1..n.
std::uint64_t head_vector_count(int n);

// Decodes `code` as base-(n+1) digits, digit k being the head of token
// k + 1. Returns nullopt unless the head vector forms a tree.
std::optional<DepGraph> tree_from_code(int n, std::uint64_t code);

// Every tree over n tokens in increasing code order.
void for_each_tree(int n, bool projective_only,
                   const std::function<void(const DepGraph&)>& visit);
std::vector<DepGraph> enumerate_trees(int n, bool projective_only);
std::uint64_t count_trees(int n, bool projective_only);

// Uniform head vector, resampled until it is a tree (and projective unless
// `allow_nonprojective`). Not uniform over tree shapes.
DepGraph random_tree(int n, std::uint64_t seed, bool allow_nonprojective = true);

// Resampled until the tree has crossing arcs; needs n >= 3.
DepGraph random_nonprojective_tree(int n, std::uint64_t seed);

}  // namespace hierbrack
