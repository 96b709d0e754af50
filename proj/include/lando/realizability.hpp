#pragma once

// Realizing bijections between dual trees.
//
// Let G and H be the dual trees of circle systems M and N, with the same
// number of edges. A bijection h between their edges is realizing when, for
// every two distinct same-colored vertices A and B of G, the image sets
// h(δA) and h(δB) are unlinked in H (δA = edges incident to A). A bijection
// of circles is realizable by two transversally intersecting spheres exactly
// when the corresponding edge bijection is realizing.

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>

#include "lando/bijection.hpp"
#include "lando/tree.hpp"

namespace lando {

enum class SideFailure {
  kAOffSideOfB,  // h(δA) is not on one side of h(δB)
  kBOffSideOfA,  // h(δB) is not on one side of h(δA)
  kBoth,
};

struct Violation {
  VertexId a = 0;
  VertexId b = 0;
  SideFailure failure = SideFailure::kBoth;

  bool operator==(const Violation&) const = default;
};

struct Verdict {
  // Empty when the bijection is realizing; otherwise the first failing pair
  // in same_colored_pairs order.
  std::optional<Violation> violation;

  bool realizing() const { return !violation.has_value(); }
};

// O(k^2): one parity table of h(δB) in H per vertex B of G, then every
// same-colored pair is two uniform-parity scans. Throws kSizeMismatch or
// kInvalidBijection.
Verdict is_realizing(const Tree& g, const Tree& h_tree, const Bijection& h);

enum class Strategy { kBrute, kPruned };

struct SearchOptions {
  Strategy strategy = Strategy::kPruned;
  // Restrict the image of the first assigned edge to one representative per
  // edge orbit of h_tree. Pruned strategy only.
  bool symmetry = false;
  // Worker threads for first-level branches. Pruned strategy only; results
  // and node counts are identical for every value.
  std::size_t jobs = 1;
};

struct SearchReport {
  std::optional<Bijection> witness;
  // Brute: candidate bijections tested. Pruned: edge assignments made.
  std::uint64_t nodes_explored = 0;
  Strategy strategy = Strategy::kPruned;
  std::chrono::nanoseconds elapsed{0};
};

// All k! bijections, images ordered lexicographically by h_tree label
// (next_permutation order); stops at the first realizing one.
SearchReport brute_force_find(const Tree& g, const Tree& h_tree);

// Number of realizing bijections, by exhaustive enumeration.
std::uint64_t count_realizing(const Tree& g, const Tree& h_tree);

// Backtracking over G's edges in BFS order from its lowest-id centroid;
// candidate images in h_tree edge-id order. A same-colored pair is checked
// as soon as both δ-sets are fully assigned.
SearchReport find_realizing(const Tree& g, const Tree& h_tree,
                            const SearchOptions& options = {});

// Whether the two circle systems admit spheres intersecting as required:
// find_realizing with root-level symmetry pruning.
SearchReport decide_lando(const Tree& g, const Tree& h_tree,
                          std::size_t jobs = 1);

}  // namespace lando
