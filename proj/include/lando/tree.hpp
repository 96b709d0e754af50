#pragma once

// Dual trees of circle systems on a sphere.
//
// A circle system M on S^2 is represented by its dual tree: one vertex per
// complementary region, one edge per circle joining the two regions it
// separates. Edges carry the circle labels; vertex ids are dense and local.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lando {

using VertexId = std::size_t;
using EdgeId = std::size_t;

struct Edge {
  EdgeId id = 0;
  VertexId u = 0;
  VertexId v = 0;
  std::string label;

  VertexId other(VertexId w) const { return w == u ? v : u; }
  bool operator==(const Edge&) const = default;
};

struct EdgeSpec {
  VertexId u = 0;
  VertexId v = 0;
  std::string label;
};

struct Incidence {
  VertexId to = 0;
  EdgeId edge = 0;
};

bool is_valid_label(std::string_view label);

class Tree {
 public:
  // The one-vertex, zero-edge tree (empty circle system).
  Tree();

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  const std::string& label(EdgeId e) const { return edges_.at(e).label; }
  std::span<const Incidence> neighbors(VertexId v) const {
    return adjacency_.at(v);
  }
  std::size_t degree(VertexId v) const { return adjacency_.at(v).size(); }

  std::optional<EdgeId> find_edge(std::string_view label) const;

  // Traversal rooted at vertex 0. bfs_order()[0] == 0; every other vertex
  // appears after its parent.
  std::span<const VertexId> bfs_order() const { return bfs_order_; }
  VertexId parent(VertexId v) const { return parent_.at(v); }
  EdgeId parent_edge(VertexId v) const { return parent_edge_.at(v); }

  // Same vertex count and identical edge list (ids, endpoints, labels).
  bool operator==(const Tree& other) const {
    return vertex_count() == other.vertex_count() && edges_ == other.edges_;
  }

 private:
  friend Tree build_tree(std::span<const EdgeSpec> edges);

  explicit Tree(std::size_t vertex_count, std::vector<Edge> edges);

  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
  std::vector<VertexId> bfs_order_;
  std::vector<VertexId> parent_;
  std::vector<EdgeId> parent_edge_;
};

// Validates and builds a tree. Vertex ids must be dense (0..max id); the
// vertex count is max id + 1. Throws Error with kEmptyInput, kSelfLoop,
// kParallelEdge, kCycle, kDisconnected, kDuplicateLabel or kInvalidLabel.
Tree build_tree(std::span<const EdgeSpec> edges);
Tree build_tree(std::initializer_list<EdgeSpec> edges);

// A subset of the edges of one tree.
class EdgeSet {
 public:
  EdgeSet() = default;
  explicit EdgeSet(std::size_t universe);
  EdgeSet(std::size_t universe, std::initializer_list<EdgeId> ids);
  EdgeSet(std::size_t universe, std::span<const EdgeId> ids);

  static EdgeSet all(std::size_t universe);

  std::size_t universe() const { return universe_; }
  std::size_t size() const;
  bool empty() const;

  bool contains(EdgeId e) const {
    return e < universe_ && (words_[e / 64] >> (e % 64)) & 1U;
  }
  void insert(EdgeId e);
  void erase(EdgeId e);

  bool intersects(const EdgeSet& other) const;
  std::vector<EdgeId> members() const;

  bool operator==(const EdgeSet&) const = default;

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

EdgeSet incident_edges(const Tree& t, VertexId v);

struct VertexColoring {
  std::vector<std::uint8_t> color;

  std::uint8_t operator[](VertexId v) const { return color.at(v); }
};

// color(v) is the parity of the distance from vertex 0.
VertexColoring bicolor(const Tree& t);

// parity[v] is the parity of the number of crossing_set edges on the path
// from reference_vertex (always 0) to v.
struct ParityTable {
  VertexId reference_vertex = 0;
  EdgeSet crossing_set;
  std::vector<std::uint8_t> parity;
};

ParityTable parity_table(const Tree& t, const EdgeSet& q);

// Unordered pairs {A, B}, A < B, of distinct same-colored vertices, sorted
// lexicographically.
std::vector<std::pair<VertexId, VertexId>> same_colored_pairs(const Tree& t);

// One or two vertices minimising the largest component left after removal,
// in increasing id order.
std::vector<VertexId> centroids(const Tree& t);

// AHU encoding of the subtree hanging from `root` when the edge to `blocked`
// (if any) is cut. Children encodings are sorted, so equal strings mean
// isomorphic rooted trees.
std::string rooted_form(const Tree& t, VertexId root,
                        std::optional<VertexId> blocked = std::nullopt);

// Orbits of the edges under the automorphism group, each sorted, ordered by
// smallest member.
std::vector<std::vector<EdgeId>> edge_orbits(const Tree& t);

}  // namespace lando
