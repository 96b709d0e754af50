#include "lando/tree.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>

#include "lando/error.hpp"

namespace lando {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

std::string describe(const EdgeSpec& e) {
  return "'" + e.label + "' (" + std::to_string(e.u) + " -- " +
         std::to_string(e.v) + ")";
}

}  // namespace

bool is_valid_label(std::string_view label) {
  if (label.empty()) return false;
  return std::all_of(label.begin(), label.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
           (c >= '0' && c <= '9') || c == '_';
  });
}

Tree::Tree() : Tree(1, {}) {}

Tree::Tree(std::size_t vertex_count, std::vector<Edge> edges)
    : edges_(std::move(edges)),
      adjacency_(vertex_count),
      parent_(vertex_count, 0),
      parent_edge_(vertex_count, 0) {
  for (const Edge& e : edges_) {
    adjacency_[e.u].push_back({e.v, e.id});
    adjacency_[e.v].push_back({e.u, e.id});
  }
  bfs_order_.reserve(vertex_count);
  std::vector<bool> seen(vertex_count, false);
  bfs_order_.push_back(0);
  seen[0] = true;
  for (std::size_t head = 0; head < bfs_order_.size(); ++head) {
    const VertexId v = bfs_order_[head];
    for (const Incidence& inc : adjacency_[v]) {
      if (seen[inc.to]) continue;
      seen[inc.to] = true;
      parent_[inc.to] = v;
      parent_edge_[inc.to] = inc.edge;
      bfs_order_.push_back(inc.to);
    }
  }
}

std::optional<EdgeId> Tree::find_edge(std::string_view label) const {
  for (const Edge& e : edges_) {
    if (e.label == label) return e.id;
  }
  return std::nullopt;
}

Tree build_tree(std::initializer_list<EdgeSpec> edges) {
  return build_tree(std::span<const EdgeSpec>(edges.begin(), edges.size()));
}

Tree build_tree(std::span<const EdgeSpec> edges) {
  if (edges.empty()) {
    throw Error(ErrorCode::kEmptyInput, "edge list is empty");
  }
  std::set<std::string_view> labels;
  std::set<std::pair<VertexId, VertexId>> pairs;
  VertexId max_vertex = 0;
  for (const EdgeSpec& e : edges) {
    if (!is_valid_label(e.label)) {
      throw Error(ErrorCode::kInvalidLabel,
                  "invalid edge label '" + e.label + "'");
    }
    if (!labels.insert(e.label).second) {
      throw Error(ErrorCode::kDuplicateLabel,
                  "duplicate edge label '" + e.label + "'");
    }
    if (e.u == e.v) {
      throw Error(ErrorCode::kSelfLoop, "self-loop at edge " + describe(e));
    }
    if (!pairs.insert(std::minmax(e.u, e.v)).second) {
      throw Error(ErrorCode::kParallelEdge,
                  "parallel edge " + describe(e));
    }
    max_vertex = std::max({max_vertex, e.u, e.v});
  }
  const std::size_t n = max_vertex + 1;
  DisjointSets components(n);
  for (const EdgeSpec& e : edges) {
    if (!components.unite(e.u, e.v)) {
      throw Error(ErrorCode::kCycle, "edge " + describe(e) + " closes a cycle");
    }
  }
  if (edges.size() != n - 1) {
    for (VertexId v = 0; v < n; ++v) {
      if (components.find(v) != components.find(0)) {
        throw Error(ErrorCode::kDisconnected,
                    "vertex " + std::to_string(v) +
                        " is not connected to vertex 0");
      }
    }
  }
  std::vector<Edge> built;
  built.reserve(edges.size());
  for (const EdgeSpec& e : edges) {
    built.push_back({built.size(), e.u, e.v, e.label});
  }
  return Tree(n, std::move(built));
}

EdgeSet::EdgeSet(std::size_t universe)
    : universe_(universe), words_((universe + 63) / 64, 0) {}

EdgeSet::EdgeSet(std::size_t universe, std::initializer_list<EdgeId> ids)
    : EdgeSet(universe, std::span<const EdgeId>(ids.begin(), ids.size())) {}

EdgeSet::EdgeSet(std::size_t universe, std::span<const EdgeId> ids)
    : EdgeSet(universe) {
  for (EdgeId e : ids) insert(e);
}

EdgeSet EdgeSet::all(std::size_t universe) {
  EdgeSet s(universe);
  for (EdgeId e = 0; e < universe; ++e) s.insert(e);
  return s;
}

std::size_t EdgeSet::size() const {
  std::size_t n = 0;
  for (std::uint64_t w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool EdgeSet::empty() const {
  return std::all_of(words_.begin(), words_.end(),
                     [](std::uint64_t w) { return w == 0; });
}

void EdgeSet::insert(EdgeId e) {
  if (e >= universe_) {
    throw Error(ErrorCode::kInvalidEdge,
                "edge id " + std::to_string(e) + " out of range");
  }
  words_[e / 64] |= std::uint64_t{1} << (e % 64);
}

void EdgeSet::erase(EdgeId e) {
  if (e < universe_) words_[e / 64] &= ~(std::uint64_t{1} << (e % 64));
}

bool EdgeSet::intersects(const EdgeSet& other) const {
  const std::size_t n = std::min(words_.size(), other.words_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (words_[i] & other.words_[i]) return true;
  }
  return false;
}

std::vector<EdgeId> EdgeSet::members() const {
  std::vector<EdgeId> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t bits = words_[w];
    while (bits) {
      out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

EdgeSet incident_edges(const Tree& t, VertexId v) {
  if (v >= t.vertex_count()) {
    throw Error(ErrorCode::kInvalidVertex,
                "vertex " + std::to_string(v) + " out of range");
  }
  EdgeSet s(t.edge_count());
  for (const Incidence& inc : t.neighbors(v)) s.insert(inc.edge);
  return s;
}

VertexColoring bicolor(const Tree& t) {
  VertexColoring c;
  c.color.assign(t.vertex_count(), 0);
  for (VertexId v : t.bfs_order().subspan(1)) {
    c.color[v] = c.color[t.parent(v)] ^ 1U;
  }
  return c;
}

ParityTable parity_table(const Tree& t, const EdgeSet& q) {
  ParityTable table;
  table.crossing_set = q;
  table.parity.assign(t.vertex_count(), 0);
  for (VertexId v : t.bfs_order().subspan(1)) {
    table.parity[v] =
        table.parity[t.parent(v)] ^ (q.contains(t.parent_edge(v)) ? 1U : 0U);
  }
  return table;
}

std::vector<std::pair<VertexId, VertexId>> same_colored_pairs(const Tree& t) {
  const VertexColoring c = bicolor(t);
  std::vector<std::pair<VertexId, VertexId>> out;
  for (VertexId a = 0; a < t.vertex_count(); ++a) {
    for (VertexId b = a + 1; b < t.vertex_count(); ++b) {
      if (c[a] == c[b]) out.emplace_back(a, b);
    }
  }
  return out;
}

std::vector<VertexId> centroids(const Tree& t) {
  const std::size_t n = t.vertex_count();
  std::vector<std::size_t> size(n, 1);
  const auto order = t.bfs_order();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (*it != 0) size[t.parent(*it)] += size[*it];
  }
  std::vector<VertexId> out;
  for (VertexId v = 0; v < n; ++v) {
    std::size_t largest = n - size[v];
    for (const Incidence& inc : t.neighbors(v)) {
      if (v != 0 && inc.to == t.parent(v)) continue;
      largest = std::max(largest, size[inc.to]);
    }
    if (2 * largest <= n) out.push_back(v);
  }
  return out;
}

std::string rooted_form(const Tree& t, VertexId root,
                        std::optional<VertexId> blocked) {
  std::vector<std::string> children;
  for (const Incidence& inc : t.neighbors(root)) {
    if (blocked && inc.to == *blocked) continue;
    children.push_back(rooted_form(t, inc.to, root));
  }
  std::sort(children.begin(), children.end());
  std::string out = "(";
  for (const std::string& c : children) out += c;
  out += ')';
  return out;
}

std::vector<std::vector<EdgeId>> edge_orbits(const Tree& t) {
  // An automorphism maps e to f iff the trees rooted at the midpoints of e
  // and f are isomorphic.
  std::map<std::string, std::vector<EdgeId>> by_form;
  for (const Edge& e : t.edges()) {
    std::string a = rooted_form(t, e.u, e.v);
    std::string b = rooted_form(t, e.v, e.u);
    if (b < a) std::swap(a, b);
    by_form[a + "|" + b].push_back(e.id);
  }
  std::vector<std::vector<EdgeId>> orbits;
  for (auto& [form, ids] : by_form) orbits.push_back(std::move(ids));
  std::sort(orbits.begin(), orbits.end());
  return orbits;
}

}  // namespace lando
