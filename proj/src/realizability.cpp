#include "lando/realizability.hpp"

#include <algorithm>
#include <atomic>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "lando/error.hpp"

namespace lando {

namespace {

using Clock = std::chrono::steady_clock;

void require_same_size(const Tree& g, const Tree& h_tree) {
  if (g.edge_count() != h_tree.edge_count()) {
    throw Error(ErrorCode::kSizeMismatch,
                "trees have " + std::to_string(g.edge_count()) + " and " +
                    std::to_string(h_tree.edge_count()) + " edges");
  }
}

// Flat per-vertex incidence lists and parity-table machinery for one pair
// of trees. A parity table is a caller-owned row indexed by H vertex.
class PairData {
 public:
  PairData(const Tree& g, const Tree& h) : g_(g), h_(h) {
    const std::size_t ng = g.vertex_count();
    delta_.resize(ng);
    for (VertexId v = 0; v < ng; ++v) {
      for (const Incidence& inc : g.neighbors(v)) delta_[v].push_back(inc.edge);
    }
    color_ = bicolor(g).color;
    for (VertexId v : h.bfs_order().subspan(1)) {
      h_order_.push_back({v, h.parent(v), h.parent_edge(v)});
    }
    for (const Edge& e : h.edges()) h_ends_.push_back({e.u, e.v});
  }

  const Tree& g() const { return g_; }
  const Tree& h() const { return h_; }
  std::size_t g_vertices() const { return g_.vertex_count(); }
  std::size_t h_vertices() const { return h_.vertex_count(); }
  std::size_t edges() const { return g_.edge_count(); }
  std::span<const EdgeId> delta(VertexId v) const { return delta_[v]; }
  std::uint8_t color(VertexId v) const { return color_[v]; }

  // Parity of h(δv) crossings from H's vertex 0, written into `row`.
  // `in_set` must be all-zero on entry and is left all-zero.
  void fill_table(VertexId v, std::span<const EdgeId> image,
                  std::span<std::uint8_t> in_set,
                  std::span<std::uint8_t> row) const {
    for (EdgeId e : delta_[v]) in_set[image[e]] = 1;
    row[0] = 0;
    for (const Step& s : h_order_) row[s.vertex] = row[s.parent] ^ in_set[s.edge];
    for (EdgeId e : delta_[v]) in_set[image[e]] = 0;
  }

  // h(δv) is on one side of the set whose parity table is `row`. An edge
  // shared with that set has endpoints of different parity, so the
  // disjointness condition is covered by the same scan.
  bool on_side(VertexId v, std::span<const EdgeId> image,
               std::span<const std::uint8_t> row) const {
    const std::span<const EdgeId> d = delta_[v];
    if (d.empty()) return true;
    const std::uint8_t want = row[h_ends_[image[d[0]]].first];
    for (EdgeId e : d) {
      const auto [a, b] = h_ends_[image[e]];
      if (row[a] != want || row[b] != want) return false;
    }
    return true;
  }

 private:
  struct Step {
    VertexId vertex;
    VertexId parent;
    EdgeId edge;
  };

  const Tree& g_;
  const Tree& h_;
  std::vector<std::vector<EdgeId>> delta_;
  std::vector<std::uint8_t> color_;
  std::vector<Step> h_order_;
  std::vector<std::pair<VertexId, VertexId>> h_ends_;
};

// Full check of one bijection; reusable scratch buffers.
class FullCheck {
 public:
  explicit FullCheck(const PairData& data)
      : data_(data),
        in_set_(data.edges(), 0),
        tables_(data.g_vertices() * data.h_vertices(), 0) {}

  std::optional<Violation> operator()(std::span<const EdgeId> image) {
    for (VertexId v = 0; v < data_.g_vertices(); ++v) {
      data_.fill_table(v, image, in_set_, row(v));
    }
    // Same-colored pairs in lexicographic order.
    const std::size_t n = data_.g_vertices();
    for (VertexId a = 0; a < n; ++a) {
      for (VertexId b = a + 1; b < n; ++b) {
        if (data_.color(a) != data_.color(b)) continue;
        const bool a_ok = data_.on_side(a, image, row(b));
        const bool b_ok = data_.on_side(b, image, row(a));
        if (a_ok && b_ok) continue;
        const SideFailure f = !a_ok && !b_ok ? SideFailure::kBoth
                              : !a_ok        ? SideFailure::kAOffSideOfB
                                             : SideFailure::kBOffSideOfA;
        return Violation{a, b, f};
      }
    }
    return std::nullopt;
  }

 private:
  std::span<std::uint8_t> row(VertexId v) {
    const std::size_t nh = data_.h_vertices();
    return std::span<std::uint8_t>(tables_).subspan(v * nh, nh);
  }

  const PairData& data_;
  std::vector<std::uint8_t> in_set_;
  std::vector<std::uint8_t> tables_;
};

// Static part of the pruned search: G's edge order and, for each position,
// the vertices whose δ-set becomes complete there together with the
// same-colored vertices completed before them.
struct SearchPlan {
  struct Completion {
    VertexId vertex;
    std::vector<VertexId> partners;
  };

  std::vector<EdgeId> order;
  std::vector<std::vector<Completion>> completions;
  std::vector<EdgeId> root_candidates;
};

SearchPlan make_plan(const PairData& data, bool symmetry) {
  const Tree& g = data.g();
  SearchPlan plan;
  const std::size_t k = g.edge_count();
  const VertexId start = centroids(g).front();

  std::vector<bool> edge_seen(k, false);
  std::vector<bool> vertex_seen(g.vertex_count(), false);
  std::vector<VertexId> queue{start};
  vertex_seen[start] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const Incidence& inc : g.neighbors(queue[head])) {
      if (edge_seen[inc.edge]) continue;
      edge_seen[inc.edge] = true;
      plan.order.push_back(inc.edge);
      if (!vertex_seen[inc.to]) {
        vertex_seen[inc.to] = true;
        queue.push_back(inc.to);
      }
    }
  }

  std::vector<std::size_t> missing(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) missing[v] = g.degree(v);
  std::vector<VertexId> completed;
  plan.completions.resize(k);
  for (std::size_t i = 0; i < k; ++i) {
    const Edge& e = g.edge(plan.order[i]);
    for (VertexId v : {e.u, e.v}) {
      if (--missing[v] != 0) continue;
      SearchPlan::Completion c{v, {}};
      for (VertexId w : completed) {
        if (data.color(w) == data.color(v)) c.partners.push_back(w);
      }
      completed.push_back(v);
      plan.completions[i].push_back(std::move(c));
    }
  }

  if (symmetry) {
    for (const auto& orbit : edge_orbits(data.h())) {
      plan.root_candidates.push_back(orbit.front());
    }
    std::sort(plan.root_candidates.begin(), plan.root_candidates.end());
  } else {
    for (EdgeId e = 0; e < k; ++e) plan.root_candidates.push_back(e);
  }
  return plan;
}

struct BranchResult {
  bool found = false;
  std::vector<EdgeId> image;
  std::uint64_t nodes = 0;
};

class Backtracker {
 public:
  Backtracker(const PairData& data, const SearchPlan& plan)
      : data_(data),
        plan_(plan),
        image_(data.edges(), 0),
        used_(data.edges(), 0),
        in_set_(data.edges(), 0),
        tables_(data.g_vertices() * data.h_vertices(), 0) {}

  // Search with the first edge of the order mapped to `first_image`.
  BranchResult branch(EdgeId first_image) {
    std::fill(used_.begin(), used_.end(), 0);
    nodes_ = 0;
    BranchResult r;
    r.found = assign(0, first_image) && descend(1);
    r.nodes = nodes_;
    if (r.found) r.image = image_;
    return r;
  }

 private:
  bool descend(std::size_t depth) {
    if (depth == plan_.order.size()) return true;
    for (EdgeId c = 0; c < used_.size(); ++c) {
      if (used_[c]) continue;
      if (assign(depth, c) && descend(depth + 1)) return true;
      used_[c] = 0;
    }
    return false;
  }

  bool assign(std::size_t depth, EdgeId target) {
    ++nodes_;
    image_[plan_.order[depth]] = target;
    used_[target] = 1;
    for (const SearchPlan::Completion& c : plan_.completions[depth]) {
      data_.fill_table(c.vertex, image_, in_set_, row(c.vertex));
      for (VertexId w : c.partners) {
        if (!data_.on_side(c.vertex, image_, row(w)) ||
            !data_.on_side(w, image_, row(c.vertex))) {
          return false;
        }
      }
    }
    return true;
  }

  std::span<std::uint8_t> row(VertexId v) {
    const std::size_t nh = data_.h_vertices();
    return std::span<std::uint8_t>(tables_).subspan(v * nh, nh);
  }

  const PairData& data_;
  const SearchPlan& plan_;
  std::vector<EdgeId> image_;
  std::vector<std::uint8_t> used_;
  std::vector<std::uint8_t> in_set_;
  std::vector<std::uint8_t> tables_;
  std::uint64_t nodes_ = 0;
};

SearchReport pruned_search(const Tree& g, const Tree& h_tree,
                           const SearchOptions& options) {
  SearchReport report;
  report.strategy = Strategy::kPruned;
  if (g.edge_count() == 0) {
    report.witness = Bijection();
    return report;
  }
  const PairData data(g, h_tree);
  const SearchPlan plan = make_plan(data, options.symmetry);
  const std::size_t branches = plan.root_candidates.size();
  std::vector<BranchResult> results(branches);

  const std::size_t jobs = std::clamp<std::size_t>(options.jobs, 1, branches);
  if (jobs == 1) {
    Backtracker bt(data, plan);
    for (std::size_t i = 0; i < branches; ++i) {
      results[i] = bt.branch(plan.root_candidates[i]);
      if (results[i].found) break;
    }
  } else {
    // Branches past the smallest successful index are skipped; they never
    // contribute to the report.
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> best{branches};
    std::vector<std::jthread> workers;
    for (std::size_t w = 0; w < jobs; ++w) {
      workers.emplace_back([&] {
        Backtracker bt(data, plan);
        while (true) {
          const std::size_t i = next.fetch_add(1);
          if (i >= branches || i > best.load()) return;
          results[i] = bt.branch(plan.root_candidates[i]);
          if (results[i].found) {
            std::size_t cur = best.load();
            while (i < cur && !best.compare_exchange_weak(cur, i)) {
            }
          }
        }
      });
    }
  }

  for (const BranchResult& r : results) {
    report.nodes_explored += r.nodes;
    if (r.found) {
      report.witness = Bijection(r.image);
      break;
    }
  }
  return report;
}

// Images for G's edges in brute-force order: a permutation of H's edge ids
// advanced with next_permutation under label order.
template <typename Visit>
void for_each_bijection(const Tree& h_tree, Visit&& visit) {
  std::vector<EdgeId> perm(h_tree.edge_count());
  for (EdgeId e = 0; e < perm.size(); ++e) perm[e] = e;
  const auto by_label = [&](EdgeId a, EdgeId b) {
    return h_tree.label(a) < h_tree.label(b);
  };
  std::sort(perm.begin(), perm.end(), by_label);
  do {
    if (!visit(std::span<const EdgeId>(perm))) return;
  } while (std::next_permutation(perm.begin(), perm.end(), by_label));
}

}  // namespace

Verdict is_realizing(const Tree& g, const Tree& h_tree, const Bijection& h) {
  require_same_size(g, h_tree);
  if (h.size() != g.edge_count()) {
    throw Error(ErrorCode::kInvalidBijection,
                "bijection has " + std::to_string(h.size()) +
                    " entries for trees with " +
                    std::to_string(g.edge_count()) + " edges");
  }
  const PairData data(g, h_tree);
  FullCheck check(data);
  return Verdict{check(h.images())};
}

SearchReport brute_force_find(const Tree& g, const Tree& h_tree) {
  require_same_size(g, h_tree);
  const auto start = Clock::now();
  SearchReport report;
  report.strategy = Strategy::kBrute;
  const PairData data(g, h_tree);
  FullCheck check(data);
  for_each_bijection(h_tree, [&](std::span<const EdgeId> image) {
    ++report.nodes_explored;
    if (check(image)) return true;
    report.witness = Bijection(std::vector<EdgeId>(image.begin(), image.end()));
    return false;
  });
  report.elapsed = Clock::now() - start;
  return report;
}

std::uint64_t count_realizing(const Tree& g, const Tree& h_tree) {
  require_same_size(g, h_tree);
  const PairData data(g, h_tree);
  FullCheck check(data);
  std::uint64_t count = 0;
  for_each_bijection(h_tree, [&](std::span<const EdgeId> image) {
    if (!check(image)) ++count;
    return true;
  });
  return count;
}

SearchReport find_realizing(const Tree& g, const Tree& h_tree,
                            const SearchOptions& options) {
  require_same_size(g, h_tree);
  if (options.strategy == Strategy::kBrute) return brute_force_find(g, h_tree);
  const auto start = Clock::now();
  SearchReport report = pruned_search(g, h_tree, options);
  report.elapsed = Clock::now() - start;
  return report;
}

SearchReport decide_lando(const Tree& g, const Tree& h_tree, std::size_t jobs) {
  return find_realizing(g, h_tree,
                        SearchOptions{Strategy::kPruned, true, jobs});
}

}  // namespace lando
