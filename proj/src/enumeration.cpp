#include "lando/enumeration.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "lando/error.hpp"

namespace lando {

namespace {

// rooted_form for every vertex of t rooted at `root`, computed bottom-up.
std::vector<std::string> subtree_forms(const Tree& t, VertexId root,
                                       std::optional<VertexId> blocked) {
  const std::size_t n = t.vertex_count();
  std::vector<VertexId> order{root};
  std::vector<VertexId> parent(n, root);
  std::vector<bool> seen(n, false);
  seen[root] = true;
  if (blocked) seen[*blocked] = true;
  for (std::size_t head = 0; head < order.size(); ++head) {
    const VertexId v = order[head];
    for (const Incidence& inc : t.neighbors(v)) {
      if (seen[inc.to]) continue;
      seen[inc.to] = true;
      parent[inc.to] = v;
      order.push_back(inc.to);
    }
  }
  std::vector<std::vector<std::string*>> children(n);
  std::vector<std::string> forms(n);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    auto& kids = children[*it];
    std::sort(kids.begin(), kids.end(),
              [](const std::string* a, const std::string* b) { return *a < *b; });
    std::string& f = forms[*it];
    f = "(";
    for (const std::string* k : kids) f += *k;
    f += ')';
    if (*it != root) children[parent[*it]].push_back(&f);
  }
  return forms;
}

void check_positive(std::size_t value, const char* what) {
  if (value == 0) {
    throw Error(ErrorCode::kInvalidParameter,
                std::string(what) + " must be at least 1");
  }
}

std::string edge_label(std::size_t i) { return "e" + std::to_string(i); }

// Rooted trees on n vertices as canonical level sequences, each visited
// once (Beyer-Hedetniemi successor order).
template <typename Visit>
void for_each_rooted_tree(std::size_t n, Visit&& visit) {
  std::vector<std::size_t> level(n);
  std::iota(level.begin(), level.end(), std::size_t{0});
  while (true) {
    visit(level);
    std::size_t p = n;
    for (std::size_t i = n; i-- > 0;) {
      if (level[i] > 1) {
        p = i;
        break;
      }
    }
    if (p == n) return;
    std::size_t q = p;
    while (level[--q] != level[p] - 1) {
    }
    const std::size_t shift = p - q;
    for (std::size_t i = p; i < n; ++i) level[i] = level[i - shift];
  }
}

}  // namespace

std::string canonical_form(const Tree& t) {
  const std::vector<VertexId> c = centroids(t);
  if (c.size() == 1) return rooted_form(t, c[0]);
  std::string a = rooted_form(t, c[0], c[1]);
  std::string b = rooted_form(t, c[1], c[0]);
  if (b < a) std::swap(a, b);
  return "[" + a + b + "]";
}

Tree canonical_tree(const Tree& t) {
  if (t.edge_count() == 0) return Tree();
  const std::vector<VertexId> c = centroids(t);
  VertexId root = c[0];
  if (c.size() == 2 && rooted_form(t, c[1], c[0]) < rooted_form(t, c[0], c[1])) {
    root = c[1];
  }
  const std::vector<std::string> forms = subtree_forms(t, root, std::nullopt);

  std::vector<EdgeSpec> specs;
  specs.reserve(t.edge_count());
  // (old vertex, new id of its parent, old parent)
  struct Frame {
    VertexId vertex;
    VertexId new_parent;
    std::optional<VertexId> old_parent;
  };
  std::vector<Frame> stack{{root, 0, std::nullopt}};
  VertexId next_id = 0;
  while (!stack.empty()) {
    const Frame f = stack.back();
    stack.pop_back();
    const VertexId id = next_id++;
    if (f.old_parent) {
      specs.push_back({f.new_parent, id, edge_label(specs.size())});
    }
    std::vector<VertexId> kids;
    for (const Incidence& inc : t.neighbors(f.vertex)) {
      if (f.old_parent && inc.to == *f.old_parent) continue;
      kids.push_back(inc.to);
    }
    std::stable_sort(kids.begin(), kids.end(), [&](VertexId a, VertexId b) {
      return forms[a] < forms[b];
    });
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) {
      stack.push_back({*it, id, f.vertex});
    }
  }
  return build_tree(specs);
}

std::vector<Tree> enumerate_free_trees(std::size_t k_edges) {
  if (k_edges == 0) return {Tree()};
  const std::size_t n = k_edges + 1;
  std::map<std::string, Tree> classes;
  std::vector<EdgeSpec> specs(k_edges);
  std::vector<std::size_t> last_at_level(n);
  for_each_rooted_tree(n, [&](const std::vector<std::size_t>& level) {
    for (std::size_t i = 1; i < n; ++i) {
      last_at_level[level[i]] = i;
      specs[i - 1] = {last_at_level[level[i] - 1], i, edge_label(i - 1)};
    }
    last_at_level[0] = 0;
    const Tree t = build_tree(specs);
    const std::vector<VertexId> c = centroids(t);
    // Every free tree appears rooted at one of its centroids.
    if (std::find(c.begin(), c.end(), VertexId{0}) == c.end()) return;
    std::string form = canonical_form(t);
    if (!classes.contains(form)) classes.emplace(std::move(form), canonical_tree(t));
  });
  std::vector<Tree> out;
  out.reserve(classes.size());
  for (auto& [form, tree] : classes) out.push_back(std::move(tree));
  return out;
}

Tree path_tree(std::size_t k) {
  check_positive(k, "path length");
  std::vector<EdgeSpec> specs;
  for (std::size_t i = 0; i < k; ++i) specs.push_back({i, i + 1, edge_label(i)});
  return build_tree(specs);
}

Tree star_tree(std::size_t k) {
  check_positive(k, "star size");
  std::vector<EdgeSpec> specs;
  for (std::size_t i = 0; i < k; ++i) specs.push_back({0, i + 1, edge_label(i)});
  return build_tree(specs);
}

Tree double_star(std::size_t a, std::size_t b) {
  check_positive(a, "double star leaf count");
  check_positive(b, "double star leaf count");
  std::vector<EdgeSpec> specs{{0, 1, edge_label(0)}};
  VertexId next = 2;
  for (std::size_t i = 0; i < a; ++i) specs.push_back({0, next++, edge_label(specs.size())});
  for (std::size_t i = 0; i < b; ++i) specs.push_back({1, next++, edge_label(specs.size())});
  return build_tree(specs);
}

Tree spider(std::size_t l1, std::size_t l2, std::size_t l3) {
  std::vector<EdgeSpec> specs;
  VertexId next = 1;
  for (std::size_t leg : {l1, l2, l3}) {
    check_positive(leg, "spider leg length");
    VertexId prev = 0;
    for (std::size_t i = 0; i < leg; ++i) {
      specs.push_back({prev, next, edge_label(specs.size())});
      prev = next++;
    }
  }
  return build_tree(specs);
}

}  // namespace lando
