#include "lando/unlinking.hpp"

#include <optional>
#include <vector>

namespace lando {

namespace {

// Color of the component containing each vertex once q's edge interiors are
// removed, with components adjacent across a q-edge colored differently.
std::vector<int> component_colors(const Tree& t, const EdgeSet& q) {
  const std::size_t n = t.vertex_count();
  std::vector<int> component(n, -1);
  int count = 0;
  for (VertexId start = 0; start < n; ++start) {
    if (component[start] != -1) continue;
    std::vector<VertexId> stack{start};
    component[start] = count;
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      for (const Incidence& inc : t.neighbors(v)) {
        if (q.contains(inc.edge) || component[inc.to] != -1) continue;
        component[inc.to] = count;
        stack.push_back(inc.to);
      }
    }
    ++count;
  }

  std::vector<std::vector<int>> quotient(static_cast<std::size_t>(count));
  for (EdgeId e : q.members()) {
    const int a = component[t.edge(e).u];
    const int b = component[t.edge(e).v];
    quotient[static_cast<std::size_t>(a)].push_back(b);
    quotient[static_cast<std::size_t>(b)].push_back(a);
  }
  std::vector<int> color(static_cast<std::size_t>(count), -1);
  for (int root = 0; root < count; ++root) {
    if (color[static_cast<std::size_t>(root)] != -1) continue;
    color[static_cast<std::size_t>(root)] = 0;
    std::vector<int> stack{root};
    while (!stack.empty()) {
      const int c = stack.back();
      stack.pop_back();
      for (int d : quotient[static_cast<std::size_t>(c)]) {
        if (color[static_cast<std::size_t>(d)] != -1) continue;
        color[static_cast<std::size_t>(d)] = 1 - color[static_cast<std::size_t>(c)];
        stack.push_back(d);
      }
    }
  }

  std::vector<int> out(n);
  for (VertexId v = 0; v < n; ++v) {
    out[v] = color[static_cast<std::size_t>(component[v])];
  }
  return out;
}

bool contained_in_one_color(const Tree& t, const EdgeSet& p,
                            const EdgeSet& q) {
  const std::vector<int> color = component_colors(t, q);
  std::optional<int> seen;
  for (EdgeId e : p.members()) {
    // The interior of a q-edge lies in no component.
    if (q.contains(e)) return false;
    const int c = color[t.edge(e).u];
    if (seen && *seen != c) return false;
    seen = c;
  }
  return true;
}

}  // namespace

bool on_one_side(const Tree& t, const EdgeSet& p, const ParityTable& q) {
  if (p.intersects(q.crossing_set)) return false;
  std::optional<std::uint8_t> seen;
  for (EdgeId e : p.members()) {
    const Edge& edge = t.edge(e);
    const std::uint8_t a = q.parity[edge.u];
    if (a != q.parity[edge.v]) return false;
    if (seen && *seen != a) return false;
    seen = a;
  }
  return true;
}

bool on_one_side(const Tree& t, const EdgeSet& p, const EdgeSet& q) {
  return on_one_side(t, p, parity_table(t, q));
}

bool unlinked(const Tree& t, const EdgeSet& p, const EdgeSet& q) {
  return on_one_side(t, p, q) && on_one_side(t, q, p);
}

bool unlinked_oracle(const Tree& t, const EdgeSet& p, const EdgeSet& q) {
  return contained_in_one_color(t, p, q) && contained_in_one_color(t, q, p);
}

}  // namespace lando
