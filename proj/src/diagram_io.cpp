#include "lando/diagram_io.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include <json.hpp>

#include "lando/error.hpp"

namespace lando {

namespace {

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

bool is_label_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

class DiagramParser {
 public:
  explicit DiagramParser(std::string_view text) : text_(text) {}

  CircleDiagram parse() {
    skip_space();
    if (pos_ == text_.size()) {
      throw Error(ErrorCode::kEmptyInput, "diagram is empty");
    }
    CircleDiagram d;
    d.roots = circle_list();
    skip_space();
    if (pos_ != text_.size()) fail("',' or end of input");
    return d;
  }

 private:
  std::vector<CircleNode> circle_list() {
    std::vector<CircleNode> out;
    out.push_back(circle());
    while (accept(',')) out.push_back(circle());
    return out;
  }

  CircleNode circle() {
    CircleNode node;
    node.label = label();
    if (!seen_.insert(node.label).second) {
      throw Error(ErrorCode::kDuplicateLabel,
                  "duplicate circle label '" + node.label + "'");
    }
    expect('(');
    skip_space();
    if (peek() != ')') node.children = circle_list();
    expect(')');
    return node;
  }

  std::string label() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_label_char(text_[pos_])) ++pos_;
    if (pos_ == start) fail("label");
    return std::string(text_.substr(start, pos_ - start));
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("'") + c + "'");
  }

  bool accept(char c) {
    skip_space();
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_space() {
    while (pos_ < text_.size() && is_space(text_[pos_])) ++pos_;
  }

  [[noreturn]] void fail(const std::string& expected) const {
    const std::string where =
        pos_ == text_.size() ? "at end of input"
                             : "at position " + std::to_string(pos_);
    throw Error(ErrorCode::kSyntaxError, where + ": expected " + expected);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::set<std::string> seen_;
};

void add_circles(const std::vector<CircleNode>& circles, VertexId region,
                 std::vector<EdgeSpec>& specs, VertexId& next_vertex) {
  for (const CircleNode& c : circles) {
    const VertexId inside = next_vertex++;
    specs.push_back({region, inside, c.label});
    add_circles(c.children, inside, specs, next_vertex);
  }
}

void print_nested(const Tree& t, VertexId v, std::optional<VertexId> parent,
                  std::string& out) {
  bool first = true;
  for (const Incidence& inc : t.neighbors(v)) {
    if (parent && inc.to == *parent) continue;
    if (!first) out += ',';
    first = false;
    out += t.label(inc.edge);
    out += '(';
    print_nested(t, inc.to, v, out);
    out += ')';
  }
}

// Tokens of a tree-file line: labels, "--" and ":".
std::vector<std::string> tokenize_line(std::string_view line,
                                       std::size_t line_no) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    if (is_space(c)) {
      ++i;
    } else if (is_label_char(c)) {
      const std::size_t start = i;
      while (i < line.size() && is_label_char(line[i])) ++i;
      tokens.emplace_back(line.substr(start, i - start));
    } else if (c == '-' && i + 1 < line.size() && line[i + 1] == '-') {
      tokens.emplace_back("--");
      i += 2;
    } else if (c == ':') {
      tokens.emplace_back(":");
      ++i;
    } else {
      throw Error(ErrorCode::kSyntaxError,
                  "line " + std::to_string(line_no) + ": unexpected character '" +
                      std::string(1, c) + "'");
    }
  }
  return tokens;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t at = text.find(sep, start);
    out.push_back(text.substr(start, at - start));
    if (at == std::string_view::npos) break;
    start = at + 1;
  }
  return out;
}

EdgeId lookup_label(const Tree& t, std::string_view label,
                    std::string_view which) {
  const std::optional<EdgeId> e = t.find_edge(label);
  if (!e) {
    throw Error(ErrorCode::kUnknownLabel, "unknown label '" +
                                              std::string(label) + "' in " +
                                              std::string(which));
  }
  return *e;
}

}  // namespace

CircleDiagram parse_diagram(std::string_view text) {
  return DiagramParser(text).parse();
}

Tree diagram_to_tree(const CircleDiagram& d) {
  std::vector<EdgeSpec> specs;
  VertexId next_vertex = 1;
  add_circles(d.roots, 0, specs, next_vertex);
  return build_tree(specs);
}

std::string to_diagram_text(const Tree& t) {
  if (t.edge_count() == 0) {
    throw Error(ErrorCode::kEmptyInput,
                "the 0-edge tree has no circle diagram form");
  }
  std::string out;
  print_nested(t, 0, std::nullopt, out);
  return out;
}

Tree parse_tree_file(std::string_view text) {
  bool header_seen = false;
  std::map<std::string, VertexId, std::less<>> ids;
  std::vector<std::string> names;
  std::vector<EdgeSpec> specs;
  auto vertex_id = [&](const std::string& name) {
    auto [it, inserted] = ids.try_emplace(name, names.size());
    if (inserted) names.push_back(name);
    return it->second;
  };

  std::size_t line_no = 0;
  for (std::string_view line : split(text, '\n')) {
    ++line_no;
    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    const std::vector<std::string> tok = tokenize_line(line, line_no);
    const std::string at = "line " + std::to_string(line_no) + ": ";
    if (!header_seen) {
      if (tok.size() != 1 || tok[0] != "tree") {
        throw Error(ErrorCode::kSyntaxError, at + "expected header 'tree'");
      }
      header_seen = true;
    } else if (tok.size() == 2 && tok[0] == "vertex") {
      vertex_id(tok[1]);
    } else if (tok.size() == 5 && tok[1] == "--" && tok[3] == ":" &&
               is_valid_label(tok[0]) && is_valid_label(tok[2]) &&
               is_valid_label(tok[4])) {
      const VertexId u = vertex_id(tok[0]);
      const VertexId v = vertex_id(tok[2]);
      specs.push_back({u, v, tok[4]});
    } else {
      throw Error(ErrorCode::kSyntaxError,
                  at + "expected 'U -- V : LABEL' or 'vertex V'");
    }
  }
  if (!header_seen) {
    throw Error(ErrorCode::kSyntaxError, "missing header line 'tree'");
  }
  if (specs.empty()) {
    if (names.empty()) {
      throw Error(ErrorCode::kEmptyTreeNeedsVertexLine,
                  "tree has no edges; add a 'vertex V' line for the "
                  "single-vertex tree");
    }
    if (names.size() > 1) {
      throw Error(ErrorCode::kDisconnected,
                  "vertex '" + names[1] + "' is not connected");
    }
    return Tree();
  }
  Tree t = build_tree(specs);
  if (t.vertex_count() != names.size()) {
    throw Error(ErrorCode::kDisconnected,
                "vertex '" + names[t.vertex_count()] + "' is not connected");
  }
  return t;
}

std::string to_tree_file(const Tree& t) {
  std::string out = "tree\n";
  if (t.edge_count() == 0) return out + "vertex v0\n";
  for (const Edge& e : t.edges()) {
    out += "v" + std::to_string(e.u) + " -- v" + std::to_string(e.v) + " : " +
           e.label + "\n";
  }
  return out;
}

std::string to_dot(const Tree& t) {
  const VertexColoring color = bicolor(t);
  std::ostringstream out;
  out << "graph tree {\n  node [style=filled];\n";
  for (VertexId v = 0; v < t.vertex_count(); ++v) {
    out << "  v" << v << " [fillcolor=\"" << (color[v] ? "gray" : "white")
        << "\"];\n";
  }
  for (const Edge& e : t.edges()) {
    out << "  v" << e.u << " -- v" << e.v << " [label=\"" << e.label
        << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_json(const Tree& t) {
  nlohmann::ordered_json j;
  j["vertex_count"] = t.vertex_count();
  j["edges"] = nlohmann::ordered_json::array();
  for (const Edge& e : t.edges()) {
    nlohmann::ordered_json je;
    je["id"] = e.id;
    je["u"] = e.u;
    je["v"] = e.v;
    je["label"] = e.label;
    j["edges"].push_back(std::move(je));
  }
  return j.dump(2) + "\n";
}

Tree parse_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kSyntaxError, e.what());
  }
  try {
    const std::size_t n = j.at("vertex_count").get<std::size_t>();
    std::vector<EdgeSpec> specs;
    for (const auto& je : j.at("edges")) {
      if (je.at("id").get<std::size_t>() != specs.size()) {
        throw Error(ErrorCode::kSyntaxError,
                    "edge ids must be 0..k-1 in list order");
      }
      specs.push_back({je.at("u").get<VertexId>(), je.at("v").get<VertexId>(),
                       je.at("label").get<std::string>()});
    }
    Tree t = specs.empty() ? Tree() : build_tree(specs);
    if (t.vertex_count() != n) {
      throw Error(ErrorCode::kSyntaxError,
                  "vertex_count " + std::to_string(n) + " does not match " +
                      std::to_string(t.vertex_count()) + " vertices in edges");
    }
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kSyntaxError, e.what());
  }
}

Tree parse_any(std::string_view text) {
  const std::string_view body = trim(text);
  if (!body.empty() && body.front() == '{') return parse_json(body);
  for (std::string_view line : split(text, '\n')) {
    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    if (line == "tree") return parse_tree_file(text);
    break;
  }
  return diagram_to_tree(parse_diagram(text));
}

Bijection parse_bijection(std::string_view text, const Tree& g,
                          const Tree& h) {
  if (g.edge_count() != h.edge_count()) {
    throw Error(ErrorCode::kSizeMismatch,
                "trees have " + std::to_string(g.edge_count()) + " and " +
                    std::to_string(h.edge_count()) + " edges");
  }
  constexpr EdgeId kUnset = static_cast<EdgeId>(-1);
  std::vector<EdgeId> image(g.edge_count(), kUnset);
  std::vector<bool> target_used(h.edge_count(), false);
  if (!trim(text).empty()) {
    for (std::string_view item : split(text, ',')) {
      const std::size_t eq = item.find('=');
      if (eq == std::string_view::npos) {
        throw Error(ErrorCode::kSyntaxError,
                    "expected 'gLabel=hLabel', got '" + std::string(trim(item)) +
                        "'");
      }
      const std::string_view from = trim(item.substr(0, eq));
      const std::string_view to = trim(item.substr(eq + 1));
      const EdgeId ge = lookup_label(g, from, "first tree");
      const EdgeId he = lookup_label(h, to, "second tree");
      if (image[ge] != kUnset) {
        throw Error(ErrorCode::kDuplicateAssignment,
                    "label '" + std::string(from) + "' assigned twice");
      }
      if (target_used[he]) {
        throw Error(ErrorCode::kDuplicateAssignment,
                    "target '" + std::string(to) + "' assigned twice");
      }
      image[ge] = he;
      target_used[he] = true;
    }
  }
  for (EdgeId e = 0; e < image.size(); ++e) {
    if (image[e] == kUnset) {
      throw Error(ErrorCode::kMissingAssignment,
                  "no image given for '" + g.label(e) + "'");
    }
  }
  return Bijection(std::move(image));
}

std::string format_bijection(const Bijection& b, const Tree& g,
                             const Tree& h) {
  std::string out;
  for (EdgeId e = 0; e < b.size(); ++e) {
    if (e) out += ',';
    out += g.label(e) + "=" + h.label(b(e));
  }
  return out;
}

EdgeSet parse_label_set(std::string_view text, const Tree& t) {
  EdgeSet s(t.edge_count());
  if (trim(text).empty()) return s;
  for (std::string_view item : split(text, ',')) {
    s.insert(lookup_label(t, trim(item), "edge set"));
  }
  return s;
}

}  // namespace lando
