#pragma once

// Text formats for circle systems, dual trees and bijections.
//
// Circle diagram (nesting forest; the outer region is the root region):
//   diagram     := circle_list
//   circle_list := circle (',' circle)*
//   circle      := LABEL '(' circle_list? ')'
//   LABEL       := [A-Za-z0-9_]+
// ASCII whitespace is ignored between tokens.
//
// Tree file:
//   tree
//   U -- V : LABEL      one line per edge
//   vertex V            declares a vertex (needed for the 0-edge tree)
// Vertex names are local tokens mapped to ids in order of first appearance.
// '#' starts a comment.
//
// Bijection: comma-separated "gLabel=hLabel" pairs.

#include <string>
#include <string_view>
#include <vector>

#include "lando/bijection.hpp"
#include "lando/tree.hpp"

namespace lando {

struct CircleNode {
  std::string label;
  std::vector<CircleNode> children;

  bool operator==(const CircleNode&) const = default;
};

struct CircleDiagram {
  std::vector<CircleNode> roots;

  bool operator==(const CircleDiagram&) const = default;
};

CircleDiagram parse_diagram(std::string_view text);

// Vertex 0 is the outer region; each circle adds an edge from its parent
// region to a fresh vertex for its interior. Vertices and edges are numbered
// in pre-order.
Tree diagram_to_tree(const CircleDiagram& d);

// Nested form of t rooted at vertex 0 (inverse of diagram_to_tree up to
// vertex renumbering). Throws kEmptyInput for the 0-edge tree.
std::string to_diagram_text(const Tree& t);

Tree parse_tree_file(std::string_view text);
std::string to_tree_file(const Tree& t);

std::string to_dot(const Tree& t);
std::string to_json(const Tree& t);
Tree parse_json(std::string_view text);

// Accepts a tree file, JSON, or a circle diagram, chosen by the first
// meaningful character/line.
Tree parse_any(std::string_view text);

Bijection parse_bijection(std::string_view text, const Tree& g, const Tree& h);
std::string format_bijection(const Bijection& b, const Tree& g, const Tree& h);

// Comma-separated edge labels of t. Empty text is the empty set.
EdgeSet parse_label_set(std::string_view text, const Tree& t);

}  // namespace lando
