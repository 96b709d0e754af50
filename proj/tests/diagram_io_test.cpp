#include "lando/diagram_io.hpp"

#include <gtest/gtest.h>

#include "lando/enumeration.hpp"
#include "lando/error.hpp"

namespace lando {
namespace {

template <typename F>
ErrorCode error_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an error";
  return ErrorCode::kInvalidParameter;
}

// Pairs of labels whose edges share an endpoint.
std::set<std::pair<std::string, std::string>> touching_labels(const Tree& t) {
  std::set<std::pair<std::string, std::string>> out;
  for (VertexId v = 0; v < t.vertex_count(); ++v) {
    for (const Incidence& a : t.neighbors(v)) {
      for (const Incidence& b : t.neighbors(v)) {
        if (a.edge != b.edge) out.emplace(t.label(a.edge), t.label(b.edge));
      }
    }
  }
  return out;
}

TEST(ParseDiagram, Siblings) {
  const CircleDiagram d = parse_diagram("a(),b()");
  ASSERT_EQ(d.roots.size(), 2u);
  EXPECT_EQ(d.roots[0].label, "a");
  EXPECT_EQ(d.roots[1].label, "b");
  EXPECT_TRUE(d.roots[0].children.empty());
}

TEST(ParseDiagram, Nesting) {
  const CircleDiagram d = parse_diagram(" a ( b( ) ,\n c(d()) ) ");
  ASSERT_EQ(d.roots.size(), 1u);
  const CircleNode& a = d.roots[0];
  ASSERT_EQ(a.children.size(), 2u);
  EXPECT_EQ(a.children[0].label, "b");
  EXPECT_EQ(a.children[1].label, "c");
  ASSERT_EQ(a.children[1].children.size(), 1u);
  EXPECT_EQ(a.children[1].children[0].label, "d");
}

TEST(ParseDiagram, Errors) {
  try {
    parse_diagram("a(b()");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSyntaxError);
    EXPECT_EQ(std::string(e.what()), "at end of input: expected ')'");
  }
  try {
    parse_diagram("a(),(b)");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(std::string(e.what()), "at position 4: expected label");
  }
  EXPECT_EQ(error_of([] { parse_diagram(""); }), ErrorCode::kEmptyInput);
  EXPECT_EQ(error_of([] { parse_diagram("  \n"); }), ErrorCode::kEmptyInput);
  EXPECT_EQ(error_of([] { parse_diagram("a(b(a()))"); }), ErrorCode::kDuplicateLabel);
  EXPECT_EQ(error_of([] { parse_diagram("a()b()"); }), ErrorCode::kSyntaxError);
  EXPECT_EQ(error_of([] { parse_diagram("a"); }), ErrorCode::kSyntaxError);
  EXPECT_EQ(error_of([] { parse_diagram("a(),"); }), ErrorCode::kSyntaxError);
}

TEST(DiagramToTree, NestedCirclesGivePath) {
  const Tree t = diagram_to_tree(parse_diagram("a(b(c()))"));
  EXPECT_EQ(t, build_tree({{0, 1, "a"}, {1, 2, "b"}, {2, 3, "c"}}));
}

TEST(DiagramToTree, SiblingsGiveStar) {
  const Tree t = diagram_to_tree(parse_diagram("a(),b(),c()"));
  EXPECT_EQ(t, build_tree({{0, 1, "a"}, {0, 2, "b"}, {0, 3, "c"}}));
}

TEST(DiagramToTree, PreOrderNumbering) {
  const Tree t = diagram_to_tree(parse_diagram("a(b(),c(d())),e()"));
  EXPECT_EQ(t, build_tree({{0, 1, "a"}, {1, 2, "b"}, {1, 3, "c"}, {3, 4, "d"}, {0, 5, "e"}}));
}

TEST(DiagramRoundTrip, EveryTreeArisesFromADiagram) {
  for (std::size_t k = 1; k <= 7; ++k) {
    for (const Tree& t : enumerate_free_trees(k)) {
      const Tree back = diagram_to_tree(parse_diagram(to_diagram_text(t)));
      EXPECT_EQ(back.edge_count(), k);
      EXPECT_EQ(back.vertex_count(), k + 1);
      EXPECT_EQ(canonical_form(back), canonical_form(t));
      EXPECT_EQ(touching_labels(back), touching_labels(t));
    }
  }
  EXPECT_EQ(error_of([] { to_diagram_text(Tree()); }), ErrorCode::kEmptyInput);
}

TEST(ParseTreeFile, Path) {
  const Tree t = parse_tree_file("tree\nr -- x : a\nx -- y : b\ny -- z : c");
  EXPECT_EQ(t, build_tree({{0, 1, "a"}, {1, 2, "b"}, {2, 3, "c"}}));
}

TEST(ParseTreeFile, CommentsAndSpacing) {
  const Tree t = parse_tree_file(
      "# circles of M\n\ntree   # header\n  r--x:a\n\tx -- y : b # inner\n");
  EXPECT_EQ(t, build_tree({{0, 1, "a"}, {1, 2, "b"}}));
}

TEST(ParseTreeFile, Errors) {
  EXPECT_EQ(error_of([] { parse_tree_file("tree\na -- b : x\na -- b : y"); }),
            ErrorCode::kParallelEdge);
  EXPECT_EQ(error_of([] { parse_tree_file("tree"); }),
            ErrorCode::kEmptyTreeNeedsVertexLine);
  EXPECT_EQ(error_of([] { parse_tree_file(""); }), ErrorCode::kSyntaxError);
  EXPECT_EQ(error_of([] { parse_tree_file("graph\na -- b : x"); }),
            ErrorCode::kSyntaxError);
  EXPECT_EQ(error_of([] { parse_tree_file("tree\na - b : x"); }),
            ErrorCode::kSyntaxError);
  EXPECT_EQ(error_of([] { parse_tree_file("tree\na -- b x"); }),
            ErrorCode::kSyntaxError);
  EXPECT_EQ(error_of([] { parse_tree_file("tree\na -- b : x\nc -- d : y"); }),
            ErrorCode::kDisconnected);
  EXPECT_EQ(error_of([] { parse_tree_file("tree\na -- b : x\nvertex c"); }),
            ErrorCode::kDisconnected);
  EXPECT_EQ(error_of([] { parse_tree_file("tree\nvertex a\nvertex b"); }),
            ErrorCode::kDisconnected);
  EXPECT_EQ(error_of([] { parse_tree_file("tree\na -- b : x\nb -- c : x"); }),
            ErrorCode::kDuplicateLabel);
  EXPECT_EQ(error_of([] { parse_tree_file("tree\na -- a : x"); }),
            ErrorCode::kSelfLoop);
}

TEST(ParseTreeFile, ErrorReportsLine) {
  try {
    parse_tree_file("tree\na -- b : x\nb -> c : y\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(std::string(e.what()).rfind("line 3:", 0), 0u) << e.what();
  }
}

TEST(ParseTreeFile, SingleVertexTree) {
  EXPECT_EQ(parse_tree_file("tree\nvertex r\n"), Tree());
}

TEST(ParseTreeFile, RoundTrip) {
  for (std::size_t k = 0; k <= 6; ++k) {
    for (const Tree& t : enumerate_free_trees(k)) {
      EXPECT_EQ(parse_tree_file(to_tree_file(t)), t);
    }
  }
}

TEST(Json, ExactText) {
  EXPECT_EQ(to_json(path_tree(2)),
            "{\n"
            "  \"vertex_count\": 3,\n"
            "  \"edges\": [\n"
            "    {\n"
            "      \"id\": 0,\n"
            "      \"u\": 0,\n"
            "      \"v\": 1,\n"
            "      \"label\": \"e0\"\n"
            "    },\n"
            "    {\n"
            "      \"id\": 1,\n"
            "      \"u\": 1,\n"
            "      \"v\": 2,\n"
            "      \"label\": \"e1\"\n"
            "    }\n"
            "  ]\n"
            "}\n");
}

TEST(Json, RoundTripIsExact) {
  for (std::size_t k = 0; k <= 7; ++k) {
    for (const Tree& t : enumerate_free_trees(k)) {
      const std::string text = to_json(t);
      const Tree back = parse_json(text);
      EXPECT_EQ(back, t);
      EXPECT_EQ(to_json(back), text);
    }
  }
  const Tree labelled = diagram_to_tree(parse_diagram("outer(mid(in_1()),x9())"));
  EXPECT_EQ(parse_json(to_json(labelled)), labelled);
}

TEST(Json, Errors) {
  EXPECT_EQ(error_of([] { parse_json("{"); }), ErrorCode::kSyntaxError);
  EXPECT_EQ(error_of([] { parse_json("{\"edges\": []}"); }), ErrorCode::kSyntaxError);
  EXPECT_EQ(error_of([] {
              parse_json(R"({"vertex_count": 5, "edges": [{"id": 0, "u": 0, "v": 1, "label": "a"}]})");
            }),
            ErrorCode::kSyntaxError);
  EXPECT_EQ(error_of([] {
              parse_json(R"({"vertex_count": 2, "edges": [{"id": 3, "u": 0, "v": 1, "label": "a"}]})");
            }),
            ErrorCode::kSyntaxError);
}

TEST(Dot, ColorsAndLabels) {
  EXPECT_EQ(to_dot(path_tree(2)),
            "graph tree {\n"
            "  node [style=filled];\n"
            "  v0 [fillcolor=\"white\"];\n"
            "  v1 [fillcolor=\"gray\"];\n"
            "  v2 [fillcolor=\"white\"];\n"
            "  v0 -- v1 [label=\"e0\"];\n"
            "  v1 -- v2 [label=\"e1\"];\n"
            "}\n");
}

TEST(ParseAny, DetectsFormat) {
  const Tree p = path_tree(3);
  EXPECT_EQ(parse_any(to_json(p)), p);
  EXPECT_EQ(parse_any("# comment\ntree\nv0 -- v1 : e0\n"), path_tree(1));
  EXPECT_EQ(parse_any("e0(e1(e2()))"), p);
}

TEST(Bijection, SwappedPathMap) {
  const Tree p = path_tree(3);
  const Bijection h = parse_bijection("e0=e1,e1=e0,e2=e2", p, p);
  EXPECT_EQ(h.images(), (std::vector<EdgeId>{1, 0, 2}));
  EXPECT_EQ(format_bijection(h, p, p), "e0=e1,e1=e0,e2=e2");
}

TEST(Bijection, IdentityAndWhitespace) {
  const Tree s = spider(3, 3, 3);
  std::string text;
  for (EdgeId e = 0; e < 9; ++e) text += (e ? " , " : "") + s.label(e) + " = " + s.label(e);
  EXPECT_EQ(parse_bijection(text, s, s), Bijection::identity(9));
}

TEST(Bijection, Errors) {
  const Tree p = path_tree(3);
  try {
    parse_bijection("e0=e1,e1=e1,e2=e0", p, p);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDuplicateAssignment);
    EXPECT_NE(std::string(e.what()).find("'e1'"), std::string::npos);
  }
  EXPECT_EQ(error_of([&] { parse_bijection("e0=e1,e0=e0,e2=e2", p, p); }),
            ErrorCode::kDuplicateAssignment);
  EXPECT_EQ(error_of([&] { parse_bijection("e0=e1,e1=e0", p, p); }),
            ErrorCode::kMissingAssignment);
  EXPECT_EQ(error_of([&] { parse_bijection("e0=e1,e1=e0,x=e2", p, p); }),
            ErrorCode::kUnknownLabel);
  EXPECT_EQ(error_of([&] { parse_bijection("e0=e1,e1=e0,e2=x", p, p); }),
            ErrorCode::kUnknownLabel);
  EXPECT_EQ(error_of([&] { parse_bijection("e0=e0", path_tree(1), p); }),
            ErrorCode::kSizeMismatch);
  EXPECT_EQ(error_of([&] { parse_bijection("e0e1", p, p); }), ErrorCode::kSyntaxError);
}

TEST(Bijection, EmptyTrees) {
  EXPECT_EQ(parse_bijection("", Tree(), Tree()).size(), 0u);
}

TEST(Bijection, InverseAndApply) {
  const Bijection b(std::vector<EdgeId>{2, 0, 1});
  EXPECT_EQ(b.inverse().images(), (std::vector<EdgeId>{1, 2, 0}));
  EXPECT_EQ(b.apply(EdgeSet(3, {0, 1})), EdgeSet(3, {0, 2}));
  EXPECT_THROW(Bijection(std::vector<EdgeId>{0, 0}), Error);
  EXPECT_THROW(Bijection(std::vector<EdgeId>{0, 2}), Error);
}

TEST(LabelSet, Parsing) {
  const Tree p = path_tree(3);
  EXPECT_EQ(parse_label_set("e0, e2", p), EdgeSet(3, {0, 2}));
  EXPECT_TRUE(parse_label_set("", p).empty());
  EXPECT_EQ(error_of([&] { parse_label_set("e0,zz", p); }), ErrorCode::kUnknownLabel);
}

}  // namespace
}  // namespace lando
