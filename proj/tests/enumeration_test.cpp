#include "lando/enumeration.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "lando/error.hpp"
#include "oracles.hpp"

namespace lando {
namespace {

Tree shuffled(const Tree& t, std::mt19937& rng) {
  std::vector<VertexId> perm(t.vertex_count());
  std::iota(perm.begin(), perm.end(), VertexId{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<EdgeSpec> specs;
  for (const Edge& e : t.edges()) specs.push_back({perm[e.u], perm[e.v], e.label});
  std::shuffle(specs.begin(), specs.end(), rng);
  return build_tree(specs);
}

TEST(EnumerateFreeTrees, Counts) {
  const std::vector<std::size_t> expected{1, 1, 1, 2, 3, 6, 11, 23, 47, 106};
  for (std::size_t k = 0; k < expected.size(); ++k) {
    EXPECT_EQ(enumerate_free_trees(k).size(), expected[k]) << "k=" << k;
  }
}

TEST(EnumerateFreeTrees, MatchesPruferOracle) {
  for (int k = 1; k <= 8; ++k) {
    const auto oracle = testing::prufer_free_tree_codes(k);
    std::set<std::uint64_t> ours;
    for (const Tree& t : enumerate_free_trees(static_cast<std::size_t>(k))) {
      ours.insert(testing::free_tree_code(testing::adjacency_of(t)));
    }
    EXPECT_EQ(ours.size(), oracle.size()) << "k=" << k;
    EXPECT_EQ(ours, std::set<std::uint64_t>(oracle.begin(), oracle.end()));
  }
}

TEST(EnumerateFreeTrees, SortedLabelledAndCanonical) {
  for (std::size_t k = 0; k <= 8; ++k) {
    const std::vector<Tree> trees = enumerate_free_trees(k);
    for (std::size_t i = 0; i < trees.size(); ++i) {
      const Tree& t = trees[i];
      EXPECT_EQ(t.edge_count(), k);
      for (EdgeId e = 0; e < k; ++e) EXPECT_EQ(t.label(e), "e" + std::to_string(e));
      EXPECT_EQ(canonical_tree(t), t);
      if (i > 0) EXPECT_LT(canonical_form(trees[i - 1]), canonical_form(t));
    }
  }
}

TEST(EnumerateFreeTrees, ThreeEdges) {
  const std::vector<Tree> trees = enumerate_free_trees(3);
  ASSERT_EQ(trees.size(), 2u);
  std::set<std::string> forms{canonical_form(trees[0]), canonical_form(trees[1])};
  EXPECT_EQ(forms, (std::set<std::string>{canonical_form(path_tree(3)),
                                          canonical_form(star_tree(3))}));
}

TEST(CanonicalForm, Examples) {
  const Tree p3 = path_tree(3);
  const Tree reordered = build_tree({{3, 2, "x"}, {0, 1, "y"}, {1, 3, "z"}});
  EXPECT_EQ(canonical_form(p3), canonical_form(reordered));
  EXPECT_NE(canonical_form(p3), canonical_form(star_tree(3)));
  EXPECT_EQ(canonical_form(p3), "[(())(())]");
  EXPECT_EQ(canonical_form(star_tree(3)), "(()()())");
  EXPECT_EQ(canonical_form(Tree()), "()");
}

TEST(CanonicalForm, DistinctAtNineEdges) {
  std::set<std::string> forms;
  for (const Tree& t : enumerate_free_trees(9)) forms.insert(canonical_form(t));
  EXPECT_EQ(forms.size(), 106u);
}

TEST(CanonicalForm, InvariantUnderRelabeling) {
  std::mt19937 rng(7);
  for (std::size_t k = 1; k <= 7; ++k) {
    for (const Tree& t : enumerate_free_trees(k)) {
      const std::string form = canonical_form(t);
      for (int trial = 0; trial < 100; ++trial) {
        const Tree r = shuffled(t, rng);
        ASSERT_EQ(canonical_form(r), form);
        ASSERT_EQ(canonical_tree(r), t);
      }
    }
  }
}

TEST(Fixtures, DoubleStar) {
  const Tree t = double_star(4, 4);
  EXPECT_EQ(t.edge_count(), 9u);
  EXPECT_EQ(t.degree(0), 5u);
  EXPECT_EQ(t.degree(1), 5u);
  EXPECT_EQ(t.edge(0).u, 0u);
  EXPECT_EQ(t.edge(0).v, 1u);
  EXPECT_EQ(double_star(2, 5).edge_count(), 8u);
}

TEST(Fixtures, Spider) {
  const Tree t = spider(3, 3, 3);
  EXPECT_EQ(t.edge_count(), 9u);
  EXPECT_EQ(t.degree(0), 3u);
  for (VertexId leaf : {3u, 6u, 9u}) {
    EXPECT_EQ(t.degree(leaf), 1u);
    EXPECT_EQ(testing::distance(t, 0, leaf), 3);
  }
  EXPECT_EQ(spider(1, 1, 1), star_tree(3));
  EXPECT_EQ(spider(2, 3, 4).edge_count(), 9u);
}

TEST(Fixtures, PathAndStar) {
  const Tree p = path_tree(5);
  for (EdgeId e = 0; e < 5; ++e) {
    EXPECT_EQ(p.edge(e).u, e);
    EXPECT_EQ(p.edge(e).v, e + 1);
  }
  const Tree s = star_tree(4);
  EXPECT_EQ(s.degree(0), 4u);
}

TEST(Fixtures, InvalidParameters) {
  EXPECT_THROW(path_tree(0), Error);
  EXPECT_THROW(star_tree(0), Error);
  EXPECT_THROW(double_star(0, 3), Error);
  EXPECT_THROW(spider(1, 0, 1), Error);
  try {
    spider(0, 1, 1);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidParameter);
  }
}

}  // namespace
}  // namespace lando
