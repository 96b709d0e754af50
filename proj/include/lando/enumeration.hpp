#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lando/tree.hpp"

namespace lando {

// Isomorphism-complete string for free trees. Unicentroidal trees encode as
// the sorted AHU form rooted at the centroid; bicentroidal trees as
// "[" + the two half forms in sorted order + "]".
std::string canonical_form(const Tree& t);

// Isomorphic copy of `t` with vertices in canonical pre-order (children
// visited in increasing rooted_form order) and edges labelled "e0".."e{k-1}"
// in the order their child vertices are visited. Isomorphic inputs yield
// identical outputs.
Tree canonical_tree(const Tree& t);

// One representative per isomorphism class of free trees with `k_edges`
// edges, in strictly increasing canonical_form order, each in canonical_tree
// layout.
std::vector<Tree> enumerate_free_trees(std::size_t k_edges);

// Fixture layouts, edges labelled "e0".. in the order listed:
//   path_tree(k):      vertices 0..k, edge i = (i, i+1).
//   star_tree(k):      center 0, edge i = (0, i+1).
//   double_star(a, b): centers 0 and 1, e0 = (0, 1), then a leaves on 0,
//                      then b leaves on 1.
//   spider(l1,l2,l3):  center 0, legs built one after another from the
//                      center outward.
// Every parameter must be >= 1 (kInvalidParameter otherwise).
Tree path_tree(std::size_t k);
Tree star_tree(std::size_t k);
Tree double_star(std::size_t a, std::size_t b);
Tree spider(std::size_t l1, std::size_t l2, std::size_t l3);

}  // namespace lando
