#pragma once

#include "lando/tree.hpp"

namespace lando {

// p is on one side of q: p and q are disjoint and every path between two
// endpoints of p-edges crosses q an even number of times. Intersecting sets
// yield false rather than an error.
bool on_one_side(const Tree& t, const EdgeSet& p, const EdgeSet& q);

// Same test against a prebuilt parity table for q.
bool on_one_side(const Tree& t, const EdgeSet& p, const ParityTable& q);

bool unlinked(const Tree& t, const EdgeSet& p, const EdgeSet& q);

// Component-coloring formulation: cut the interiors of q's edges, 2-color the
// quotient tree whose nodes are the remaining components, and require p to
// sit inside one color class (then the same with p and q swapped). Kept
// independent of the parity-table path.
bool unlinked_oracle(const Tree& t, const EdgeSet& p, const EdgeSet& q);

}  // namespace lando
