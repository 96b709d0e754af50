#pragma once

// Exhaustive experiments over all free trees up to a size bound.

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace lando {

struct CensusOptions {
  std::size_t max_edges = 0;
  std::size_t jobs = 1;
  // Fill the millis column. Off by default so the CSV is reproducible
  // byte for byte.
  bool timing = false;
  // Progress lines, one per edge count; may be null.
  std::ostream* progress = nullptr;
};

struct CensusResult {
  std::string csv;
  // Rows whose answer was "no", without the header.
  std::vector<std::string> negatives;
};

// Columns: canonical_g,canonical_h,realizable,witness,nodes,millis.
// Unordered pairs (g index <= h index in enumeration order) for every edge
// count 1..max_edges.
CensusResult run_census(const CensusOptions& options);

// Columns: k,canonical_g,realizable,witness,nodes,millis. Every free tree
// with 1..max_edges edges against the path with as many edges.
CensusResult run_problem2(const CensusOptions& options);

}  // namespace lando
