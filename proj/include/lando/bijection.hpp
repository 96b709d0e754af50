#pragma once

#include <cstddef>
#include <vector>

#include "lando/tree.hpp"

namespace lando {

// Bijection between the edge sets of two trees with the same edge count,
// stored by edge id: image(e) is the edge of the second tree assigned to
// edge e of the first. Labels are attached by the text formats in
// diagram_io.
class Bijection {
 public:
  Bijection() = default;
  // Throws Error(kInvalidBijection) unless `image` is a permutation of 0..k-1.
  explicit Bijection(std::vector<EdgeId> image);

  static Bijection identity(std::size_t k);

  std::size_t size() const { return image_.size(); }
  EdgeId operator()(EdgeId e) const { return image_.at(e); }
  const std::vector<EdgeId>& images() const { return image_; }

  Bijection inverse() const;

  // Image of an edge set of the first tree, as an edge set of the second.
  EdgeSet apply(const EdgeSet& s) const;

  bool operator==(const Bijection&) const = default;

 private:
  std::vector<EdgeId> image_;
};

}  // namespace lando
