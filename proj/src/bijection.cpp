#include "lando/bijection.hpp"

#include <numeric>
#include <string>

#include "lando/error.hpp"

namespace lando {

Bijection::Bijection(std::vector<EdgeId> image) : image_(std::move(image)) {
  std::vector<bool> hit(image_.size(), false);
  for (EdgeId e : image_) {
    if (e >= image_.size() || hit[e]) {
      throw Error(ErrorCode::kInvalidBijection,
                  "edge image " + std::to_string(e) +
                      " is out of range or assigned twice");
    }
    hit[e] = true;
  }
}

Bijection Bijection::identity(std::size_t k) {
  std::vector<EdgeId> image(k);
  std::iota(image.begin(), image.end(), EdgeId{0});
  return Bijection(std::move(image));
}

Bijection Bijection::inverse() const {
  std::vector<EdgeId> inv(image_.size());
  for (EdgeId e = 0; e < image_.size(); ++e) inv[image_[e]] = e;
  return Bijection(std::move(inv));
}

EdgeSet Bijection::apply(const EdgeSet& s) const {
  EdgeSet out(image_.size());
  for (EdgeId e : s.members()) out.insert(image_.at(e));
  return out;
}

}  // namespace lando
