#include "simpdim/simplex.hpp"

#include <algorithm>
#include <stdexcept>

namespace simpdim {

Simplex::Simplex(std::vector<int> vertices) : v_(std::move(vertices)) {
  std::sort(v_.begin(), v_.end());
  v_.erase(std::unique(v_.begin(), v_.end()), v_.end());
  if (v_.empty()) throw std::invalid_argument("a simplex needs at least one vertex");
}

Simplex::Simplex(std::initializer_list<int> vertices)
    : Simplex(std::vector<int>(vertices)) {}

bool Simplex::contains(const Simplex& other) const {
  return std::includes(v_.begin(), v_.end(), other.v_.begin(), other.v_.end());
}

bool Simplex::canonical_less(const Simplex& a, const Simplex& b) {
  if (a.v_.size() != b.v_.size()) return a.v_.size() < b.v_.size();
  return a.v_ < b.v_;
}

}  // namespace simpdim
