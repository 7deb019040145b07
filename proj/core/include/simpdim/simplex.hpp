#pragma once

#include <compare>
#include <initializer_list>
#include <vector>

namespace simpdim {

// A simplex is a finite nonempty set of integer vertex labels, stored sorted
// ascending without duplicates. The empty set is never represented.
class Simplex {
 public:
  explicit Simplex(std::vector<int> vertices);
  Simplex(std::initializer_list<int> vertices);

  const std::vector<int>& vertices() const { return v_; }
  int cardinality() const { return (int)v_.size(); }
  int dimension() const { return (int)v_.size() - 1; }

  // true iff other is a subset of this (not necessarily proper)
  bool contains(const Simplex& other) const;

  bool operator==(const Simplex&) const = default;

  // canonical order: by cardinality, then lexicographically on vertices
  static bool canonical_less(const Simplex& a, const Simplex& b);

 private:
  std::vector<int> v_;
};

}  // namespace simpdim
