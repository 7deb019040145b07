#include "simpdim/dimension.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace simpdim {

namespace {

struct VecU64Hash {
  std::size_t operator()(const std::vector<std::uint64_t>& v) const {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (std::uint64_t x : v) {
      h ^= x;
      h *= 0x100000001b3ULL;
    }
    return (std::size_t)h;
  }
};

template <class Key, class Hash = std::hash<Key>>
class Cache {
 public:
  bool lookup(const Key& k, Rat& out) const {
    std::shared_lock lock(mu_);
    auto it = map_.find(k);
    if (it == map_.end()) return false;
    out = it->second;
    return true;
  }
  void insert(const Key& k, const Rat& v) {
    std::unique_lock lock(mu_);
    map_.emplace(k, v);
  }

 private:
  mutable std::shared_mutex mu_;
  std::unordered_map<Key, Rat, Hash> map_;
};

// --- complexes with at most 64 distinct labels: faces as bitmasks ---

// dense, order-preserving relabel of the used bits, then sort by value
std::vector<std::uint64_t> canonical_masks(std::vector<std::uint64_t> faces) {
  std::uint64_t used = 0;
  for (std::uint64_t f : faces) used |= f;
  int k = std::popcount(used);
  if (used != (k == 64 ? ~0ULL : (1ULL << k) - 1)) {
    int newbit[64];
    int idx = 0;
    for (std::uint64_t u = used; u; u &= u - 1)
      newbit[std::countr_zero(u)] = idx++;
    for (std::uint64_t& f : faces) {
      std::uint64_t g = 0;
      for (std::uint64_t m = f; m; m &= m - 1)
        g |= 1ULL << newbit[std::countr_zero(m)];
      f = g;
    }
  }
  std::sort(faces.begin(), faces.end());
  return faces;
}

Cache<std::vector<std::uint64_t>, VecU64Hash>& mask_cache() {
  static Cache<std::vector<std::uint64_t>, VecU64Hash> c;
  return c;
}

Rat dim_masks(const std::vector<std::uint64_t>& faces) {
  if (faces.empty()) return Rat(-1);
  Rat cached;
  if (mask_cache().lookup(faces, cached)) return cached;
  Rat sum = 0;
  std::vector<std::uint64_t> sphere;
  for (std::uint64_t x : faces) {
    sphere.clear();
    for (std::uint64_t y : faces) {
      if (y == x) continue;
      std::uint64_t both = x & y;
      if (both == x || both == y) sphere.push_back(y);
    }
    sum += dim_masks(canonical_masks(std::move(sphere)));
    sphere = {};
  }
  Rat d = 1 + sum / Rat((unsigned long)faces.size());
  mask_cache().insert(faces, d);
  return d;
}

// --- generic fallback for wider label sets ---

using FaceList = std::vector<std::vector<int>>;

FaceList canonical_faces(FaceList faces) {
  std::vector<int> labels;
  for (const auto& f : faces) labels.insert(labels.end(), f.begin(), f.end());
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  for (auto& f : faces)
    for (int& v : f)
      v = (int)(std::lower_bound(labels.begin(), labels.end(), v) -
                labels.begin());
  std::sort(faces.begin(), faces.end());
  return faces;
}

std::map<FaceList, Rat>& generic_cache() {
  static std::map<FaceList, Rat> c;
  return c;
}
std::shared_mutex& generic_mu() {
  static std::shared_mutex mu;
  return mu;
}

Rat dim_generic(const FaceList& faces) {
  if (faces.empty()) return Rat(-1);
  {
    std::vector<int> labels;
    for (const auto& f : faces) labels.insert(labels.end(), f.begin(), f.end());
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    if (labels.size() <= 64) {
      // canonical_faces already densified label values when called below,
      // but top-level callers land here too; rebuild masks from scratch
      std::vector<std::uint64_t> masks;
      masks.reserve(faces.size());
      for (const auto& f : faces) {
        std::uint64_t m = 0;
        for (int v : f)
          m |= 1ULL << (std::lower_bound(labels.begin(), labels.end(), v) -
                        labels.begin());
        masks.push_back(m);
      }
      return dim_masks(canonical_masks(std::move(masks)));
    }
  }
  {
    std::shared_lock lock(generic_mu());
    auto it = generic_cache().find(faces);
    if (it != generic_cache().end()) return it->second;
  }
  auto subset = [](const std::vector<int>& a, const std::vector<int>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
  };
  Rat sum = 0;
  for (const auto& x : faces) {
    FaceList sphere;
    for (const auto& y : faces) {
      if (y == x) continue;
      if (subset(y, x) || subset(x, y)) sphere.push_back(y);
    }
    sum += dim_generic(canonical_faces(std::move(sphere)));
  }
  Rat d = 1 + sum / Rat((unsigned long)faces.size());
  std::unique_lock lock(generic_mu());
  generic_cache().emplace(faces, d);
  return d;
}

// --- graphs as adjacency mask rows ---

Cache<std::vector<std::uint64_t>, VecU64Hash>& graph_cache() {
  static Cache<std::vector<std::uint64_t>, VecU64Hash> c;
  return c;
}

// rows: adjacency of the current induced subgraph, densely indexed
Rat dim_graph_rows(const std::vector<std::uint64_t>& rows) {
  if (rows.empty()) return Rat(-1);
  Rat cached;
  if (graph_cache().lookup(rows, cached)) return cached;
  int n = (int)rows.size();
  Rat sum = 0;
  for (int v = 0; v < n; ++v) {
    std::uint64_t nb = rows[v];
    // induced subgraph on the neighborhood, order preserved
    std::vector<std::uint64_t> sub;
    sub.reserve((std::size_t)std::popcount(nb));
    int newbit[64];
    int idx = 0;
    for (std::uint64_t m = nb; m; m &= m - 1) newbit[std::countr_zero(m)] = idx++;
    for (std::uint64_t m = nb; m; m &= m - 1) {
      int u = std::countr_zero(m);
      std::uint64_t row = rows[u] & nb;
      std::uint64_t packed = 0;
      for (std::uint64_t w = row; w; w &= w - 1)
        packed |= 1ULL << newbit[std::countr_zero(w)];
      sub.push_back(packed);
    }
    sum += dim_graph_rows(sub);
  }
  Rat d = 1 + sum / Rat((unsigned long)n);
  graph_cache().insert(rows, d);
  return d;
}

}  // namespace

Rat dim_inductive(const PreComplex& P) {
  FaceList faces;
  faces.reserve(P.size());
  for (const Simplex& f : P.faces()) faces.push_back(f.vertices());
  return dim_generic(canonical_faces(std::move(faces)));
}

Rat dim_inductive_graph(const Graph& g) {
  if (g.vertex_count() == 0) return Rat(-1);
  if (!g.has_masks())
    throw std::length_error("dim_inductive_graph is limited to 64 vertices");
  return dim_graph_rows(g.masks());
}

}  // namespace simpdim
