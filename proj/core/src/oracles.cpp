#include "simpdim/oracles.hpp"

#include <algorithm>
#include <stdexcept>

namespace simpdim {

std::vector<Complex> enumerate_complexes(int n) {
  if (n < 0 || n > 5)
    throw std::invalid_argument("enumerate_complexes supports 0 <= n <= 5");
  // nonempty subsets of {0..n-1} in canonical order: subsets of a face
  // always precede it, so the downset condition is checkable incrementally
  std::vector<std::vector<int>> subs;
  for (int k = 1; k <= n; ++k) {
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      subs.push_back(idx);
      int i = k - 1;
      while (i >= 0 && idx[i] == n - k + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  std::stable_sort(subs.begin(), subs.end(),
                   [](const auto& a, const auto& b) {
                     if (a.size() != b.size()) return a.size() < b.size();
                     return a < b;
                   });
  std::vector<int> pos((std::size_t)1 << n, -1);
  auto mask_of = [](const std::vector<int>& s) {
    std::uint64_t m = 0;
    for (int v : s) m |= 1ULL << v;
    return m;
  };
  for (std::size_t i = 0; i < subs.size(); ++i) pos[mask_of(subs[i])] = (int)i;
  // parents[i]: indices of the codimension-1 subsets of subs[i]
  std::vector<std::vector<int>> parents(subs.size());
  for (std::size_t i = 0; i < subs.size(); ++i)
    if (subs[i].size() > 1)
      for (int v : subs[i])
        parents[i].push_back(pos[mask_of(subs[i]) & ~(1ULL << v)]);

  std::vector<Complex> out;
  std::vector<char> chosen(subs.size(), 0);
  std::vector<int> current;
  auto emit = [&] {
    std::vector<Simplex> faces;
    faces.reserve(current.size());
    for (int i : current) faces.emplace_back(subs[i]);
    out.push_back(Complex::from_faces_unchecked(std::move(faces)));
  };
  auto dfs = [&](auto&& self, std::size_t i) -> void {
    if (i == subs.size()) {
      emit();
      return;
    }
    self(self, i + 1);
    for (int p : parents[i])
      if (!chosen[p]) return;
    chosen[i] = 1;
    current.push_back((int)i);
    self(self, i + 1);
    current.pop_back();
    chosen[i] = 0;
  };
  dfs(dfs, 0);
  return out;
}

bool colex_realizable(const FVector& fv) {
  std::vector<Int> counts = fv.counts;
  while (!counts.empty() && counts.back() == 0) counts.pop_back();
  if (counts.empty()) return true;
  std::vector<std::vector<std::vector<int>>> levels;  // k-subsets per level
  for (std::size_t k = 0; k < counts.size(); ++k) {
    if (counts[k] <= 0) return false;
    if (!counts[k].fits_ulong_p()) return false;  // out of constructive range
    unsigned long want = counts[k].get_ui();
    std::vector<std::vector<int>> level;
    std::vector<int> s((std::size_t)k + 1);
    for (std::size_t i = 0; i <= k; ++i) s[i] = (int)i;
    for (unsigned long c = 0; c < want; ++c) {
      level.push_back(s);
      // colex successor: bump the lowest index that can grow, reset below
      std::size_t i = 0;
      while (i + 1 < s.size() && s[i] + 1 == s[i + 1]) ++i;
      ++s[i];
      for (std::size_t j = 0; j < i; ++j) s[j] = (int)j;
    }
    levels.push_back(std::move(level));
  }
  // closure: every codimension-1 subset of a chosen set must be chosen
  for (std::size_t k = 1; k < levels.size(); ++k) {
    const auto& below = levels[k - 1];
    for (const auto& s : levels[k]) {
      for (std::size_t drop = 0; drop < s.size(); ++drop) {
        std::vector<int> sub;
        for (std::size_t i = 0; i < s.size(); ++i)
          if (i != drop) sub.push_back(s[i]);
        if (!std::binary_search(below.begin(), below.end(), sub,
                                [](const auto& a, const auto& b) {
                                  // colex comparison
                                  for (std::size_t i = a.size(); i-- > 0;)
                                    if (a[i] != b[i]) return a[i] < b[i];
                                  return false;
                                }))
          return false;
      }
    }
  }
  return true;
}

}  // namespace simpdim
