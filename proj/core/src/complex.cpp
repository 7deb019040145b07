#include "simpdim/complex.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <set>
#include <stdexcept>
#include <string>

#include "simpdim/rng.hpp"

namespace simpdim {

namespace {

constexpr std::size_t kDefaultFaceCap = 5'000'000;

std::vector<Simplex> canonical_sorted(std::vector<Simplex> faces) {
  std::sort(faces.begin(), faces.end(), Simplex::canonical_less);
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  return faces;
}

void check_cap(std::size_t n) {
  if (n > face_cap())
    throw std::length_error(
        "face count " + std::to_string(n) + " exceeds cap " +
        std::to_string(face_cap()) + " (override with SIMPDIM_FACE_CAP)");
}

}  // namespace

std::size_t face_cap() {
  static const std::size_t cap = [] {
    if (const char* s = std::getenv("SIMPDIM_FACE_CAP")) {
      char* end = nullptr;
      unsigned long long v = std::strtoull(s, &end, 10);
      if (end && *end == '\0' && v > 0) return (std::size_t)v;
    }
    return kDefaultFaceCap;
  }();
  return cap;
}

PreComplex::PreComplex(std::vector<Simplex> faces)
    : faces_(canonical_sorted(std::move(faces))) {}

bool PreComplex::contains(const Simplex& x) const {
  return std::binary_search(faces_.begin(), faces_.end(), x,
                            Simplex::canonical_less);
}

bool PreComplex::is_closed() const {
  // checking codimension-1 subsets suffices by induction on cardinality
  for (const Simplex& f : faces_) {
    if (f.cardinality() == 1) continue;
    std::vector<int> sub(f.vertices().begin(), f.vertices().end() - 1);
    for (int i = f.cardinality() - 1; i >= 0; --i) {
      if (!contains(Simplex(sub))) return false;
      if (i > 0) sub[i - 1] = f.vertices()[i];
    }
  }
  return true;
}

std::vector<int> PreComplex::labels() const {
  std::vector<int> out;
  for (const Simplex& f : faces_)
    out.insert(out.end(), f.vertices().begin(), f.vertices().end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Complex Complex::generate(const std::vector<Simplex>& generators) {
  std::set<std::vector<int>> closed;
  for (const Simplex& g : generators) {
    const std::vector<int>& v = g.vertices();
    int k = (int)v.size();
    if (k > 25)
      throw std::length_error("generator with " + std::to_string(k) +
                              " vertices would overflow the face cap");
    for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
      std::vector<int> face;
      for (int i = 0; i < k; ++i)
        if (mask >> i & 1) face.push_back(v[i]);
      closed.insert(std::move(face));
      check_cap(closed.size());
    }
  }
  std::vector<Simplex> faces;
  faces.reserve(closed.size());
  for (const std::vector<int>& f : closed) faces.emplace_back(f);
  return Complex(PreComplex(std::move(faces)));
}

Complex Complex::from_faces(std::vector<Simplex> faces) {
  PreComplex p(std::move(faces));
  if (!p.is_closed())
    throw std::invalid_argument("face set is not closed under subsets");
  return Complex(std::move(p));
}

Complex Complex::from_faces_unchecked(std::vector<Simplex> faces) {
  return Complex(PreComplex(std::move(faces)));
}

Graph::Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  for (auto& [u, v] : edges) {
    if (u == v) throw std::invalid_argument("self-loop");
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw std::invalid_argument("edge endpoint out of range");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);
  nbr_.resize(n_);
  for (auto [u, v] : edges_) {
    nbr_[u].push_back(v);
    nbr_[v].push_back(u);
  }
  for (auto& l : nbr_) std::sort(l.begin(), l.end());
  if (n_ <= 64) {
    adj_.assign(n_, 0);
    for (auto [u, v] : edges_) {
      adj_[u] |= 1ULL << v;
      adj_[v] |= 1ULL << u;
    }
  }
}

bool Graph::adjacent(int u, int v) const {
  if (has_masks()) return u != v && (adj_[u] >> v & 1);
  const auto& l = nbr_[u];
  return std::binary_search(l.begin(), l.end(), v);
}

Complex whitney_complex(const Graph& g) {
  std::vector<Simplex> faces;
  std::vector<int> clique;
  if (g.has_masks()) {
    int n = g.vertex_count();
    std::uint64_t all = n == 64 ? ~0ULL : (1ULL << n) - 1;
    auto extend = [&](auto&& self, std::uint64_t cand) -> void {
      while (cand) {
        int v = std::countr_zero(cand);
        cand &= cand - 1;
        clique.push_back(v);
        faces.emplace_back(clique);
        check_cap(faces.size());
        std::uint64_t above = v == 63 ? 0 : ~0ULL << (v + 1);
        self(self, cand & g.masks()[v] & above);
        clique.pop_back();
      }
    };
    extend(extend, all);
  } else {
    auto extend = [&](auto&& self, const std::vector<int>& cand) -> void {
      for (std::size_t i = 0; i < cand.size(); ++i) {
        int v = cand[i];
        clique.push_back(v);
        faces.emplace_back(clique);
        check_cap(faces.size());
        std::vector<int> next;
        const auto& nb = g.neighbors(v);
        std::set_intersection(cand.begin() + i + 1, cand.end(), nb.begin(),
                              nb.end(), std::back_inserter(next));
        self(self, next);
        clique.pop_back();
      }
    };
    std::vector<int> all(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) all[v] = v;
    extend(extend, all);
  }
  return Complex::from_faces_unchecked(std::move(faces));
}

Graph one_skeleton(const Complex& G) {
  std::vector<int> ls = G.labels();
  auto dense = [&](int v) {
    return (int)(std::lower_bound(ls.begin(), ls.end(), v) - ls.begin());
  };
  std::vector<std::pair<int, int>> edges;
  for (const Simplex& f : G.faces())
    if (f.cardinality() == 2)
      edges.emplace_back(dense(f.vertices()[0]), dense(f.vertices()[1]));
  return Graph((int)ls.size(), std::move(edges));
}

Graph zykov_join(const Graph& a, const Graph& b) {
  int na = a.vertex_count(), nb = b.vertex_count();
  std::vector<std::pair<int, int>> edges = a.edges();
  for (auto [u, v] : b.edges()) edges.emplace_back(na + u, na + v);
  for (int u = 0; u < na; ++u)
    for (int v = 0; v < nb; ++v) edges.emplace_back(u, na + v);
  return Graph(na + nb, std::move(edges));
}

Complex complex_E(int n) {
  if (n < 0) throw std::invalid_argument("E_n needs n >= 0");
  std::vector<Simplex> gens;
  for (int i = 0; i < n; ++i) gens.push_back(Simplex{i});
  return Complex::generate(gens);
}

Complex complex_K(int n) {
  if (n < 0) throw std::invalid_argument("K_n needs n >= 0");
  if (n == 0) return Complex();
  if (n > 25) throw std::length_error("K_n above the face cap");
  check_cap(((std::size_t)1 << n) - 1);
  std::vector<Simplex> faces;
  faces.reserve(((std::size_t)1 << n) - 1);
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> f;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) f.push_back(i);
    faces.emplace_back(std::move(f));
  }
  return Complex::from_faces_unchecked(std::move(faces));
}

Complex complex_C(int n) {
  if (n < 3) throw std::invalid_argument("C_n needs n >= 3");
  std::vector<Simplex> gens;
  for (int i = 0; i < n; ++i) gens.push_back(Simplex{i, (i + 1) % n});
  return Complex::generate(gens);
}

Complex complex_P(int n) {
  if (n < 1) throw std::invalid_argument("P_n needs n >= 1");
  std::vector<Simplex> gens{Simplex{0}};
  for (int i = 0; i + 1 < n; ++i) gens.push_back(Simplex{i, i + 1});
  return Complex::generate(gens);
}

Complex complex_Kmn(int m, int n) {
  if (m < 0 || n < 0) throw std::invalid_argument("K_{m,n} needs m,n >= 0");
  return join(complex_E(m), complex_E(n));
}

Complex cross_polytope(int d) {
  if (d < 0) throw std::invalid_argument("cross polytope needs d >= 0");
  Complex s = complex_E(2);
  for (int i = 0; i < d; ++i) s = join(s, complex_E(2));
  return s;
}

Complex octahedron() { return cross_polytope(2); }

Complex icosahedron() {
  // poles 0 and 11, upper ring 1..5, lower ring 6..10
  static const int tri[20][3] = {
      {0, 1, 2},  {0, 2, 3},  {0, 3, 4},  {0, 4, 5},  {0, 5, 1},
      {1, 2, 6},  {2, 6, 7},  {2, 3, 7},  {3, 7, 8},  {3, 4, 8},
      {4, 8, 9},  {4, 5, 9},  {5, 9, 10}, {5, 1, 10}, {1, 10, 6},
      {6, 7, 11}, {7, 8, 11}, {8, 9, 11}, {9, 10, 11}, {10, 6, 11}};
  std::vector<Simplex> gens;
  for (auto& t : tri) gens.push_back(Simplex{t[0], t[1], t[2]});
  return Complex::generate(gens);
}

Complex family(Family kind, int n, int m) {
  switch (kind) {
    case Family::E: return complex_E(n);
    case Family::K: return complex_K(n);
    case Family::C: return complex_C(n);
    case Family::P: return complex_P(n);
    case Family::Kmn: return complex_Kmn(n, m);
    case Family::Cross: return cross_polytope(n);
    case Family::Octahedron: return octahedron();
    case Family::Icosahedron: return icosahedron();
  }
  throw std::invalid_argument("unknown family");
}

PreComplex unit_sphere(const Complex& G, const Simplex& x) {
  if (!G.contains(x)) throw std::invalid_argument("x is not a face of G");
  std::vector<Simplex> sphere;
  for (const Simplex& y : G.faces()) {
    if (y == x) continue;
    if (x.contains(y) || y.contains(x)) sphere.push_back(y);
  }
  return PreComplex(std::move(sphere));
}

PreComplex unit_ball(const Complex& G, const Simplex& x) {
  PreComplex s = unit_sphere(G, x);
  std::vector<Simplex> faces = s.faces();
  faces.push_back(x);
  return PreComplex(std::move(faces));
}

Complex join(const Complex& A, const Complex& B) {
  if (A.empty()) return B;
  if (B.empty()) return A;
  std::size_t na = A.size(), nb = B.size();
  check_cap(na + nb + na * nb);
  int offset = A.labels().back() + 1;
  std::vector<Simplex> faces = A.faces();
  faces.reserve(na + nb + na * nb);
  std::vector<std::vector<int>> shifted;
  shifted.reserve(nb);
  for (const Simplex& y : B.faces()) {
    std::vector<int> s = y.vertices();
    for (int& v : s) v += offset;
    faces.emplace_back(s);
    shifted.push_back(std::move(s));
  }
  for (const Simplex& x : A.faces())
    for (const std::vector<int>& y : shifted) {
      std::vector<int> u = x.vertices();
      u.insert(u.end(), y.begin(), y.end());  // already sorted: y above offset
      faces.emplace_back(std::move(u));
    }
  // union of two closed sets plus all cross products is closed
  return Complex::from_faces_unchecked(std::move(faces));
}

int dim_max(const PreComplex& P) {
  return P.empty() ? -1 : P.faces().back().dimension();
}

Int euler_characteristic(const PreComplex& P) {
  Int chi = 0;
  for (const Simplex& f : P.faces()) chi += f.dimension() % 2 == 0 ? 1 : -1;
  return chi;
}

std::pair<Int, Int> sphere_genus_sum(const Complex& G) {
  Int lhs = 0;
  const auto& faces = G.faces();
  for (const Simplex& x : faces) {
    std::vector<const Simplex*> s;
    for (const Simplex& y : faces)
      if (!(y == x) && (x.contains(y) || y.contains(x))) s.push_back(&y);
    // order-complex Euler characteristic of the comparable set: signed
    // count over chains, chain of length L contributing (-1)^(L-1)
    std::size_t m = s.size();
    std::vector<std::vector<int>> succ(m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j)
        if (s[j]->contains(*s[i])) succ[i].push_back((int)j);
    Int chi = 0;
    auto dfs = [&](auto&& self, int i, int sign) -> void {
      chi += sign;
      for (int j : succ[i]) self(self, j, -sign);
    };
    for (std::size_t i = 0; i < m; ++i) dfs(dfs, (int)i, 1);
    Int term = 1 - chi;
    lhs += x.dimension() % 2 == 0 ? term : -term;
  }
  return {lhs, euler_characteristic(G)};
}

Complex random_complex(int n, int m, std::uint64_t seed) {
  if (n < 1 || m < 0) throw std::invalid_argument("random_complex needs n >= 1, m >= 0");
  std::vector<Simplex> gens;
  for (int i = 0; i < m; ++i) {
    int k = 1 + (int)(counter_rng(seed, (std::uint64_t)i, 0) % (std::uint64_t)n);
    std::vector<int> verts;
    for (int j = 1; j <= k; ++j)
      verts.push_back((int)(counter_rng(seed, (std::uint64_t)i, (std::uint64_t)j) %
                            (std::uint64_t)n));
    gens.push_back(Simplex(std::move(verts)));
  }
  return Complex::generate(gens);
}

}  // namespace simpdim
