#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "simpdim/rational.hpp"
#include "simpdim/simplex.hpp"

namespace simpdim {

// Face-count cap for materializing operations (generate, join, refine,
// whitney_complex). Default 5'000'000; override with SIMPDIM_FACE_CAP.
std::size_t face_cap();

// A finite set of simplices in canonical order (cardinality, then lex),
// with no closure requirement. Unit spheres and stars live here.
class PreComplex {
 public:
  PreComplex() = default;
  explicit PreComplex(std::vector<Simplex> faces);

  const std::vector<Simplex>& faces() const { return faces_; }
  std::size_t size() const { return faces_.size(); }
  bool empty() const { return faces_.empty(); }
  bool contains(const Simplex& x) const;
  // every nonempty proper subset of every face is present
  bool is_closed() const;
  std::vector<int> labels() const;

  bool operator==(const PreComplex&) const = default;

 private:
  std::vector<Simplex> faces_;
};

// An abstract simplicial complex: faces closed under nonempty subsets.
// The empty complex is valid; the empty set is never stored as a face.
class Complex {
 public:
  Complex() = default;

  // Downward closure of the generators.
  static Complex generate(const std::vector<Simplex>& generators);
  // Validates closure; throws std::invalid_argument if violated.
  static Complex from_faces(std::vector<Simplex> faces);
  // Caller guarantees closure. For operations whose output is closed by
  // construction (power sets, joins, clique and order complexes).
  static Complex from_faces_unchecked(std::vector<Simplex> faces);

  const std::vector<Simplex>& faces() const { return pre_.faces(); }
  std::size_t size() const { return pre_.size(); }
  bool empty() const { return pre_.empty(); }
  bool contains(const Simplex& x) const { return pre_.contains(x); }
  std::vector<int> labels() const { return pre_.labels(); }
  const PreComplex& pre() const { return pre_; }

  bool operator==(const Complex&) const = default;

 private:
  explicit Complex(PreComplex p) : pre_(std::move(p)) {}
  PreComplex pre_;
};

// Finite simple graph on vertex labels 0..n-1.
class Graph {
 public:
  explicit Graph(int n, std::vector<std::pair<int, int>> edges = {});

  int vertex_count() const { return n_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return nbr_[v]; }
  bool adjacent(int u, int v) const;

  // adjacency bitmask rows, available iff vertex_count() <= 64
  bool has_masks() const { return !adj_.empty(); }
  const std::vector<std::uint64_t>& masks() const { return adj_; }

  bool operator==(const Graph&) const = default;

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> nbr_;
  std::vector<std::uint64_t> adj_;
};

// All cliques of g (the clique complex). Vertices of g appear as 0-faces.
Complex whitney_complex(const Graph& g);

// Edges and vertices of the 1-skeleton as a graph on the dense relabeling
// of the complex's vertex labels (label order preserved).
Graph one_skeleton(const Complex& G);

// Disjoint union plus all edges between the two sides.
Graph zykov_join(const Graph& a, const Graph& b);

enum class Family { E, K, C, P, Kmn, Cross, Octahedron, Icosahedron };

// Named families. E(n): n isolated vertices. K(n): complete. C(n): n-cycle,
// n >= 3. P(n): path on n vertices. Kmn: complete bipartite. Cross(d):
// the d-sphere join of d+1 copies of E(2). Octahedron = Cross(2).
// Icosahedron: the 20-triangle boundary complex.
Complex family(Family kind, int n, int m = 0);

Complex complex_E(int n);
Complex complex_K(int n);
Complex complex_C(int n);
Complex complex_P(int n);
Complex complex_Kmn(int m, int n);
Complex cross_polytope(int d);
Complex octahedron();
Complex icosahedron();

// Faces of G strictly comparable to x, excluding x. x must be a face of G.
PreComplex unit_sphere(const Complex& G, const Simplex& x);
// unit_sphere plus x itself.
PreComplex unit_ball(const Complex& G, const Simplex& x);

// Join: faces of A, faces of B relabeled above max label of A, and all
// unions across. Joining with the empty complex is the identity.
Complex join(const Complex& A, const Complex& B);

// Largest face dimension; -1 for the empty complex.
int dim_max(const PreComplex& P);
inline int dim_max(const Complex& G) { return dim_max(G.pre()); }

// Sum of (-1)^dim over faces; 0 for the empty complex.
Int euler_characteristic(const PreComplex& P);
inline Int euler_characteristic(const Complex& G) {
  return euler_characteristic(G.pre());
}

// Gauss-Bonnet style check: lhs = sum over faces x of
// (-1)^dim(x) * (1 - chi(S(x))) where S(x) is the unit sphere of x in the
// order complex (chains of faces strictly comparable to x), rhs = chi(G).
// The two agree for every complex; both are returned so callers can assert.
std::pair<Int, Int> sphere_genus_sum(const Complex& G);

// Seeded random complex: closure of m generators, each the set of k vertex
// draws from {0..n-1} (k itself uniform in 1..n), via counter_rng.
Complex random_complex(int n, int m, std::uint64_t seed);

}  // namespace simpdim
