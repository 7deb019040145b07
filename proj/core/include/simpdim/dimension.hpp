#pragma once

#include "simpdim/complex.hpp"
#include "simpdim/rational.hpp"

namespace simpdim {

// Inductive dimension of a set of simplices P:
//   dim(P) = -1 if P is empty, else 1 + mean over x in P of dim(S_P(x)),
// where S_P(x) = { y in P : y != x, y subset of x or x subset of y }.
// Memoized on the canonical (densely relabeled) form; thread safe.
Rat dim_inductive(const PreComplex& P);
inline Rat dim_inductive(const Complex& G) { return dim_inductive(G.pre()); }

// Graph analogue: dim(g) = -1 for the empty graph, else 1 + mean over
// vertices of dim(induced subgraph on the open neighborhood). Limited to
// 64 vertices (bitmask representation); throws std::length_error beyond.
Rat dim_inductive_graph(const Graph& g);

}  // namespace simpdim
