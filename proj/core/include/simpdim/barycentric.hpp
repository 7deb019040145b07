#pragma once

#include <vector>

#include "simpdim/complex.hpp"
#include "simpdim/genfun.hpp"
#include "simpdim/rational.hpp"

namespace simpdim {

// Stirling number of the second kind S(n,k).
Int stirling2(int n, int k);

// Refinement operator on f-vectors of d-dimensional complexes:
// entry(i,j) = S(j,i) * i! for 1 <= i <= j <= d+1 (1-indexed), 0 below the
// diagonal. Upper triangular with diagonal 1!, 2!, ..., (d+1)!.
struct RefinementOperator {
  int d = -1;
  std::vector<std::vector<Int>> a;  // 0-indexed storage

  const Int& entry(int i, int j) const { return a.at(i - 1).at(j - 1); }
};

RefinementOperator operator_matrix(int d);

// f-vector of the Barycentric refinement: A_d * fv.
FVector refine_fvector(const FVector& fv);

// Explicit Barycentric refinement: the order complex whose vertices are the
// faces of G (labeled by canonical index) and whose simplices are chains
// under strict inclusion. Face-cap guarded.
Complex refine(const Complex& G);

// Perron-Frobenius eigenvector of A_d for the top eigenvalue (d+1)!,
// normalized to sum 1. Exact back-substitution.
std::vector<Rat> pf_eigenvector(int d);

// Limit constant C_d: mean cardinality under the PF profile, i.e. the limit
// of Dim+ under repeated refinement of any complex with top dimension d.
// C_0 = 1; C_1 = 3/2; C_2 = 13/6; (d+1)/2 < C_d < d+1 for d >= 1.
Rat limit_constant(int d);

// Realizability of fv as the f-vector of a simplicial complex
// (Kruskal-Katona): with N_k = fv.counts[k-1] written in its unique cascade
// N_k = C(a_k,k) + C(a_{k-1},k-1) + ... + C(a_s,s), requires
// N_{k+1} <= C(a_k,k+1) + C(a_{k-1},k) + ... + C(a_s,s+1) for every k.
// Trailing zero counts are ignored; internal zeros or negatives fail.
bool kruskal_katona_valid(const FVector& fv);

// One refinement step at f-vector level: Dim+(A fv) - Dim+(fv).
Rat conjecture_a_delta(const FVector& fv);

}  // namespace simpdim
