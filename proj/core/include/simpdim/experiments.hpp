#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "simpdim/complex.hpp"
#include "simpdim/genfun.hpp"
#include "simpdim/rational.hpp"

namespace simpdim {

struct ErParams {
  int n = 0;
  Rat p = 0;
  std::uint64_t seed = 0;
};

// G(n,p) sample. Edge (i,j), i<j, at column-major index e (the graph6 edge
// order) is present iff counter_rng(seed, sample_index, e) < floor(p*2^64).
// Exact for dyadic p (0, 1/2, 1, ...); bias below 2^-64 otherwise.
// Deterministic in (seed, sample_index) alone, independent of thread count.
Graph sample_er(const ErParams& params, std::uint64_t sample_index);

// Graph on n vertices from an edge bitmask in column-major order (the
// graph6 bit order): bit e covers (i,j), e = j(j-1)/2 + i, i < j.
Graph graph_from_edge_mask(int n, std::uint64_t mask);

// All 2^C(n,2) labeled graphs in ascending edge-mask order. n <= 7.
void enumerate_labeled_graphs(int n, const std::function<void(const Graph&)>& fn);

// Exact expectation of Dim+ of the clique complex over G(n,p). n <= 7.
Rat er_dim_avg_expectation(int n, const Rat& p);

// Coefficients (constant term first) of d_n(p), the expected graph
// inductive dimension of G(n,p):
//   d_0 = -1,  d_{n+1}(p) = 1 + sum_k C(n,k) p^k (1-p)^(n-k) d_k(p).
std::vector<Rat> inductive_dim_polynomial(int n);

// Inequality margin delta(G) = Dim+(G) - dim+(G)/2; >= 0, with equality
// exactly for complete complexes.
Rat delta(const Complex& G);

struct DeltaMaxResult {
  Rat value;
  std::vector<std::uint64_t> maximizer_masks;  // edge masks, ascending
  Graph first_maximizer;
};

// Exhaustive search for the maximal margin over all labeled graphs on n
// vertices (clique complexes). n <= 6. Result independent of threads.
DeltaMaxResult delta_max(int n, int threads = 1);

// Dim+ along repeated f-vector refinement: values at steps 0..steps.
std::vector<Rat> refinement_trajectory(const FVector& fv, int steps);

struct SurveyRow {
  Rat p;
  Rat mean_delta;
  int samples = 0;
};

// Monte-Carlo mean of delta over G(n,p) on an inclusive grid of steps+1
// points from p_from to p_to. Exact rational means; deterministic in seed.
std::vector<SurveyRow> er_survey(int n, const Rat& p_from, const Rat& p_to,
                                 int steps, int samples, std::uint64_t seed,
                                 int threads = 1);

}  // namespace simpdim
