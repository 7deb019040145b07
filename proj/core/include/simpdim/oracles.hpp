#pragma once

#include <vector>

#include "simpdim/complex.hpp"
#include "simpdim/genfun.hpp"

namespace simpdim {

// Reference implementations kept deliberately independent of the main code
// paths so the two can cross-check each other.

// Every downward-closed family of nonempty subsets of {0..n-1}, including
// the empty complex, by exhaustive DFS over the subset poset. n <= 5
// (7580 complexes at n = 5).
std::vector<Complex> enumerate_complexes(int n);

// Constructive realizability: materialize the first counts[k-1] k-subsets
// of the naturals in colexicographic order for every k and check that the
// union is closed under subsets. No cascade/binomial arithmetic shared with
// kruskal_katona_valid.
bool colex_realizable(const FVector& fv);

}  // namespace simpdim
