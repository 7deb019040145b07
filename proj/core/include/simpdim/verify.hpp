#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace simpdim {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;  // expected-vs-got on failure, empty or a note on pass
};

bool all_pass(const std::vector<Check>& checks);

// Reference values across all modules: the worked house/rabbit pair and
// its join, named families, join arithmetic, refinement chains, the
// refinement operator with its limit constants, exhaustive Erdos-Renyi
// expectations, inductive dimension polynomials, cardinality variances,
// and margin maximizers. `deep` adds the d = 500 limit constant.
std::vector<Check> verify_reference_values(bool deep = false);

// Algebraic invariants on seeded random complexes (up to 7 vertices):
// the margin inequality with its equality case, additivity and
// multiplicativity under join, generating function identities, the
// sphere-genus sum, and cascade validity of realized f-vectors.
std::vector<Check> verify_invariants(int count = 500,
                                     std::uint64_t seed = 7);

// The Kruskal-Katona cascade against two independent deciders (exhaustive
// enumeration on <= 5 labels, colex construction), plus explicit-vs-
// operator refinement agreement on the whole enumerated corpus.
std::vector<Check> verify_oracle();

}  // namespace simpdim
