#pragma once

#include <vector>

#include "simpdim/complex.hpp"
#include "simpdim/rational.hpp"

namespace simpdim {

// Face counts by dimension: counts[k] = number of k-dimensional faces.
// The empty complex has an empty count vector. Pre-complex f-vectors may
// contain internal zeros; complex f-vectors never do.
struct FVector {
  std::vector<Int> counts;
  bool operator==(const FVector&) const = default;
};

FVector f_vector(const PreComplex& P);
inline FVector f_vector(const Complex& G) { return f_vector(G.pre()); }

// Total face count plus one: f(1) = |G| + 1.
Int card_plus(const FVector& fv);

// f(t) = 1 + v_0 t + v_1 t^2 + ... + v_d t^(d+1); coefficient of t^0 first.
struct GenPoly {
  std::vector<Int> c;
  bool operator==(const GenPoly&) const = default;
};

GenPoly gen_poly(const FVector& fv);
GenPoly multiply(const GenPoly& f, const GenPoly& g);
GenPoly derivative(const GenPoly& f);
Rat eval(const GenPoly& f, const Rat& t);

// Average simplex cardinality Dim+ = f'(1)/f(1); 0 for the empty complex.
Rat dim_avg_plus(const FVector& fv);
inline Rat dim_avg_plus(const Complex& G) { return dim_avg_plus(f_vector(G)); }
// Dim = Dim+ - 1.
Rat dim_avg(const FVector& fv);

// f'(t)/f(t); additive under join. Throws std::domain_error where f(t) = 0.
Rat log_derivative(const GenPoly& f, const Rat& t);

// Genus f(-1) = 1 - chi(G); multiplicative under join.
Int genus(const FVector& fv);

// k-th central moment of the cardinality statistic:
//   moment_k = sum over faces of (|x| - Dim+)^k, divided by f(1).
// The normalizer f(1) = |G|+1 counts the augmented empty slot while the sum
// does not, so even the first moment is nonzero (K_1 gives 1/4).
Rat cardinality_moment(const FVector& fv, int k);
// Var+ = second central moment.
Rat variance_plus(const FVector& fv);

}  // namespace simpdim
