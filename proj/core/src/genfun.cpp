#include "simpdim/genfun.hpp"

#include <stdexcept>

namespace simpdim {

FVector f_vector(const PreComplex& P) {
  FVector fv;
  int d = dim_max(P);
  if (d < 0) return fv;
  fv.counts.assign(d + 1, 0);
  for (const Simplex& f : P.faces()) fv.counts[f.dimension()] += 1;
  return fv;
}

Int card_plus(const FVector& fv) {
  Int total = 1;
  for (const Int& v : fv.counts) total += v;
  return total;
}

GenPoly gen_poly(const FVector& fv) {
  GenPoly f;
  f.c.assign(fv.counts.size() + 1, 0);
  f.c[0] = 1;
  for (std::size_t k = 0; k < fv.counts.size(); ++k) f.c[k + 1] = fv.counts[k];
  return f;
}

GenPoly multiply(const GenPoly& f, const GenPoly& g) {
  if (f.c.empty() || g.c.empty()) return GenPoly{};
  GenPoly h;
  h.c.assign(f.c.size() + g.c.size() - 1, 0);
  for (std::size_t i = 0; i < f.c.size(); ++i)
    for (std::size_t j = 0; j < g.c.size(); ++j) h.c[i + j] += f.c[i] * g.c[j];
  return h;
}

GenPoly derivative(const GenPoly& f) {
  GenPoly d;
  if (f.c.size() <= 1) return d;  // the zero polynomial is an empty list
  d.c.resize(f.c.size() - 1);
  for (std::size_t i = 1; i < f.c.size(); ++i) d.c[i - 1] = f.c[i] * (long)i;
  return d;
}

Rat eval(const GenPoly& f, const Rat& t) {
  Rat acc = 0;
  for (std::size_t i = f.c.size(); i-- > 0;) acc = acc * t + f.c[i];
  return acc;
}

Rat dim_avg_plus(const FVector& fv) {
  Int num = 0, den = 1;
  for (std::size_t k = 0; k < fv.counts.size(); ++k) {
    num += fv.counts[k] * (long)(k + 1);
    den += fv.counts[k];
  }
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat dim_avg(const FVector& fv) { return dim_avg_plus(fv) - 1; }

Rat log_derivative(const GenPoly& f, const Rat& t) {
  Rat ft = eval(f, t);
  if (ft == 0) throw std::domain_error("log-derivative pole: f(t) = 0");
  return eval(derivative(f), t) / ft;
}

Int genus(const FVector& fv) {
  Int g = 1;
  for (std::size_t k = 0; k < fv.counts.size(); ++k)
    g += k % 2 == 0 ? -fv.counts[k] : fv.counts[k];
  return g;
}

Rat cardinality_moment(const FVector& fv, int k) {
  if (k < 0) throw std::invalid_argument("moment order must be >= 0");
  Rat mean = dim_avg_plus(fv);
  Rat sum = 0;
  for (std::size_t d = 0; d < fv.counts.size(); ++d) {
    Rat dev = Rat((long)(d + 1)) - mean;
    Rat pw = 1;
    for (int i = 0; i < k; ++i) pw *= dev;
    sum += Rat(fv.counts[d]) * pw;
  }
  return sum / Rat(card_plus(fv));
}

Rat variance_plus(const FVector& fv) { return cardinality_moment(fv, 2); }

}  // namespace simpdim
