#include "simpdim/barycentric.hpp"

#include <mutex>
#include <stdexcept>
#include <string>

namespace simpdim {

namespace {

Int factorial(unsigned long n) {
  Int f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

// C(a, r) for big a
Int binom(const Int& a, unsigned long r) {
  if (a < (long)r) return 0;
  Int b;
  mpz_bin_ui(b.get_mpz_t(), a.get_mpz_t(), r);
  return b;
}

}  // namespace

Int stirling2(int n, int k) {
  if (n < 0 || k < 0) throw std::invalid_argument("stirling2 needs n,k >= 0");
  if (k > n) return 0;
  if (n == 0) return 1;  // S(0,0)
  static std::mutex mu;
  static std::vector<std::vector<Int>> table{{Int(1)}};  // table[n][k], k <= n
  std::lock_guard lock(mu);
  while ((int)table.size() <= n) {
    int m = (int)table.size();
    std::vector<Int> row(m + 1);
    row[0] = 0;
    for (int j = 1; j < m; ++j) row[j] = j * table[m - 1][j] + table[m - 1][j - 1];
    row[m] = 1;
    table.push_back(std::move(row));
  }
  return table[n][k];
}

RefinementOperator operator_matrix(int d) {
  if (d < 0) throw std::invalid_argument("operator_matrix needs d >= 0");
  RefinementOperator op;
  op.d = d;
  int n = d + 1;
  op.a.assign(n, std::vector<Int>(n, 0));
  for (int i = 1; i <= n; ++i) {
    Int fi = factorial(i);
    for (int j = i; j <= n; ++j) op.a[i - 1][j - 1] = stirling2(j, i) * fi;
  }
  return op;
}

FVector refine_fvector(const FVector& fv) {
  if (fv.counts.empty()) return fv;
  int n = (int)fv.counts.size();
  RefinementOperator op = operator_matrix(n - 1);
  FVector out;
  out.counts.assign(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) out.counts[i] += op.a[i][j] * fv.counts[j];
  return out;
}

Complex refine(const Complex& G) {
  const auto& faces = G.faces();
  int m = (int)faces.size();
  // canonical order sorts by cardinality, so strict supersets come later
  std::vector<std::vector<int>> succ(m);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (faces[j].contains(faces[i]) && faces[j].cardinality() > faces[i].cardinality())
        succ[i].push_back(j);
  std::vector<Simplex> chains;
  std::vector<int> chain;
  auto dfs = [&](auto&& self, int top) -> void {
    chain.push_back(top);
    chains.emplace_back(chain);
    if (chains.size() > face_cap())
      throw std::length_error(
          "refinement exceeds face cap " + std::to_string(face_cap()) +
          " (override with SIMPDIM_FACE_CAP)");
    for (int j : succ[top]) self(self, j);
    chain.pop_back();
  };
  for (int i = 0; i < m; ++i) dfs(dfs, i);
  // subsets of chains are chains, so the result is closed
  return Complex::from_faces_unchecked(std::move(chains));
}

namespace {

// Integer multiple of the eigenvector: v[i] = w[i] * prod of all divisors,
// where w is the eigenvector with w[d] = 1 and divisor[i] = lambda - (i+1)!.
// w[i]'s denominator divides the product of divisors above i, so every
// v[i] is an exact integer and the back-substitution never reduces a
// fraction; this is what keeps d in the hundreds cheap.
std::vector<Int> pf_integer(int d) {
  if (d < 0) throw std::invalid_argument("pf_eigenvector needs d >= 0");
  int n = d + 1;
  std::vector<Int> fact(n + 1);
  for (int i = 0; i <= n; ++i) fact[i] = factorial(i);
  const Int& lambda = fact[n];
  std::vector<Int> divisor(n > 0 ? n - 1 : 0);
  Int scale = 1;
  for (int i = 0; i + 1 < n; ++i) {
    divisor[i] = lambda - fact[i + 1];
    scale *= divisor[i];
  }
  std::vector<Int> v(n);
  v[n - 1] = scale;
  Int s;
  for (int i = n - 2; i >= 0; --i) {
    s = 0;
    // A[i][j] = S2(j+1, i+1) * (i+1)!; the factorial is hoisted out of the sum
    for (int j = i + 1; j < n; ++j) {
      const Int& a = stirling2(j + 1, i + 1);
      mpz_addmul(s.get_mpz_t(), a.get_mpz_t(), v[j].get_mpz_t());
    }
    s *= fact[i + 1];
    mpz_divexact(v[i].get_mpz_t(), s.get_mpz_t(), divisor[i].get_mpz_t());
  }
  return v;
}

}  // namespace

std::vector<Rat> pf_eigenvector(int d) {
  std::vector<Int> v = pf_integer(d);
  Int total = 0;
  for (const Int& x : v) total += x;
  std::vector<Rat> w(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    w[i] = Rat(v[i]) / Rat(total);
  }
  return w;
}

Rat limit_constant(int d) {
  std::vector<Int> v = pf_integer(d);
  Int num = 0, den = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    num += v[i] * (unsigned long)(i + 1);
    den += v[i];
  }
  return Rat(num) / Rat(den);
}

bool kruskal_katona_valid(const FVector& fv) {
  std::vector<Int> counts = fv.counts;
  while (!counts.empty() && counts.back() == 0) counts.pop_back();
  if (counts.empty()) return true;
  for (const Int& v : counts)
    if (v <= 0) return false;
  for (int k = 1; k + 1 <= (int)counts.size(); ++k) {
    Int rem = counts[k - 1];  // number of k-element faces
    Int bound = 0;
    int r = k;
    while (rem > 0 && r >= 1) {
      Int a = r;
      while (binom(a + 1, r) <= rem) a += 1;
      bound += binom(a, r + 1);
      rem -= binom(a, r);
      r -= 1;
    }
    if (counts[k] > bound) return false;
  }
  return true;
}

Rat conjecture_a_delta(const FVector& fv) {
  return dim_avg_plus(refine_fvector(fv)) - dim_avg_plus(fv);
}

}  // namespace simpdim
