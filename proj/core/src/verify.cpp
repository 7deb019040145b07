#include "simpdim/verify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "simpdim/barycentric.hpp"
#include "simpdim/complex.hpp"
#include "simpdim/dimension.hpp"
#include "simpdim/experiments.hpp"
#include "simpdim/genfun.hpp"
#include "simpdim/oracles.hpp"
#include "simpdim/rational.hpp"
#include "simpdim/rng.hpp"

namespace simpdim {

namespace {

Rat frac(long num, long den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

std::string str(const Rat& r) { return rat_str(r); }
std::string str(const Int& n) { return n.get_str(); }
std::string str(bool b) { return b ? "true" : "false"; }
std::string str(int n) { return std::to_string(n); }
std::string str(long n) { return std::to_string(n); }
std::string str(std::size_t n) { return std::to_string(n); }

std::string str(const std::vector<Int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  return s + ")";
}

std::string str(const FVector& fv) { return str(fv.counts); }

std::string str(const std::vector<Rat>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += rat_str(v[i]);
  }
  return s + ")";
}

struct Suite {
  std::vector<Check> checks;

  void ok(const std::string& name, bool pass, std::string detail = "") {
    checks.push_back({name, pass, std::move(detail)});
  }

  template <class T>
  void eq(const std::string& name, const T& got, const T& want) {
    if (got == want)
      ok(name, true);
    else
      ok(name, false, "expected " + str(want) + ", got " + str(got));
  }
};

// tallies a bulk property scan into a single check
struct Scan {
  int failures = 0;
  int total = 0;
  std::string first;

  void expect(bool pass, const std::string& where) {
    ++total;
    if (!pass && failures++ == 0) first = where;
  }
  void report(Suite& s, const std::string& name) const {
    if (failures == 0)
      s.ok(name, true, std::to_string(total) + " cases");
    else
      s.ok(name, false,
           std::to_string(failures) + " of " + std::to_string(total) +
               " cases failed, first at " + first);
  }
};

Complex house_complex() {
  return Complex::generate(
      {Simplex{2, 3, 5}, Simplex{1, 4}, Simplex{1, 2}, Simplex{3, 4}});
}

Complex rabbit_complex() {
  return Complex::generate({Simplex{1, 2, 3}, Simplex{3, 4}, Simplex{3, 5}});
}

Rat dim_ind_plus(const Complex& G) { return Rat(dim_inductive(G) + 1); }

Rat graph_dim_plus(const Complex& G) {
  return Rat(dim_inductive_graph(one_skeleton(G)) + 1);
}

FVector fv_of(std::vector<long> counts) {
  FVector fv;
  fv.counts.assign(counts.begin(), counts.end());
  return fv;
}

Rat poly_eval(const std::vector<Rat>& coeff, const Rat& p) {
  Rat acc = 0;
  for (std::size_t i = coeff.size(); i-- > 0;) acc = acc * p + coeff[i];
  return acc;
}

std::vector<Rat> trim(std::vector<Rat> coeff) {
  while (!coeff.empty() && coeff.back() == 0) coeff.pop_back();
  return coeff;
}

void check_house_rabbit(Suite& s) {
  Complex h = house_complex(), r = rabbit_complex();
  Complex j = join(h, r);
  s.eq<Rat>("house.dim_avg_plus", dim_avg_plus(h), frac(20, 13));
  s.eq<Rat>("rabbit.dim_avg_plus", dim_avg_plus(r), frac(3, 2));
  s.eq<Rat>("hr_join.dim_avg_plus", dim_avg_plus(j), frac(79, 26));
  s.eq<Rat>("house.dim_ind_plus", dim_ind_plus(h), frac(61, 24));
  s.eq<Rat>("rabbit.dim_ind_plus", dim_ind_plus(r), frac(13, 5));
  s.eq<Rat>("hr_join.dim_ind_plus", dim_ind_plus(j), frac(617, 120));
  s.eq<Rat>("house.graph_dim_plus", graph_dim_plus(h), frac(37, 15));
  s.eq<Rat>("rabbit.graph_dim_plus", graph_dim_plus(r), frac(5, 2));
  s.eq<Rat>("hr_join.graph_dim_plus", graph_dim_plus(j), frac(149, 30));
  s.eq<int>("house.max_plus", dim_max(h) + 1, 3);
  s.eq<int>("rabbit.max_plus", dim_max(r) + 1, 3);
  s.eq<int>("hr_join.max_plus", dim_max(j) + 1, 6);
}

void check_families(Suite& s) {
  Scan avg_e, avg_k, avg_c, avg_p, avg_b;
  Scan ind_e, ind_k, ind_c, ind_p, ind_b;
  for (int n = 1; n <= 20; ++n) {
    std::string at = "n=" + std::to_string(n);
    Complex e = complex_E(n);
    avg_e.expect(dim_avg_plus(e) == frac(n, n + 1), at);
    ind_e.expect(dim_ind_plus(e) == 1, at);

    Complex k = complex_K(n);
    avg_k.expect(dim_avg_plus(k) == frac(n, 2), at);
    // graph level always; the complex-level recursion only while cheap
    ind_k.expect(graph_dim_plus(k) == n, at);
    if (n <= 8) ind_k.expect(dim_ind_plus(k) == n, at + " (complex level)");

    if (n >= 3) {
      Complex c = complex_C(n);
      avg_c.expect(dim_avg_plus(c) == frac(3 * n, 2 * n + 1), at);
      ind_c.expect(dim_ind_plus(c) == 2, at);
      if (n >= 4) ind_c.expect(graph_dim_plus(c) == 2, at + " (graph level)");
    }
    if (n >= 2) {
      Complex p = complex_P(n);
      avg_p.expect(dim_avg_plus(p) == frac(3 * n - 2, 2 * n), at);
      ind_p.expect(dim_ind_plus(p) == 2, at);
      ind_p.expect(graph_dim_plus(p) == 2, at + " (graph level)");
    }
    Complex b = complex_Kmn(n, n);
    avg_b.expect(dim_avg_plus(b) == frac(2 * n, n + 1), at);
    ind_b.expect(dim_ind_plus(b) == 2, at);
  }
  avg_e.report(s, "families.E.dim_avg_plus");
  avg_k.report(s, "families.K.dim_avg_plus");
  avg_c.report(s, "families.C.dim_avg_plus");
  avg_p.report(s, "families.P.dim_avg_plus");
  avg_b.report(s, "families.Knn.dim_avg_plus");
  ind_e.report(s, "families.E.dim_ind_plus");
  ind_k.report(s, "families.K.dim_ind_plus");
  ind_c.report(s, "families.C.dim_ind_plus");
  ind_p.report(s, "families.P.dim_ind_plus");
  ind_b.report(s, "families.Knn.dim_ind_plus");
  s.ok("families.P.denominator_note", true,
       "the path mean cardinality is (3n-2)/(2n): faces sum to 3n-2 over "
       "|G|+1 = 2n; a 2n-1 denominator would force Dim+(P_2) = 4/3, but "
       "P_2 is K_2 whose value is 1");
}

void check_join_arithmetic(Suite& s) {
  Complex c4 = complex_C(4), k3 = complex_K(3);
  Complex j = join(c4, k3);
  s.eq<FVector>("join.c4_k3.f_vector", f_vector(j), fv_of({7, 19, 25, 16, 4}));
  s.eq<Rat>("join.c4_k3.dim_avg_plus", dim_avg_plus(j), frac(17, 6));
  s.eq<Rat>("join.c4_k3.additive", dim_avg_plus(j),
            Rat(dim_avg_plus(c4) + dim_avg_plus(k3)));
  Complex b = complex_Kmn(12, 2);
  s.eq<Rat>("join.k12_2.dim_avg_plus", dim_avg_plus(b), frac(62, 39));
  s.eq<Rat>("join.k12_2.additive", dim_avg_plus(b),
            Rat(dim_avg_plus(complex_E(12)) + dim_avg_plus(complex_E(2))));
}

void check_refinement_chains(Suite& s) {
  s.eq<std::vector<Rat>>(
      "refine.octahedron.trajectory",
      refinement_trajectory(f_vector(octahedron()), 1),
      {Rat(2), frac(314, 147)});
  s.eq<std::vector<Rat>>(
      "refine.icosahedron.trajectory",
      refinement_trajectory(f_vector(icosahedron()), 2),
      {frac(44, 21), frac(782, 363), frac(4682, 2163)});
  s.eq<std::vector<Rat>>("refine.custom.trajectory",
                         refinement_trajectory(fv_of({15, 36, 16, 1}), 1),
                         {frac(139, 69), frac(84, 37)});
  for (const char* name : {"octahedron", "icosahedron"}) {
    Complex g = name[0] == 'o' ? octahedron() : icosahedron();
    s.eq<FVector>(std::string("refine.") + name + ".explicit_vs_operator",
                  f_vector(refine(g)), refine_fvector(f_vector(g)));
  }
}

void check_operator(Suite& s) {
  static const long a10[11][11] = {
      {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
      {0, 2, 6, 14, 30, 62, 126, 254, 510, 1022, 2046},
      {0, 0, 6, 36, 150, 540, 1806, 5796, 18150, 55980, 171006},
      {0, 0, 0, 24, 240, 1560, 8400, 40824, 186480, 818520, 3498000},
      {0, 0, 0, 0, 120, 1800, 16800, 126000, 834120, 5103000, 29607600},
      {0, 0, 0, 0, 0, 720, 15120, 191520, 1905120, 16435440, 129230640},
      {0, 0, 0, 0, 0, 0, 5040, 141120, 2328480, 29635200, 322494480},
      {0, 0, 0, 0, 0, 0, 0, 40320, 1451520, 30240000, 479001600},
      {0, 0, 0, 0, 0, 0, 0, 0, 362880, 16329600, 419126400},
      {0, 0, 0, 0, 0, 0, 0, 0, 0, 3628800, 199584000},
      {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 39916800}};
  RefinementOperator op = operator_matrix(10);
  Scan entries;
  for (int i = 0; i < 11; ++i)
    for (int j = 0; j < 11; ++j)
      entries.expect(op.a[i][j] == a10[i][j],
                     "entry (" + std::to_string(i + 1) + "," +
                         std::to_string(j + 1) + ")");
  entries.report(s, "operator.a10_literal");

  s.eq<std::vector<Rat>>("operator.pf_direction.d1", pf_eigenvector(1),
                         {frac(1, 2), frac(1, 2)});
  s.eq<std::vector<Rat>>("operator.pf_direction.d2", pf_eigenvector(2),
                         {frac(1, 6), frac(1, 2), frac(1, 3)});
  s.eq<Rat>("operator.c1", limit_constant(1), frac(3, 2));
  s.eq<Rat>("operator.c2", limit_constant(2), frac(13, 6));

  Scan bracket;
  for (int d = 1; d <= 200; ++d) {
    Rat c = limit_constant(d);
    bracket.expect(Rat(c * 2) > d + 1 && c < d + 1, "d=" + std::to_string(d));
  }
  bracket.report(s, "operator.bracket_1_200");
}

void check_limit_constants(Suite& s, bool deep) {
  Rat c100 = limit_constant(100);
  Rat err100 = Rat(c100 - frac(72828, 1000));
  s.ok("limit.c100.decimal", abs(err100) <= frac(1, 1000),
       "C_100 = " + decimal_str(c100, 6));
  s.eq<int>("limit.c100.digits.numerator", digit_count(c100.get_num()), 4304);
  s.eq<int>("limit.c100.digits.denominator", digit_count(c100.get_den()),
            4302);
  // the primitive integer eigenvector: scale the probability vector by the
  // lcm of its denominators; the result provably has entry gcd 1
  std::vector<Rat> w = pf_eigenvector(100);
  Int lcm = 1;
  for (const Rat& x : w)
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den().get_mpz_t());
  Int sum = 0;
  for (const Rat& x : w) sum += x.get_num() * (lcm / x.get_den());
  s.ok("limit.c100.digit_figure_note", digit_count(sum) == 4423,
       "the reduced mean has 4304-digit numerator and 4302-digit "
       "denominator; 4423 is the digit count of the primitive integer "
       "eigenvector sum, i.e. of the unreduced denominator (got " +
           std::to_string(digit_count(sum)) + ")");
  if (deep) {
    Rat ratio = Rat(limit_constant(500) / 500);
    Rat err = Rat(ratio - frac(722733, 1000000));
    s.ok("limit.c500.ratio", abs(err) <= frac(1, 1000000),
         "C_500/500 = " + decimal_str(ratio, 9));
  }
}

void check_conjecture_a(Suite& s) {
  const Rat expected[5] = {Rat(0), frac(1, 6), frac(5, 13), frac(91, 150),
                           frac(448, 541)};
  Scan seq;
  for (int n = 1; n <= 5; ++n)
    seq.expect(conjecture_a_delta(f_vector(complex_K(n))) == expected[n - 1],
               "K_" + std::to_string(n));
  seq.report(s, "conjecture_a.complete_sequence");
  s.eq<Rat>("conjecture_a.k33_fixed_point",
            conjecture_a_delta(f_vector(complex_Kmn(3, 3))), Rat(0));
  Scan fp;
  for (long v = 1; v <= 50; ++v)
    fp.expect(conjecture_a_delta(fv_of({v, v + 3})) == 0,
              "v0=" + std::to_string(v));
  fp.report(s, "conjecture_a.one_dim_fixed_family");
}

void check_er_expectations(Suite& s) {
  const Rat expected[5] = {frac(1, 2), frac(5, 6), frac(35, 32),
                           frac(6593, 5040), frac(18890551, 12673024)};
  for (int n = 1; n <= 5; ++n)
    s.eq<Rat>("er.expectation.n" + std::to_string(n),
              er_dim_avg_expectation(n, frac(1, 2)), expected[n - 1]);
}

void check_dim_polynomials(Suite& s) {
  const std::vector<std::vector<Rat>> expected = {
      {},                                                        // d_1 = 0
      {Rat(0), Rat(1)},                                          // p
      {Rat(0), Rat(2), Rat(-1), Rat(1)},                         // p(2-p+p^2)
      {Rat(0), Rat(3), Rat(-3), Rat(4), Rat(-1), Rat(-1), Rat(1)}};
  for (int n = 1; n <= 4; ++n)
    s.eq<std::vector<Rat>>("dimpoly.d" + std::to_string(n),
                           trim(inductive_dim_polynomial(n)),
                           expected[n - 1]);
  Scan ends;
  for (int n = 1; n <= 8; ++n) {
    std::vector<Rat> d = inductive_dim_polynomial(n);
    ends.expect(poly_eval(d, Rat(1)) == n - 1,
                "d_" + std::to_string(n) + "(1)");
    ends.expect(poly_eval(d, Rat(0)) == 0, "d_" + std::to_string(n) + "(0)");
    if (n >= 2)
      ends.expect((int)trim(d).size() - 1 == n * (n - 1) / 2,
                  "deg d_" + std::to_string(n));
  }
  ends.report(s, "dimpoly.endpoints_and_degree");
}

void check_variances(Suite& s) {
  const Rat expected[5] = {frac(1, 8), frac(1, 4), frac(15, 32), frac(3, 4),
                           frac(135, 128)};
  for (int n = 1; n <= 5; ++n)
    s.eq<Rat>("variance.k" + std::to_string(n),
              variance_plus(f_vector(complex_K(n))), expected[n - 1]);
}

void check_margin_maximizers(Suite& s) {
  DeltaMaxResult r4 = delta_max(4);
  s.eq<Rat>("margin.max4.value", r4.value, frac(1, 3));
  s.eq<std::size_t>("margin.max4.count", r4.maximizer_masks.size(), 3);
  s.eq<std::uint64_t>("margin.max4.first_mask",
                      r4.maximizer_masks.empty() ? 0 : r4.maximizer_masks[0],
                      30);
  Scan all4;
  for (std::uint64_t m : r4.maximizer_masks)
    all4.expect(
        f_vector(whitney_complex(graph_from_edge_mask(4, m))) ==
            fv_of({4, 4}),
        "mask " + std::to_string(m));
  all4.report(s, "margin.max4.all_are_4_cycles");

  DeltaMaxResult r6 = delta_max(6);
  s.eq<Rat>("margin.max6.value", r6.value, frac(1, 2));
  s.eq<std::size_t>("margin.max6.count", r6.maximizer_masks.size(), 25);
  s.eq<std::uint64_t>("margin.max6.first_mask",
                      r6.maximizer_masks.empty() ? 0 : r6.maximizer_masks[0],
                      7672);
  s.eq<FVector>("margin.max6.first_f_vector",
                f_vector(whitney_complex(r6.first_maximizer)), fv_of({6, 9}));
  // the n = 6 maximizers split into complete bipartite K_{3,3} labelings
  // and octahedron (K_{2,2,2}) labelings
  int bip = 0, octa = 0, other = 0;
  for (std::uint64_t m : r6.maximizer_masks) {
    FVector fv = f_vector(whitney_complex(graph_from_edge_mask(6, m)));
    if (fv == fv_of({6, 9}))
      ++bip;
    else if (fv == fv_of({6, 12, 8}))
      ++octa;
    else
      ++other;
  }
  s.ok("margin.max6.shape_split", bip == 10 && octa == 15 && other == 0,
       "10 bipartite + 15 octahedral expected, got " + std::to_string(bip) +
           " + " + std::to_string(octa) + " + " + std::to_string(other) +
           " other");

  Scan knn;
  for (int n = 1; n <= 10; ++n)
    knn.expect(delta(complex_Kmn(n, n)) == frac(n - 1, n + 1),
               "n=" + std::to_string(n));
  knn.report(s, "margin.knn_formula");
}

}  // namespace

bool all_pass(const std::vector<Check>& checks) {
  return std::all_of(checks.begin(), checks.end(),
                     [](const Check& c) { return c.pass; });
}

std::vector<Check> verify_reference_values(bool deep) {
  Suite s;
  check_house_rabbit(s);
  check_families(s);
  check_join_arithmetic(s);
  check_refinement_chains(s);
  check_operator(s);
  check_limit_constants(s, deep);
  check_conjecture_a(s);
  check_er_expectations(s);
  check_dim_polynomials(s);
  check_variances(s);
  check_margin_maximizers(s);
  return s.checks;
}

std::vector<Check> verify_invariants(int count, std::uint64_t seed) {
  Suite s;
  std::vector<Complex> corpus;
  corpus.reserve(count);
  for (int t = 0; t < count; ++t) {
    int n = 1 + (int)(counter_rng(seed, t, 1000000) % 7);
    int m = 1 + (int)(counter_rng(seed, t, 1000001) % (2 * n));
    corpus.push_back(random_complex(n, m, counter_rng(seed, t, 1000002)));
  }

  Scan margin, equality, card, genus_chi, sphere_sum, cascade;
  for (int t = 0; t < count; ++t) {
    const Complex& g = corpus[t];
    std::string at = "complex " + std::to_string(t);
    Rat d = delta(g);
    margin.expect(d >= 0, at);
    bool complete =
        g.size() == ((std::size_t)1 << g.labels().size()) - 1;
    equality.expect((d == 0) == complete, at);

    FVector fv = f_vector(g);
    GenPoly f = gen_poly(fv);
    card.expect(eval(f, Rat(1)) == Rat(Int((long)g.size() + 1)), at);
    Int gen = genus(fv);
    genus_chi.expect(
        Rat(gen) == eval(f, Rat(-1)) && gen == 1 - euler_characteristic(g),
        at);
    auto [lhs, rhs] = sphere_genus_sum(g);
    sphere_sum.expect(lhs == rhs, at);
    cascade.expect(kruskal_katona_valid(fv), at);
  }
  margin.report(s, "invariants.margin_nonnegative");
  equality.report(s, "invariants.margin_zero_iff_complete");
  card.report(s, "invariants.card_plus");
  genus_chi.report(s, "invariants.genus_identities");
  sphere_sum.report(s, "invariants.sphere_genus_sum");
  cascade.report(s, "invariants.realized_cascade_valid");

  Scan j_avg, j_genus;
  for (int t = 0; t + 1 < count; t += 2) {
    const Complex& a = corpus[t];
    const Complex& b = corpus[t + 1];
    Complex j = join(a, b);
    std::string at = "pair " + std::to_string(t);
    j_avg.expect(
        dim_avg_plus(j) == Rat(dim_avg_plus(a) + dim_avg_plus(b)), at);
    j_genus.expect(
        genus(f_vector(j)) == genus(f_vector(a)) * genus(f_vector(b)), at);
  }
  j_avg.report(s, "invariants.join_dim_avg_additive");
  j_genus.report(s, "invariants.join_genus_multiplicative");

  // wherever the unit sphere happens to be closed, the ball decomposes as
  // the join with a point: f_B = f_S * (1 + t), so the mean shifts by 1/2
  Scan ball;
  GenPoly one_plus_t;
  one_plus_t.c = {1, 1};
  for (int t = 0; t < count; ++t) {
    const Complex& g = corpus[t];
    for (const Simplex& x : g.faces()) {
      PreComplex sph = unit_sphere(g, x);
      if (!sph.is_closed()) continue;
      Complex sc = Complex::from_faces(sph.faces());
      Complex ballc = join(sc, complex_K(1));
      std::string at = "complex " + std::to_string(t);
      ball.expect(gen_poly(f_vector(ballc)) ==
                          multiply(gen_poly(f_vector(sc)), one_plus_t) &&
                      dim_avg_plus(ballc) ==
                          Rat(dim_avg_plus(f_vector(sc)) + frac(1, 2)),
                  at);
    }
  }
  ball.report(s, "invariants.unit_ball_half_shift");

  // the inductive recursion is the expensive one, so its join additivity
  // runs on a corpus capped at 4 vertices per side
  Scan j_ind, refine_agree, j_comm, j_assoc;
  for (int t = 0; t < count; ++t) {
    int na = 1 + (int)(counter_rng(seed, t, 2000000) % 4);
    int ma = 1 + (int)(counter_rng(seed, t, 2000001) % 4);
    int nb = 1 + (int)(counter_rng(seed, t, 2000002) % 4);
    int mb = 1 + (int)(counter_rng(seed, t, 2000003) % 4);
    Complex a = random_complex(na, ma, counter_rng(seed, t, 2000004));
    Complex b = random_complex(nb, mb, counter_rng(seed, t, 2000005));
    std::string at = "small pair " + std::to_string(t);
    j_ind.expect(dim_ind_plus(join(a, b)) ==
                     Rat(dim_ind_plus(a) + dim_ind_plus(b)),
                 at);
    refine_agree.expect(
        f_vector(refine(a)) == refine_fvector(f_vector(a)), at);
    j_comm.expect(f_vector(join(a, b)) == f_vector(join(b, a)), at);
    Complex c = random_complex(
        1 + (int)(counter_rng(seed, t, 2000006) % 4),
        1 + (int)(counter_rng(seed, t, 2000007) % 4),
        counter_rng(seed, t, 2000008));
    j_assoc.expect(f_vector(join(join(a, b), c)) ==
                       f_vector(join(a, join(b, c))),
                   at);
  }
  j_ind.report(s, "invariants.join_dim_ind_additive");
  refine_agree.report(s, "invariants.refine_fvector_agree");
  j_comm.report(s, "invariants.join_commutative_fvector");
  j_assoc.report(s, "invariants.join_associative_fvector");

  Scan root;
  Complex octa = octahedron(), ico = icosahedron();
  for (const Complex* g : {&octa, &ico}) {
    root.expect(eval(gen_poly(f_vector(*g)), frac(-1, 2)) == 0, "base");
    root.expect(eval(gen_poly(f_vector(refine(*g))), frac(-1, 2)) == 0,
                "refined");
  }
  root.report(s, "invariants.minus_half_root");

  return s.checks;
}

std::vector<Check> verify_oracle() {
  Suite s;
  const std::size_t expected_counts[5] = {2, 5, 19, 167, 7580};
  for (int n = 1; n <= 5; ++n)
    s.eq<std::size_t>("oracle.enumeration_count.n" + std::to_string(n),
                      enumerate_complexes(n).size(), expected_counts[n - 1]);

  std::vector<Complex> corpus = enumerate_complexes(5);
  Scan closed;
  for (std::size_t i = 0; i < corpus.size(); ++i)
    closed.expect(corpus[i].pre().is_closed(), "index " + std::to_string(i));
  closed.report(s, "oracle.enumeration_closed");

  std::set<std::vector<Int>> realized;
  for (const Complex& g : corpus) realized.insert(f_vector(g).counts);
  s.eq<std::size_t>("oracle.realized_fv_count", realized.size(), 95);
  s.ok("oracle.k5_fv_realized",
       realized.count({5, 10, 10, 5, 1}) == 1, "");

  Scan realized_valid;
  for (const auto& counts : realized) {
    FVector fv;
    fv.counts = counts;
    realized_valid.expect(kruskal_katona_valid(fv) && colex_realizable(fv),
                          str(fv));
  }
  realized_valid.report(s, "oracle.realized_pass_both_deciders");

  // the box bounded by the K_5 f-vector: cascade, colex construction, and
  // enumeration must agree on every candidate, zeros included
  Scan box;
  for (long v0 = 0; v0 <= 5; ++v0)
    for (long v1 = 0; v1 <= 10; ++v1)
      for (long v2 = 0; v2 <= 10; ++v2)
        for (long v3 = 0; v3 <= 5; ++v3)
          for (long v4 = 0; v4 <= 1; ++v4) {
            FVector fv = fv_of({v0, v1, v2, v3, v4});
            while (!fv.counts.empty() && fv.counts.back() == 0)
              fv.counts.pop_back();
            bool kk = kruskal_katona_valid(fv);
            bool cx = colex_realizable(fv);
            bool en = realized.count(fv.counts) == 1;
            box.expect(kk == cx && kk == en, str(fv));
          }
  box.report(s, "oracle.k5_box_three_way_agreement");
  s.eq<int>("oracle.k5_box_candidates", box.total, 8712);

  // every f-vector with f(1) <= 32: the cascade and the colex
  // construction agree (1873 valid among 206368 candidates)
  Scan scope;
  int valid = 0;
  std::vector<long> prefix;
  auto gen = [&](auto&& self, long remaining) -> void {
    FVector fv = fv_of(prefix);
    bool kk = kruskal_katona_valid(fv);
    scope.expect(kk == colex_realizable(fv), str(fv));
    if (kk) ++valid;
    if (prefix.size() == 5) return;
    for (long v = 1; v <= remaining; ++v) {
      prefix.push_back(v);
      self(self, remaining - v);
      prefix.pop_back();
    }
  };
  gen(gen, 31);
  scope.report(s, "oracle.cascade_vs_colex_f1_32");
  s.eq<int>("oracle.f1_32_candidates", scope.total, 206368);
  s.eq<int>("oracle.f1_32_valid", valid, 1873);

  Scan refine_agree;
  for (std::size_t i = 0; i < corpus.size(); ++i)
    refine_agree.expect(f_vector(refine(corpus[i])) ==
                            refine_fvector(f_vector(corpus[i])),
                        "index " + std::to_string(i));
  Complex octa = octahedron(), ico = icosahedron();
  refine_agree.expect(
      f_vector(refine(octa)) == refine_fvector(f_vector(octa)), "octahedron");
  refine_agree.expect(
      f_vector(refine(ico)) == refine_fvector(f_vector(ico)), "icosahedron");
  refine_agree.report(s, "oracle.refine_explicit_vs_operator");

  return s.checks;
}

}  // namespace simpdim
