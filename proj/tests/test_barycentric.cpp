#include <doctest.h>

#include "simpdim/barycentric.hpp"
#include "simpdim/complex.hpp"
#include "simpdim/genfun.hpp"
#include "test_util.hpp"

using namespace simpdim;
using testutil::fv;
using testutil::q;

TEST_SUITE("barycentric") {
  TEST_CASE("stirling2") {
    CHECK(stirling2(0, 0) == 1);
    CHECK(stirling2(3, 0) == 0);
    CHECK(stirling2(4, 2) == 7);
    CHECK(stirling2(5, 3) == 25);
    CHECK(stirling2(10, 10) == 1);
    CHECK(stirling2(2, 5) == 0);
  }

  TEST_CASE("operator matrix") {
    RefinementOperator a2 = operator_matrix(2);
    CHECK(a2.d == 2);
    CHECK(a2.entry(1, 1) == 1);
    CHECK(a2.entry(1, 2) == 1);
    CHECK(a2.entry(1, 3) == 1);
    CHECK(a2.entry(2, 1) == 0);
    CHECK(a2.entry(2, 2) == 2);
    CHECK(a2.entry(2, 3) == 6);
    CHECK(a2.entry(3, 3) == 6);
  }

  TEST_CASE("refine_fvector") {
    CHECK(refine_fvector(fv({6, 12, 8})) == fv({26, 72, 48}));
    CHECK(refine_fvector(fv({3, 3})) == fv({6, 6}));
    CHECK(refine_fvector(FVector{}) == FVector{});
  }

  TEST_CASE("explicit refinement agrees with the operator") {
    // hollow triangle refines to the hexagon
    Complex c3 = complex_C(3);
    Complex r = refine(c3);
    CHECK(f_vector(r) == fv({6, 6}));
    Complex h = Complex::generate(
        {Simplex{2, 3, 5}, Simplex{1, 4}, Simplex{1, 2}, Simplex{3, 4}});
    CHECK(f_vector(refine(h)) == refine_fvector(f_vector(h)));
    CHECK(f_vector(refine(octahedron())) ==
          refine_fvector(f_vector(octahedron())));
    CHECK(refine(Complex()) == Complex());
  }

  TEST_CASE("pf eigenvector") {
    std::vector<Rat> w1 = pf_eigenvector(1);
    REQUIRE(w1.size() == 2);
    CHECK(w1[0] == q(1, 2));
    CHECK(w1[1] == q(1, 2));
    std::vector<Rat> w2 = pf_eigenvector(2);
    REQUIRE(w2.size() == 3);
    CHECK(w2[0] == q(1, 6));
    CHECK(w2[1] == q(1, 2));
    CHECK(w2[2] == q(1, 3));
    // eigenvector property: A w = (d+1)! w
    RefinementOperator a = operator_matrix(4);
    std::vector<Rat> w = pf_eigenvector(4);
    for (int i = 1; i <= 5; ++i) {
      Rat lhs = 0;
      for (int j = 1; j <= 5; ++j) lhs += Rat(a.entry(i, j)) * w[j - 1];
      CHECK(lhs == Rat(120) * w[i - 1]);
    }
  }

  TEST_CASE("limit constants") {
    CHECK(limit_constant(0) == q(1));
    CHECK(limit_constant(1) == q(3, 2));
    CHECK(limit_constant(2) == q(13, 6));
    for (int d = 1; d <= 30; ++d) {
      Rat c = limit_constant(d);
      CHECK(Rat(2) * c > Rat(d + 1));
      CHECK(c < Rat(d + 1));
    }
  }

  TEST_CASE("kruskal_katona_valid") {
    CHECK(kruskal_katona_valid(FVector{}));
    CHECK(kruskal_katona_valid(fv({5, 10, 10, 5, 1})));
    CHECK(kruskal_katona_valid(fv({15, 36, 16, 1})));
    CHECK(kruskal_katona_valid(fv({4, 4})));
    CHECK_FALSE(kruskal_katona_valid(fv({3, 4})));
    CHECK_FALSE(kruskal_katona_valid(fv({4, 6, 5})));
    CHECK_FALSE(kruskal_katona_valid(fv({2, 0, 1})));  // internal zero
    CHECK_FALSE(kruskal_katona_valid(fv({-1})));
    CHECK(kruskal_katona_valid(fv({2, 1, 0})));  // trailing zero trimmed
  }

  TEST_CASE("conjecture_a_delta") {
    CHECK(conjecture_a_delta(f_vector(complex_K(1))) == q(0));
    CHECK(conjecture_a_delta(f_vector(complex_K(2))) == q(1, 6));
    CHECK(conjecture_a_delta(f_vector(complex_Kmn(3, 3))) == q(0));
    // v1 = v0 + 3 families sit at Dim+ = 3/2 and stay there
    CHECK(conjecture_a_delta(fv({4, 7})) == q(0));
    CHECK(dim_avg_plus(fv({4, 7})) == q(3, 2));
  }
}
