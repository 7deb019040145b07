#include <doctest.h>

#include <stdexcept>

#include "simpdim/complex.hpp"
#include "simpdim/genfun.hpp"
#include "test_util.hpp"

using namespace simpdim;
using testutil::fv;
using testutil::q;

namespace {

Complex house() {
  return Complex::generate({Simplex{2, 3, 5}, Simplex{1, 4}, Simplex{1, 2},
                            Simplex{3, 4}});
}

}  // namespace

TEST_SUITE("genfun") {
  TEST_CASE("f_vector and card_plus") {
    CHECK(f_vector(Complex()).counts.empty());
    CHECK(card_plus(f_vector(Complex())) == 1);
    CHECK(f_vector(house()) == fv({5, 6, 1}));
    CHECK(card_plus(f_vector(house())) == 13);
  }

  TEST_CASE("gen_poly evaluation") {
    GenPoly f = gen_poly(fv({5, 6, 1}));
    REQUIRE(f.c.size() == 4);
    CHECK(f.c[0] == 1);
    CHECK(f.c[3] == 1);
    CHECK(eval(f, q(1)) == q(13));
    CHECK(eval(f, q(-1)) == q(1));
    CHECK(eval(f, q(0)) == q(1));
    CHECK(eval(gen_poly(FVector{}), q(5)) == q(1));
  }

  TEST_CASE("derivative") {
    GenPoly f = gen_poly(fv({5, 6, 1}));  // 1 + 5t + 6t^2 + t^3
    GenPoly df = derivative(f);
    REQUIRE(df.c.size() == 3);
    CHECK(df.c[0] == 5);
    CHECK(df.c[1] == 12);
    CHECK(df.c[2] == 3);
    CHECK(derivative(gen_poly(FVector{})).c.empty());
  }

  TEST_CASE("multiply matches join") {
    Complex a = complex_C(4), b = complex_K(3);
    GenPoly prod = multiply(gen_poly(f_vector(a)), gen_poly(f_vector(b)));
    CHECK(prod == gen_poly(f_vector(join(a, b))));
  }

  TEST_CASE("dim_avg_plus") {
    CHECK(dim_avg_plus(FVector{}) == q(0));
    CHECK(dim_avg_plus(house()) == q(20, 13));
    CHECK(dim_avg_plus(complex_K(3)) == q(3, 2));
    CHECK(dim_avg(f_vector(house())) == q(7, 13));
    for (int n = 0; n <= 12; ++n)
      CHECK(dim_avg_plus(complex_E(n)) == q(n, n + 1));
  }

  TEST_CASE("log_derivative is additive under join") {
    GenPoly fa = gen_poly(f_vector(complex_C(5)));
    GenPoly fb = gen_poly(f_vector(complex_K(2)));
    GenPoly fj = gen_poly(f_vector(join(complex_C(5), complex_K(2))));
    Rat t = q(1, 3);
    CHECK(log_derivative(fj, t) ==
          log_derivative(fa, t) + log_derivative(fb, t));
    // f(-1/2) = 0 for the octahedron: the log derivative has a pole
    GenPoly fo = gen_poly(f_vector(octahedron()));
    CHECK(eval(fo, q(-1, 2)) == q(0));
    CHECK_THROWS_AS((void)log_derivative(fo, q(-1, 2)), std::domain_error);
  }

  TEST_CASE("genus") {
    CHECK(genus(f_vector(Complex())) == 1);
    CHECK(genus(f_vector(complex_K(5))) == 0);
    CHECK(genus(f_vector(octahedron())) == -1);
    CHECK(genus(f_vector(complex_C(6))) == 1);
    // multiplicative under join
    CHECK(genus(f_vector(join(complex_C(4), complex_C(4)))) == 1);
    CHECK(genus(f_vector(join(octahedron(), complex_C(4)))) == -1);
  }

  TEST_CASE("moments") {
    // K_1: faces {v}; f(1) = 2; Dim+ = 1/2; moment_1 = (1 - 1/2)/2 = 1/4
    CHECK(cardinality_moment(f_vector(complex_K(1)), 1) == q(1, 4));
    CHECK(variance_plus(f_vector(complex_K(1))) == q(1, 8));
    CHECK(variance_plus(f_vector(complex_K(2))) == q(1, 4));
    CHECK(cardinality_moment(f_vector(complex_K(3)), 0) == q(7, 8));
  }
}
