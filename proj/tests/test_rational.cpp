#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "simpdim/rational.hpp"
#include "test_util.hpp"

using namespace simpdim;
using testutil::q;

TEST_SUITE("rational") {
  TEST_CASE("rat_str") {
    CHECK(rat_str(q(3, 2)) == "3/2");
    CHECK(rat_str(q(4, 2)) == "2");
    CHECK(rat_str(q(-7, 3)) == "-7/3");
    CHECK(rat_str(q(0)) == "0");
  }

  TEST_CASE("rat_parse") {
    CHECK(rat_parse("3/2") == q(3, 2));
    CHECK(rat_parse("-5") == q(-5));
    CHECK(rat_parse("0.25") == q(1, 4));
    CHECK(rat_parse("1.5") == q(3, 2));
    CHECK(rat_parse("-0.1") == q(-1, 10));
    CHECK(rat_parse("4/6") == q(2, 3));  // canonicalized on parse
    CHECK_THROWS_AS((void)rat_parse("x"), std::invalid_argument);
    CHECK_THROWS_AS((void)rat_parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS((void)rat_parse(""), std::invalid_argument);
  }

  TEST_CASE("decimal_str rounds half away from zero") {
    CHECK(decimal_str(q(1, 2), 0) == "1");
    CHECK(decimal_str(q(-1, 2), 0) == "-1");
    CHECK(decimal_str(q(1, 3), 4) == "0.3333");
    CHECK(decimal_str(q(2, 3), 4) == "0.6667");
    CHECK(decimal_str(q(3, 2), 2) == "1.50");
    CHECK(decimal_str(q(-7, 8), 2) == "-0.88");
    CHECK(decimal_str(q(1, 1000), 2) == "0.00");
  }

  TEST_CASE("digit_count") {
    CHECK(digit_count(Int(0)) == 1);
    CHECK(digit_count(Int(9)) == 1);
    CHECK(digit_count(Int(10)) == 2);
    CHECK(digit_count(Int(-12345)) == 5);
    Int big = 1;
    for (int i = 0; i < 100; ++i) big *= 10;
    CHECK(digit_count(big) == 101);
    CHECK(digit_count(Int(big - 1)) == 100);
  }

  TEST_CASE("log_abs") {
    CHECK(log_abs(q(1)) == doctest::Approx(0.0));
    CHECK(log_abs(q(-1, 2)) == doctest::Approx(-std::log(2.0)));
    // far outside double range: (1/2)^2000
    Rat tiny = 1;
    for (int i = 0; i < 200; ++i) tiny *= q(1, 1024);
    CHECK(log_abs(tiny) == doctest::Approx(-2000 * std::log(2.0)));
  }
}
