#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "transcalc/rational.hpp"

using namespace transcalc;

TEST_CASE("construction keeps lowest terms") {
  CHECK(make_rat(2, 4) == make_rat(1, 2));
  CHECK(make_rat(1, -2) == make_rat(-1, 2));
  CHECK(rat_str(make_rat(-6, 4)) == "-3/2");
  CHECK(rat_from_string("10/15") == make_rat(2, 3));
  CHECK_THROWS(rat_from_string("x"));
}

TEST_CASE("integer powers and roots") {
  CHECK(rat_pow_int(make_rat(2, 3), -2) == make_rat(9, 4));
  CHECK(rat_pow_int(Rat(5), 0) == 1);
  CHECK(rat_nth_root(make_rat(8, 27), 3) == make_rat(2, 3));
  CHECK(!rat_nth_root(Rat(2), 2).has_value());
  CHECK(!rat_nth_root(Rat(-4), 2).has_value());
  CHECK(rat_pow(make_rat(4, 9), make_rat(3, 2)) == make_rat(8, 27));
  CHECK(!rat_pow(Rat(2), make_rat(1, 2)).has_value());
}

TEST_CASE("binomials and factorials") {
  CHECK(rat_binom(make_rat(1, 2), 2) == make_rat(-1, 8));
  CHECK(rat_binom(Rat(4), 2) == 6);
  CHECK(rat_binom(Rat(3), 5) == 0);
  CHECK(rat_factorial(0) == 1);
  CHECK(rat_factorial(23) == rat_from_string("25852016738884976640000"));
}
