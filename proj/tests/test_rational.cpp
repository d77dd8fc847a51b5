#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pcd/rational.hpp"

using pcd::Rational;

TEST_CASE("normalization") {
  CHECK(Rational(7560, 39) == Rational(2520, 13));
  CHECK(Rational(126, 39).num() == 42);
  CHECK(Rational(126, 39).den() == 13);
  CHECK(Rational(-4, -8) == Rational(1, 2));
  CHECK(Rational(4, -8) == Rational(-1, 2));
  CHECK(Rational(0, 5) == Rational(0));
}

TEST_CASE("arithmetic") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
  CHECK(Rational(126, 39) * Rational(60) == Rational(7560, 39));
  CHECK(Rational(7560, 39) / Rational(60) == Rational(126, 39));
  CHECK(-Rational(3, 4) == Rational(-3, 4));
}

TEST_CASE("ordering and conversion") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(59, 60) > Rational(49, 50));
  CHECK(Rational(60).to_double() == 60.0);
  CHECK(Rational(7560, 39).to_double() == doctest::Approx(193.846153846).epsilon(1e-12));
}

TEST_CASE("string form") {
  CHECK(Rational(60).str() == "60");
  CHECK(Rational(59, 60).str() == "59/60");
  CHECK(Rational(-1, 2).str() == "-1/2");
}

TEST_CASE("zero denominator throws") {
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(Rational(1, 2) / Rational(0), std::invalid_argument);
}
