#include <doctest.h>

#include "percolab/rational.hpp"

using percolab::Rational;

TEST_CASE("rational normalizes to lowest terms with positive denominator") {
  CHECK(Rational(6, 4) == Rational(3, 2));
  CHECK(Rational(-6, 4) == Rational(-3, 2));
  CHECK(Rational(6, -4) == Rational(-3, 2));
  CHECK(Rational(0, -5) == Rational(0));
  CHECK(Rational(5, 2).str() == "5/2");
  CHECK(Rational(2).str() == "2/1");
  CHECK(Rational(-3, 4).str() == "-3/4");
}

TEST_CASE("rational arithmetic is exact") {
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(5, 2) - Rational(1, 2) == Rational(2));
  CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
  CHECK(Rational(1, 3) / Rational(2, 3) == Rational(1, 2));
  CHECK(-Rational(1, 3) == Rational(-1, 3));
  CHECK_THROWS(Rational(1, 0));
  CHECK_THROWS(Rational(1, 2) / Rational(0));
}

TEST_CASE("rational comparison is exact cross multiplication") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(8, 3) > Rational(5, 2));
  CHECK(Rational(10, 4) <= Rational(5, 2));
  CHECK(Rational(10, 4) >= Rational(5, 2));
  CHECK(Rational(1000000007, 2) > Rational(1000000006, 2));
  CHECK(Rational(1, 3).to_double() == doctest::Approx(1.0 / 3.0));
}
