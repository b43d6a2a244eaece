#include <catch2/catch_amalgamated.hpp>

#include <limits>
#include <sstream>
#include <stdexcept>

#include <osporb/errors.hpp>
#include <osporb/rational.hpp>

using osporb::DomainError;
using osporb::Rational;

TEST_CASE("rationals normalize on construction") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, 4) == Rational(1, -2));
  CHECK(Rational(-2, -4) == Rational(1, 2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(6, 3).num() == 2);
  CHECK(Rational(6, 3).den() == 1);
  CHECK(Rational(-3, 6).num() == -1);
  CHECK(Rational(-3, 6).den() == 2);
}

TEST_CASE("zero denominator is rejected") {
  CHECK_THROWS_AS(Rational(1, 0), DomainError);
  CHECK_THROWS_AS(Rational(1, 2) / Rational(0), DomainError);
}

TEST_CASE("field operations") {
  const Rational a(1, 6), b(1, 10);
  CHECK(a + b == Rational(4, 15));
  CHECK(a - b == Rational(1, 15));
  CHECK(a * b == Rational(1, 60));
  CHECK(a / b == Rational(5, 3));
  CHECK(-a == Rational(-1, 6));
  CHECK(a - a == Rational(0));
  CHECK(Rational(7) * Rational(0) == Rational(0));
}

TEST_CASE("ordering is exact") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
  CHECK(Rational(2, 3) > Rational(3, 5));
  CHECK(Rational(1, 2) <= Rational(2, 4));
  CHECK(Rational(1, 2) >= Rational(2, 4));
  CHECK(Rational(1, 7) != Rational(1, 8));
}

TEST_CASE("string rendering") {
  CHECK(Rational(0).str() == "0");
  CHECK(Rational(5).str() == "5");
  CHECK(Rational(-1, 20).str() == "-1/20");
  CHECK(Rational(24, 16).str() == "3/2");
  std::ostringstream out;
  out << Rational(-13, 14);
  CHECK(out.str() == "-13/14");
}

TEST_CASE("overflow is detected, not wrapped") {
  const long long big = std::numeric_limits<long long>::max();
  CHECK_THROWS_AS(Rational(big, 1) + Rational(big, 1), std::overflow_error);
  CHECK_THROWS_AS(Rational(big, 1) * Rational(2, 1), std::overflow_error);
  CHECK_NOTHROW(Rational(big, 1) - Rational(big, 1));
}
