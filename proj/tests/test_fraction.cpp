#include <doctest.h>

#include <stdexcept>

#include "gperiods/fraction.hpp"

using gp::Frac;
using gp::Rat;

TEST_CASE("fractions reduce on construction") {
  CHECK(Frac(2, 4).str() == "1/2");
  CHECK(Frac(6, 3).str() == "2");
  CHECK(Frac(0, 7).str() == "0");
  CHECK(Frac(21, 14) == Frac(3, 2));
  CHECK(Frac(mpz_class("123456789123456789"), mpz_class("3")).den() == 1);
}

TEST_CASE("construction rejects bad values") {
  CHECK_THROWS_AS(Frac(1, 0), std::domain_error);
  CHECK_THROWS_AS(Frac(-1, 2), std::domain_error);
  CHECK_THROWS_AS(Frac(Rat(-3, 7)), std::domain_error);
}

TEST_CASE("parsing accepts ratios, integers and decimals") {
  CHECK(Frac::parse("3/7")->str() == "3/7");
  CHECK(Frac::parse(" 3 / 7 ")->str() == "3/7");
  CHECK(Frac::parse("2")->str() == "2");
  CHECK(Frac::parse("2/4")->str() == "1/2");
  CHECK(Frac::parse("1.75")->str() == "7/4");
  CHECK(Frac::parse("0.5")->str() == "1/2");
  CHECK(Frac::parse("0.500")->str() == "1/2");
  // leading zeros are decimal, never octal
  CHECK(Frac::parse("08")->str() == "8");
  CHECK(Frac::parse("3/08")->str() == "3/8");
  CHECK(Frac::parse("0.08")->str() == "2/25");
}

TEST_CASE("parsing rejects malformed input") {
  for (const char* bad : {"", "x", "3/", "/4", "3/0", "-1/2", "1.2.3", "1/2/3", "2.", "1e3"})
    CHECK_MESSAGE(!Frac::parse(bad).has_value(), bad);
}

TEST_CASE("difference is checked, products and sums are exact") {
  CHECK(Frac(1, 2) - Frac(1, 3) == Frac(1, 6));
  CHECK(Frac(1, 2) + Frac(1, 3) == Frac(5, 6));
  CHECK(Frac(2, 3) * Frac(3, 4) == Frac(1, 2));
  CHECK_THROWS_AS(Frac(1, 3) - Frac(1, 2), std::domain_error);
}

TEST_CASE("reciprocal") {
  CHECK(Frac(2, 7).reciprocal() == Frac(7, 2));
  CHECK(Frac(1, 1).reciprocal() == Frac(1, 1));
  CHECK_THROWS_AS(Frac(0, 1).reciprocal(), std::domain_error);
}

TEST_CASE("factor_integer") {
  auto f = gp::factor_integer(mpz_class(360));
  REQUIRE(f.size() == 3);
  CHECK(f[2] == 3);
  CHECK(f[3] == 2);
  CHECK(f[5] == 1);
  CHECK(gp::factor_integer(mpz_class(1)).empty());
  auto p = gp::factor_integer(mpz_class(1000003));
  REQUIRE(p.size() == 1);
  CHECK(p[1000003] == 1);
  CHECK_THROWS_AS(gp::factor_integer(mpz_class(0)), std::domain_error);
}

TEST_CASE("is_prime") {
  CHECK(gp::is_prime(2));
  CHECK(gp::is_prime(199));
  CHECK(!gp::is_prime(1));
  CHECK(!gp::is_prime(221));  // 13 * 17
}
