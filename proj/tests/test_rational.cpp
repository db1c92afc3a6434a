#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "subsums/rng.hpp"
#include "subsums/sequence.hpp"

using namespace subsums;

TEST_CASE("parse fractions, integers and decimals") {
  CHECK(parse_rational("3/6") == make_rational(1, 2));
  CHECK(parse_rational("-3/6") == make_rational(-1, 2));
  CHECK(parse_rational("42") == make_rational(42));
  CHECK(parse_rational("-7") == make_rational(-7));
  CHECK(parse_rational("0.25") == make_rational(1, 4));
  CHECK(parse_rational("-1.5") == make_rational(-3, 2));
  CHECK(parse_rational("2.") == make_rational(2));
  CHECK(parse_rational(".5") == make_rational(1, 2));
  CHECK(parse_rational("  10/4 ") == make_rational(5, 2));
}

TEST_CASE("parse rejects malformed input") {
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1.2/3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1e3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("."), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("-"), std::invalid_argument);
}

TEST_CASE("values stay canonical so equality is structural") {
  Rational a = make_rational(2, 4);
  CHECK(a.get_num() == 1);
  CHECK(a.get_den() == 2);
  Rational b = make_rational(1, -2);
  CHECK(b.get_num() == -1);
  CHECK(b.get_den() == 2);
  CHECK(a + b == 0);
}

TEST_CASE("print/parse round trip on random rationals") {
  SplitMix64 rng(7);
  for (int t = 0; t < 500; ++t) {
    Rational v = rng.rational(1000, 60);
    CHECK(parse_rational(to_string(v)) == v);
  }
}

TEST_CASE("sequence text format: comments, blanks, mixed notations") {
  std::istringstream in(
      "# header comment\n"
      "3\n"
      "\n"
      "0.25   # trailing comment\n"
      "-7/2\n");
  Sequence s = read_sequence(in);
  REQUIRE(s.size() == 3);
  CHECK(s[0] == 3);
  CHECK(s[1] == make_rational(1, 4));
  CHECK(s[2] == make_rational(-7, 2));
}
