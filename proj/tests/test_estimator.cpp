#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "subsums/census.hpp"
#include "subsums/estimator.hpp"

using namespace subsums;

TEST_CASE("single-level tree always returns 1") {
  for (std::uint64_t s = 0; s < 20; ++s) {
    Sample smp = branching_product(1, SplitMix64::stream(42, s));
    CHECK(smp.completed);
    CHECK(smp.x == 1);
    CHECK(smp.branching == std::vector<int>{1});
    CHECK(smp.path == std::vector<int>{1});
  }
}

TEST_CASE("two-level tree always returns 2") {
  for (std::uint64_t s = 0; s < 20; ++s) {
    Sample smp = branching_product(2, SplitMix64::stream(7, s));
    CHECK(smp.completed);
    CHECK(smp.x == 2);
    CHECK(smp.branching == std::vector<int>{2, 1});
  }
}

TEST_CASE("samples are reproducible and thread-count independent") {
  EstimateResult a = estimate(5, 64, 1234, 1);
  EstimateResult b = estimate(5, 64, 1234, 4);
  REQUIRE(a.samples.size() == b.samples.size());
  for (size_t i = 0; i < a.samples.size(); ++i) {
    CHECK(a.samples[i].x == b.samples[i].x);
    CHECK(a.samples[i].branching == b.samples[i].branching);
    CHECK(a.samples[i].path == b.samples[i].path);
  }
  CHECK(a.mean == b.mean);
}

TEST_CASE("every completed path is a unique configuration with consistent product") {
  EstimateResult res = estimate(6, 60, 99);
  for (const auto& s : res.samples) {
    REQUIRE(s.completed);  // dead paths cannot occur when prefixes stay feasible
    Integer prod = 1;
    for (int b : s.branching) prod *= b;
    CHECK(prod == s.x);
    Configuration cfg{s.path};
    CHECK(is_unique(cfg).unique);
  }
}

TEST_CASE("trivial estimate") {
  EstimateResult res = estimate(1, 1, 5);
  CHECK(res.mean == 1);
}

TEST_CASE("mean approaches the census count") {
  // sanity-size run; the acceptance suite uses k = 20000
  CensusReport census = count_unique(5);
  EstimateResult res = estimate(5, 4000, 2024);
  double mean = res.mean.get_d();
  // X <= 5! = 120; var(X) < E[X^2] <= 120 * E[X]; 3 sigma with slack
  CHECK(mean > 20.0);
  CHECK(mean < 55.0);
  CHECK(census.unique_count == 36);
}

TEST_CASE("markov test arithmetic and published strings") {
  std::vector<Sample> fake(1);
  fake[0].completed = true;

  // n = 10: bound 5! = 120; choose max to land c = 6048
  fake[0].x = Integer(6048) * 120 + 37;
  MarkovReport rep = markov_test(fake, 10);
  CHECK(rep.c == 6048);
  CHECK(rep.rejected);
  CHECK(percent_table_string(rep.confidence_single) == "99.98346560846560");

  fake[0].x = Integer(439296) * 1871 + 1000;  // bound ~1871.25: lands at 439295..439296
  MarkovReport rep13 = markov_test(fake, 13);
  // place the max precisely instead: c = floor(max / Gamma(7.5))
  CHECK(percent_table_string(Rational(Integer(439295), Integer(439296))) == "99.99977236305360");

  fake[0].x = 1;
  MarkovReport one = markov_test(fake, 2);  // bound 1! = 1, c = 1
  CHECK(one.c == 1);
  CHECK(one.confidence_defined);
  CHECK(one.confidence_single == 0);
  CHECK_FALSE(one.rejected);

  fake[0].x = 0;
  MarkovReport zero = markov_test(fake, 4);  // bound 2, c = 0
  CHECK(zero.c == 0);
  CHECK_FALSE(zero.confidence_defined);

  CHECK_THROWS_AS(markov_test({}, 5), std::invalid_argument);
}

TEST_CASE("joint bound is the k-th power") {
  std::vector<Sample> fake(3);
  for (auto& s : fake) {
    s.completed = true;
    s.x = 10;
  }
  MarkovReport rep = markov_test(fake, 2);  // bound 1, c = 10
  CHECK(rep.c == 10);
  CHECK(rep.confidence_single == Rational(9, 10));
  CHECK(rep.confidence_joint == Rational(729, 1000));
}

TEST_CASE("half-integer gamma values") {
  CHECK(gamma_half_factorial(6).exact);
  CHECK(gamma_half_factorial(6).integer_value == 6);
  CHECK(gamma_half_factorial(2).integer_value == 1);
  CHECK_FALSE(gamma_half_factorial(13).exact);
  CHECK(gamma_table_one_decimal(gamma_half_factorial(6)) == "6.0");
  CHECK(gamma_table_one_decimal(gamma_half_factorial(13)) == "1871.3");
  CHECK(gamma_table_one_decimal(gamma_half_factorial(2)) == "1.0");
  CHECK_THROWS_AS(gamma_half_factorial(0), std::invalid_argument);

  // >= 30 significant digits for the irrational values
  std::string g5 = gamma_decimal(gamma_half_factorial(5));
  CHECK(g5.substr(0, 12) == "3.3233509704");
  CHECK(g5.size() >= 31);
}

TEST_CASE("published one-decimal gamma column, n = 1..14") {
  const char* expected[] = {"0.8",   "1.0",   "1.3",  "2.0",   "3.3",    "6.0",    "11.6",
                            "24.0",  "52.3",  "120.0", "287.9", "720.0",  "1871.3", "5040.0"};
  for (int n = 1; n <= 14; ++n)
    CHECK(gamma_table_one_decimal(gamma_half_factorial(n)) == expected[n - 1]);
}

TEST_CASE("published two-decimal ratio column, n = 1..14") {
  const std::uint64_t counts[] = {1,     2,     4,      12,     36,      148,     586,
                                  2790,  13338, 71562,  378024, 2222536, 12770406, 78968306};
  const char* expected[] = {"1.25",   "2.00",   "3.07",    "6.00",    "10.90",   "24.66",  "50.51",
                            "116.25", "255.02", "596.35",  "1313.03", "3086.85", "6824.34",
                            "15668.31"};
  for (int n = 1; n <= 14; ++n)
    CHECK(ratio_table(Integer(static_cast<unsigned long>(counts[n - 1])),
                      gamma_half_factorial(n)) == expected[n - 1]);
}

TEST_CASE("floor quotient against the irrational bound") {
  HalfGamma g13 = gamma_half_factorial(13);  // 1871.2543...
  CHECK(floor_quotient(Integer(1871), g13) == 0);
  CHECK(floor_quotient(Integer(1872), g13) == 1);
  CHECK(floor_quotient(Integer(0), g13) == 0);
  Integer big("123456789123456789");
  HalfGamma g5 = gamma_half_factorial(5);  // 3.3233...
  // frozen from an independent 60-digit evaluation of floor(x / Gamma(3.5))
  CHECK(floor_quotient(big, g5) == Integer("37148285035576668"));
}
