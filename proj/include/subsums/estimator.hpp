#pragma once

#include <cstdint>
#include <vector>

#include "subsums/census.hpp"
#include "subsums/halfgamma.hpp"
#include "subsums/rng.hpp"

namespace subsums {

// One random root-to-leaf probe of the configuration tree. x is the product
// of the branching factors along the path; a dead path records a trailing 0
// factor, keeps x = 0 and no configuration.
struct Sample {
  Integer x;
  std::vector<int> branching;
  std::vector<int> path;
  bool completed = false;
};

Sample branching_product(int n, SplitMix64 rng);

struct EstimateResult {
  int n = 0;
  std::uint64_t k = 0;
  std::uint64_t seed = 0;
  std::vector<Sample> samples;
  Rational mean;
};

// k independent samples with per-sample streams derived from (seed, index);
// identical output for any thread count.
EstimateResult estimate(int n, std::uint64_t k, std::uint64_t seed, int threads = 1);

// Markov-inequality test of the null "E[X] <= Gamma(n/2+1)".
struct MarkovReport {
  int n = 0;
  std::uint64_t k = 0;
  Rational mean;
  Integer max_x;
  HalfGamma bound;
  Integer c;                  // floor(max_x / bound)
  bool confidence_defined = false;  // c >= 1
  Rational confidence_single;       // 1 - 1/c
  Rational confidence_joint;        // (1 - 1/c)^k
  bool rejected = false;            // c >= 2
};

MarkovReport markov_test(const std::vector<Sample>& samples, int n);

}  // namespace subsums
