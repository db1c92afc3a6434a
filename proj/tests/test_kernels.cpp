#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "subsums/kernels.hpp"
#include "subsums/rng.hpp"
#include "subsums/serial.hpp"

using namespace subsums;

namespace {

Sequence seq(std::initializer_list<long> xs) {
  Sequence s;
  for (long v : xs) s.push_back(make_rational(v));
  return s;
}

Sequence random_sequence(SplitMix64& rng, int n) {
  Sequence s(n);
  for (auto& v : s) v = rng.rational(25, 6);
  return s;
}

}  // namespace

TEST_CASE("worked example: maxima and smallest-index positions") {
  // the length-1 maximum of (3,0,5,0,2,4) is the value 5 at position 3
  SubsumProfile p = mcsp_naive(seq({3, 0, 5, 0, 2, 4}));
  CHECK(p.maxima == std::vector<Rational>{5, 6, 8, 11, 11, 14});
  CHECK(p.positions == std::vector<int>{3, 5, 1, 3, 2, 1});

  auto [om, op] = oracle::scan_profile(seq({3, 0, 5, 0, 2, 4}));
  CHECK(p.maxima == om);
  CHECK(p.positions == op);
}

TEST_CASE("constant sequence resolves ties to the smallest start") {
  SubsumProfile p = mcsp_naive(seq({1, 1, 1}));
  CHECK(p.maxima == std::vector<Rational>{1, 2, 3});
  CHECK(p.positions == std::vector<int>{1, 1, 1});
}

TEST_CASE("empty input is rejected") {
  CHECK_THROWS_AS(mcsp_naive(Sequence{}), std::invalid_argument);
  CHECK_THROWS_AS(minplus_conv(Sequence{}, Sequence{}), std::invalid_argument);
  CHECK_THROWS_AS(minplus_conv(seq({1}), seq({1, 2})), std::invalid_argument);
}

TEST_CASE("minplus examples") {
  CHECK(minplus_conv(seq({0, 0}), seq({0, 0})) == std::vector<Rational>{0, 0, 0});
  CHECK(minplus_conv(seq({1, 2}), seq({3, 4})) == std::vector<Rational>{4, 5, 6});
  CHECK(minplus_conv(seq({5}), seq({7})) == std::vector<Rational>{12});
}

TEST_CASE("maxplus examples and the negation identity") {
  // direct evaluation: z_1 = max(1+4, 2+3) = 5
  CHECK(maxplus_conv(seq({1, 2}), seq({3, 4})) == oracle::direct_maxplus(seq({1, 2}), seq({3, 4})));
  CHECK(maxplus_conv(seq({1, 2}), seq({3, 4})) == std::vector<Rational>{4, 5, 6});
  CHECK(maxplus_conv(seq({0}), seq({0})) == std::vector<Rational>{0});

  SplitMix64 rng(11);
  for (int t = 0; t < 50; ++t) {
    int n = 1 + static_cast<int>(rng.below(12));
    Sequence x = random_sequence(rng, n), y = random_sequence(rng, n);
    Sequence nx(x), ny(y);
    for (auto& v : nx) v = -v;
    for (auto& v : ny) v = -v;
    ConvolutionResult lhs = maxplus_conv(x, y);
    ConvolutionResult viaMin = minplus_conv(nx, ny);
    for (auto& v : viaMin) v = -v;
    CHECK(lhs == viaMin);
  }
}

TEST_CASE("no window sum ever exceeds the reported maximum") {
  SplitMix64 rng(3);
  for (int t = 0; t < 40; ++t) {
    int n = 1 + static_cast<int>(rng.below(64));
    Sequence a = random_sequence(rng, n);
    SubsumProfile p = mcsp_naive(a);
    for (int len = 1; len <= n; ++len) {
      CHECK(p.positions[len - 1] >= 1);
      CHECK(p.positions[len - 1] <= n - len + 1);
      CHECK(oracle::window_sum(a, p.positions[len - 1], len) == p.maxima[len - 1]);
      for (int start = 1; start <= n - len + 1; ++start)
        CHECK(oracle::window_sum(a, start, len) <= p.maxima[len - 1]);
    }
  }
}

TEST_CASE("convolution symmetry and constant-shift properties") {
  SplitMix64 rng(5);
  for (int t = 0; t < 60; ++t) {
    int n = 1 + static_cast<int>(rng.below(16));
    Sequence x = random_sequence(rng, n), y = random_sequence(rng, n);
    CHECK(minplus_conv(x, y) == minplus_conv(y, x));

    Rational c = rng.rational(9, 4);
    Sequence xs(x);
    for (auto& v : xs) v += c;
    ConvolutionResult base = minplus_conv(x, y);
    ConvolutionResult shifted = minplus_conv(xs, y);
    for (size_t k = 0; k < base.size(); ++k) CHECK(shifted[k] == base[k] + c);
  }
}

TEST_CASE("parallel kernels agree with the serial reference") {
  SplitMix64 rng(9);
  for (int t = 0; t < 25; ++t) {
    int n = 1 + static_cast<int>(rng.below(200));
    Sequence a = random_sequence(rng, n);
    SubsumProfile par = mcsp_naive(a);
    SubsumProfile ser = serial::mcsp_naive(a);
    CHECK(par.maxima == ser.maxima);
    CHECK(par.positions == ser.positions);
  }
  for (int t = 0; t < 25; ++t) {
    int n = 1 + static_cast<int>(rng.below(150));
    Sequence x = random_sequence(rng, n), y = random_sequence(rng, n);
    CHECK(minplus_conv(x, y) == serial::minplus_conv(x, y));
    CHECK(maxplus_conv(x, y) == serial::maxplus_conv(x, y));
  }
}

TEST_CASE("small-n profiles match the oracle exactly") {
  SplitMix64 rng(21);
  for (int t = 0; t < 120; ++t) {
    int n = 1 + static_cast<int>(rng.below(24));
    Sequence a = random_sequence(rng, n);
    auto [om, op] = oracle::scan_profile(a);
    SubsumProfile p = mcsp_naive(a);
    CHECK(p.maxima == om);
    CHECK(p.positions == op);
    CHECK(minplus_conv(a, a) == oracle::direct_minplus(a, a));
  }
}
