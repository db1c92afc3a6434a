#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "subsums/kernels.hpp"

namespace subsums {

// Convolution instance (X,Y) of arity n packed into one MCSP input of
// length 2n+4; the two copies of the big constant S sit at positions n+1
// and n+4 (1-based) and force every window of length >= 4 to span the
// gadget core.
struct ConvToMcspInstance {
  Sequence a;
  Rational big_constant;
  int n = 0;
};

ConvToMcspInstance conv_to_mcsp(const Sequence& x, const Sequence& y);

// z_k = 2S - m_{k+4}, k = 0..2n.
ConvolutionResult decode_conv(const ConvToMcspInstance& inst, const SubsumProfile& profile);

// MCSP input A of length n as a convolution pair over prefix sums:
// x_i = P_{n-i}, y_j = -P_j, so the best length-l window is -z_{n+l}.
struct McspToConvInstance {
  Sequence x;
  Sequence y;
  int n = 0;
};

McspToConvInstance mcsp_to_conv(const Sequence& a);

// m_l = -z_{n+l} for l = 1..n.
std::vector<Rational> decode_mcsp(const McspToConvInstance& inst, const ConvolutionResult& z);

struct EquivalenceTrial {
  std::uint64_t index = 0;
  int conv_arity = 0;
  int mcsp_length = 0;
  bool pass = false;
  std::string detail;
};

struct EquivalenceReport {
  std::uint64_t trials = 0;
  int max_n = 0;
  std::uint64_t seed = 0;
  std::uint64_t passes = 0;
  double elapsed_seconds = 0.0;
  std::vector<EquivalenceTrial> results;
};

// Round-trips both reductions on seeded random instances against the naive
// kernels; every comparison is bit-exact.
EquivalenceReport verify_equivalence(std::uint64_t trials, int max_n, std::uint64_t seed,
                                     int threads = 1);

}  // namespace subsums
