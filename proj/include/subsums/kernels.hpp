#pragma once

#include <vector>

#include "subsums/sequence.hpp"

namespace subsums {

// Per-length window maxima of a length-n sequence: maxima[l-1] is the best
// sum over windows of length l, positions[l-1] the smallest 1-based start
// attaining it.
struct SubsumProfile {
  std::vector<Rational> maxima;
  std::vector<int> positions;
};

// z_k = min/max over i of x_i + y_{k-i}; inputs of equal length n+1 yield
// 2n+1 outputs.
using ConvolutionResult = std::vector<Rational>;

// Exhaustive quadratic solvers. These are the ground truth all other
// modules are checked against; OpenMP splits the outer loop, the per-length
// scans stay sequential so results are identical to subsums::serial.
SubsumProfile mcsp_naive(const Sequence& a);
ConvolutionResult minplus_conv(const Sequence& x, const Sequence& y);
ConvolutionResult maxplus_conv(const Sequence& x, const Sequence& y);

}  // namespace subsums
