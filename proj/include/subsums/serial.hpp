#pragma once

#include "subsums/feasibility.hpp"
#include "subsums/kernels.hpp"

namespace subsums::serial {

// Plain single-threaded counterparts of the OpenMP kernels; kept as the
// reference the parallel paths are tested and benchmarked against.
SubsumProfile mcsp_naive(const Sequence& a);
ConvolutionResult minplus_conv(const Sequence& x, const Sequence& y);
ConvolutionResult maxplus_conv(const Sequence& x, const Sequence& y);

// Reference feasibility engine: textbook Phase-1 primal simplex over
// rationals on {W(u-v) - s = 1, u,v,s >= 0} with Bland's rule. Much slower
// than subsums::strict_feasible but independent of it.
FeasibilityResult strict_feasible(const ConstraintSystem& sys);

}  // namespace subsums::serial
