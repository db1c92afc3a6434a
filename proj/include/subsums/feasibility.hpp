#pragma once

#include <cstdint>
#include <vector>

#include "subsums/configurations.hpp"
#include "subsums/rational.hpp"

namespace subsums {

// Verdict of the exact strict-feasibility test for {w·a > 0 for all rows}.
// By homogeneity this is equivalent to feasibility of {w·a >= 1}, which is
// what the solver decides. A feasible verdict always carries a witness that
// has been re-verified row by row in rational arithmetic; an infeasible one
// carries the dual certificate y >= 0, W^T y = 0, sum(y) = 1, likewise
// verified.
struct FeasibilityResult {
  bool feasible = false;
  std::vector<Rational> witness;      // size dim when feasible
  std::vector<Rational> certificate;  // size rows when infeasible
  long pivots = 0;
  bool used_bignum = false;
};

// Reusable solver workspace. One instance per thread; solve() is a pure
// function of its argument, the workspace only recycles buffers and
// accumulates counters.
class FeasibilitySolver {
 public:
  FeasibilityResult solve(const ConstraintSystem& sys);

  std::uint64_t calls = 0;
  std::uint64_t total_pivots = 0;
  std::uint64_t bignum_reruns = 0;

 private:
  std::vector<long long> tab_;
  std::vector<Integer> big_tab_;
  std::vector<int> basis_;
};

FeasibilityResult strict_feasible(const ConstraintSystem& sys);

}  // namespace subsums
