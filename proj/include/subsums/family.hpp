#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "subsums/configurations.hpp"

namespace subsums {

// The constructive exponential family: one instance per subset S of
// {4,...,n}, with sequence A^S and its forced configuration P^S.
struct FamilyInstance {
  int n = 0;
  std::vector<int> subset;
  Sequence a;
  Configuration cfg;
};

FamilyInstance gen_instance(int n, std::span<const int> subset);

struct FamilyReport {
  int n = 0;
  std::uint64_t instances = 0;
  std::uint64_t passed = 0;
  bool all_distinct = false;
  std::vector<std::string> failures;  // subsets of failing instances
  double elapsed_seconds = 0.0;
};

// Checks, for every subset: output_configurations(A^S) == {P^S},
// is_unique(P^S), and pairwise distinctness of the P^S. Guarded at n <= 20.
FamilyReport verify_family(int n, int threads = 1);

}  // namespace subsums
