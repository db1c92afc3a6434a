#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>

#include "subsums/configurations.hpp"
#include "subsums/feasibility.hpp"

namespace subsums {

struct CensusCounters {
  std::uint64_t nodes_visited = 0;
  std::uint64_t lp_calls = 0;
  std::uint64_t adjacency_prunes = 0;

  CensusCounters& operator+=(const CensusCounters& o) {
    nodes_visited += o.nodes_visited;
    lp_calls += o.lp_calls;
    adjacency_prunes += o.adjacency_prunes;
    return *this;
  }
};

// One backtracking gate: can the partial configuration prefix (p_1..p_{i-1})
// be extended with p_i := j? Adjacency precheck first, then the exact LP on
// Q(P,1..i). Builds the system from scratch; the census keeps an incremental
// equivalent.
bool is_feasible_extension(std::span<const int> prefix, int n, int i, int j,
                           FeasibilitySolver& solver, CensusCounters* counters = nullptr);

struct CensusOptions {
  int shards = 1;
  bool adjacency_prune = true;  // test hook; disabling must not change counts
  std::string checkpoint_path;  // empty disables checkpointing
  double checkpoint_interval_s = 30.0;
  std::function<void(std::uint64_t done, std::uint64_t total, std::uint64_t count)> on_progress;
};

struct CensusReport {
  int n = 0;
  std::uint64_t unique_count = 0;
  std::uint64_t nodes_visited = 0;
  std::uint64_t lp_calls = 0;
  std::uint64_t adjacency_prunes = 0;
  std::uint64_t work_units = 0;
  std::uint64_t resumed_units = 0;
  double elapsed_seconds = 0.0;
  std::string gamma;  // Gamma(n/2+1), 30 decimals
  std::string ratio;  // unique_count / Gamma(n/2+1), 30 decimals
};

// Exhaustive pruned count of unique configurations. Work units are the
// feasible depth-1/2 prefixes; results are independent of shard count.
CensusReport count_unique(int n, const CensusOptions& opts = {});

// ceil(log3 k): the decision-tree depth forced by k distinct outputs.
int lower_bound_from_count(const Integer& k);

}  // namespace subsums
