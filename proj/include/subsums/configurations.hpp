#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "subsums/kernels.hpp"
#include "subsums/sequence.hpp"

namespace subsums {

// Output configuration P = (p_1..p_n): p[l-1] is the 1-based start of a
// maximum window of length l, so 1 <= p_l <= n-l+1 and p_n == 1.
struct Configuration {
  std::vector<int> p;

  int n() const { return static_cast<int>(p.size()); }
  auto operator<=>(const Configuration&) const = default;
};

bool valid_configuration(const Configuration& cfg);
void require_valid(const Configuration& cfg);

// One strict inequality w·a > 0 with coefficients in {-1,0,+1}: +1 on the
// winner window, -1 on the challenger, overlap cancels. (length, challenger)
// records which comparison produced the row.
struct Constraint {
  std::vector<int> w;
  int length = 0;
  int challenger = 0;
};

struct ConstraintSystem {
  int dim = 0;
  std::vector<Constraint> rows;
};

// Thrown when the maximizer-set product exceeds the enumeration guard.
class resource_limit_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// All output configurations of a: the Cartesian product of per-length
// maximizer sets. Guarded by the product bound (default 10^6).
std::vector<Configuration> output_configurations(const Sequence& a,
                                                 std::uint64_t product_guard = 1000000);

// The n-i rows comparing the length-i window at p_i against every other
// start j != p_i.
ConstraintSystem build_inequalities(const Configuration& cfg, int i);

// Appends the rows of the level-i comparison with p_i := j; shared by
// is_unique, the census and the estimator.
void append_level_rows(ConstraintSystem& sys, int n, int i, int j);

// Ordered pairs (i, j) over the fixed positions with p_j = p_i + i. The
// prefix view holds p_1..p_k for some k <= n; full configurations pass all n.
std::vector<std::pair<int, int>> nonadjacency_violations(std::span<const int> positions);

struct Uniqueness {
  enum class Reason { none, adjacency, infeasible_lp };

  bool unique = false;
  Reason reason = Reason::none;
  std::vector<Rational> witness;                    // present iff unique
  std::vector<std::pair<int, int>> adjacency_pairs;  // present iff reason==adjacency
};

// Decides whether some input has cfg as its only output configuration:
// adjacency screen first, then exact feasibility of Q(P,1..n-1).
Uniqueness is_unique(const Configuration& cfg);

}  // namespace subsums
