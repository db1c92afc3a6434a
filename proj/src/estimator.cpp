#include "subsums/estimator.hpp"

#include <omp.h>

#include <stdexcept>

namespace subsums {

namespace {

bool adjacent_to_fixed(std::span<const int> prefix, int i, int j) {
  for (int k = 1; k < i; ++k) {
    const int pk = prefix[k - 1];
    if (pk + k == j || j + i == pk) return true;
  }
  return false;
}

}  // namespace

Sample branching_product(int n, SplitMix64 rng) {
  if (n < 1) throw std::invalid_argument("branching_product: n must be >= 1");

  FeasibilitySolver solver;
  ConstraintSystem sys;
  sys.dim = n;
  std::vector<int> prefix;
  std::vector<int> feasible;

  Sample s;
  s.x = 1;
  for (int i = 1; i <= n; ++i) {
    feasible.clear();
    for (int j = 1; j <= n - i + 1; ++j) {
      if (adjacent_to_fixed(prefix, i, j)) continue;
      size_t mark = sys.rows.size();
      append_level_rows(sys, n, i, j);
      bool ok = solver.solve(sys).feasible;
      sys.rows.resize(mark);
      if (ok) feasible.push_back(j);
    }
    if (feasible.empty()) {
      s.x = 0;
      s.branching.push_back(0);
      s.path.clear();
      s.completed = false;
      return s;
    }
    const int b = static_cast<int>(feasible.size());
    s.branching.push_back(b);
    s.x *= b;
    const int pick = feasible[rng.below(static_cast<std::uint64_t>(b))];
    append_level_rows(sys, n, i, pick);
    prefix.push_back(pick);
  }
  s.path = std::move(prefix);
  s.completed = true;
  return s;
}

EstimateResult estimate(int n, std::uint64_t k, std::uint64_t seed, int threads) {
  if (n < 1) throw std::invalid_argument("estimate: n must be >= 1");
  if (k < 1) throw std::invalid_argument("estimate: sample count must be >= 1");
  if (threads < 1) throw std::invalid_argument("estimate: threads must be >= 1");

  EstimateResult out;
  out.n = n;
  out.k = k;
  out.seed = seed;
  out.samples.resize(k);

#pragma omp parallel for schedule(dynamic, 16) num_threads(threads)
  for (long idx = 0; idx < static_cast<long>(k); ++idx)
    out.samples[idx] = branching_product(n, SplitMix64::stream(seed, static_cast<std::uint64_t>(idx)));

  Integer total = 0;
  for (const auto& s : out.samples) total += s.x;
  out.mean = Rational(total, Integer(static_cast<unsigned long>(k)));
  out.mean.canonicalize();
  return out;
}

MarkovReport markov_test(const std::vector<Sample>& samples, int n) {
  if (samples.empty()) throw std::invalid_argument("markov_test: no samples");

  MarkovReport rep;
  rep.n = n;
  rep.k = samples.size();
  Integer total = 0;
  rep.max_x = 0;
  for (const auto& s : samples) {
    total += s.x;
    if (s.x > rep.max_x) rep.max_x = s.x;
  }
  rep.mean = Rational(total, Integer(static_cast<unsigned long>(samples.size())));
  rep.mean.canonicalize();

  rep.bound = gamma_half_factorial(n);
  rep.c = floor_quotient(rep.max_x, rep.bound);
  rep.confidence_defined = rep.c >= 1;
  if (rep.confidence_defined) {
    rep.confidence_single = Rational(Integer(rep.c - 1), rep.c);
    rep.confidence_single.canonicalize();
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), Integer(rep.c - 1).get_mpz_t(), static_cast<unsigned long>(rep.k));
    mpz_pow_ui(den.get_mpz_t(), rep.c.get_mpz_t(), static_cast<unsigned long>(rep.k));
    rep.confidence_joint = Rational(num, den);
    rep.confidence_joint.canonicalize();
  }
  rep.rejected = rep.c >= 2;
  return rep;
}

}  // namespace subsums
