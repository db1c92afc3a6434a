#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "subsums/feasibility.hpp"
#include "subsums/rng.hpp"
#include "subsums/serial.hpp"

using namespace subsums;

namespace {

ConstraintSystem system_of(int dim, std::initializer_list<std::vector<int>> rows) {
  ConstraintSystem sys;
  sys.dim = dim;
  for (const auto& r : rows) sys.rows.push_back(Constraint{r, 0, 0});
  return sys;
}

ConstraintSystem full_system(const Configuration& cfg) {
  ConstraintSystem sys;
  sys.dim = cfg.n();
  for (int i = 1; i <= cfg.n() - 1; ++i) append_level_rows(sys, cfg.n(), i, cfg.p[i - 1]);
  return sys;
}

ConstraintSystem random_system(SplitMix64& rng, int dim, int rows) {
  ConstraintSystem sys;
  sys.dim = dim;
  while (static_cast<int>(sys.rows.size()) < rows) {
    std::vector<int> w(dim);
    bool nonzero = false;
    for (auto& c : w) {
      c = static_cast<int>(rng.below(3)) - 1;
      if (c != 0) nonzero = true;
    }
    if (!nonzero) continue;
    sys.rows.push_back(Constraint{std::move(w), 0, 0});
  }
  return sys;
}

void check_witness(const ConstraintSystem& sys, const std::vector<Rational>& a) {
  REQUIRE(static_cast<int>(a.size()) == sys.dim);
  for (const auto& row : sys.rows) {
    Rational dot = 0;
    for (int t = 0; t < sys.dim; ++t)
      if (row.w[t] != 0) dot += row.w[t] * a[t];
    CHECK(dot > 0);
  }
}

}  // namespace

TEST_CASE("one-row and antisymmetric systems") {
  FeasibilityResult one = strict_feasible(system_of(2, {{1, -1}}));
  CHECK(one.feasible);
  check_witness(system_of(2, {{1, -1}}), one.witness);
  CHECK(one.witness[0] > one.witness[1]);

  FeasibilityResult both = strict_feasible(system_of(2, {{1, -1}, {-1, 1}}));
  CHECK_FALSE(both.feasible);
}

TEST_CASE("empty system is feasible; bad rows are rejected") {
  ConstraintSystem empty;
  empty.dim = 3;
  CHECK(strict_feasible(empty).feasible);

  CHECK_THROWS_AS(strict_feasible(system_of(2, {{0, 0}})), std::invalid_argument);
  CHECK_THROWS_AS(strict_feasible(system_of(3, {{1, -1}})), std::invalid_argument);
}

TEST_CASE("the six-element counterexample system is infeasible") {
  Configuration cfg{{2, 4, 2, 1, 2, 1}};
  FeasibilityResult res = strict_feasible(full_system(cfg));
  CHECK_FALSE(res.feasible);
  // certificate is verified internally; spot-check it is exposed
  CHECK(res.certificate.size() == full_system(cfg).rows.size());
}

TEST_CASE("scaling a witness preserves feasibility") {
  Configuration cfg{{3, 5, 1, 3, 2, 1}};
  ConstraintSystem sys = full_system(cfg);
  FeasibilityResult res = strict_feasible(sys);
  REQUIRE(res.feasible);
  std::vector<Rational> doubled(res.witness);
  for (auto& v : doubled) v *= 2;
  check_witness(sys, doubled);
}

TEST_CASE("identical systems give identical verdicts and witnesses") {
  SplitMix64 rng(17);
  for (int t = 0; t < 100; ++t) {
    ConstraintSystem sys = random_system(rng, 2 + static_cast<int>(rng.below(5)),
                                         1 + static_cast<int>(rng.below(10)));
    FeasibilityResult a = strict_feasible(sys);
    FeasibilityResult b = strict_feasible(sys);
    CHECK(a.feasible == b.feasible);
    CHECK(a.witness == b.witness);
    CHECK(a.certificate == b.certificate);
  }
}

TEST_CASE("production and reference engines agree on random systems") {
  SplitMix64 rng(23);
  int feasible_seen = 0, infeasible_seen = 0;
  for (int t = 0; t < 300; ++t) {
    ConstraintSystem sys = random_system(rng, 2 + static_cast<int>(rng.below(5)),
                                         1 + static_cast<int>(rng.below(12)));
    FeasibilityResult fast = strict_feasible(sys);
    FeasibilityResult ref = serial::strict_feasible(sys);
    CHECK(fast.feasible == ref.feasible);
    if (fast.feasible) {
      ++feasible_seen;
      check_witness(sys, fast.witness);
      check_witness(sys, ref.witness);
    } else {
      ++infeasible_seen;
    }
  }
  CHECK(feasible_seen > 0);
  CHECK(infeasible_seen > 0);
}

TEST_CASE("grid oracle: whenever small witnesses exist, the solver agrees") {
  SplitMix64 rng(29);
  int grid_hits = 0;
  for (int t = 0; t < 60; ++t) {
    ConstraintSystem sys = random_system(rng, 2 + static_cast<int>(rng.below(3)),
                                         1 + static_cast<int>(rng.below(6)));
    auto grid = oracle::grid_witness(sys, 2, 2);
    FeasibilityResult res = strict_feasible(sys);
    if (grid) {
      ++grid_hits;
      CHECK(res.feasible);
    }
    if (!res.feasible) CHECK_FALSE(grid.has_value());
  }
  CHECK(grid_hits > 0);
}

TEST_CASE("pivot counts stay under the basis-count bound") {
  SplitMix64 rng(31);
  for (int t = 0; t < 50; ++t) {
    int dim = 2 + static_cast<int>(rng.below(5));
    int rows = 1 + static_cast<int>(rng.below(12));
    ConstraintSystem sys = random_system(rng, dim, rows);
    FeasibilityResult res = strict_feasible(sys);
    // choose(columns, basis rows) with columns = rows + dim + 2
    Integer bound;
    mpz_bin_uiui(bound.get_mpz_t(), static_cast<unsigned long>(rows + dim + 2),
                 static_cast<unsigned long>(dim + 1));
    CHECK(Integer(res.pivots) <= bound);
  }
}

TEST_CASE("census-style systems exercise the int64 fast path") {
  Configuration cfg{{3, 5, 1, 3, 2, 1}};
  FeasibilityResult res = strict_feasible(full_system(cfg));
  CHECK(res.feasible);
  CHECK_FALSE(res.used_bignum);
}
