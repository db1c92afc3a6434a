#include "subsums/configurations.hpp"

#include <string>

#include "subsums/feasibility.hpp"

namespace subsums {

bool valid_configuration(const Configuration& cfg) {
  const int n = cfg.n();
  if (n < 1) return false;
  for (int len = 1; len <= n; ++len) {
    int p = cfg.p[len - 1];
    if (p < 1 || p > n - len + 1) return false;
  }
  return true;
}

void require_valid(const Configuration& cfg) {
  if (!valid_configuration(cfg)) throw std::invalid_argument("invalid configuration");
}

std::vector<Configuration> output_configurations(const Sequence& a, std::uint64_t product_guard) {
  const int n = static_cast<int>(a.size());
  if (n == 0) throw std::invalid_argument("output_configurations: empty sequence");

  // per-length maximizer sets, ascending starts
  std::vector<std::vector<int>> maximizers(n);
  for (int len = 1; len <= n; ++len) {
    Rational sum = 0;
    for (int k = 0; k < len; ++k) sum += a[k];
    Rational best = sum;
    std::vector<int> starts{1};
    for (int start = 2; start + len - 1 <= n; ++start) {
      sum += a[start + len - 2];
      sum -= a[start - 2];
      if (sum > best) {
        best = sum;
        starts.assign(1, start);
      } else if (sum == best) {
        starts.push_back(start);
      }
    }
    maximizers[len - 1] = std::move(starts);
  }

  std::uint64_t product = 1;
  for (const auto& s : maximizers) {
    product *= s.size();
    if (product > product_guard)
      throw resource_limit_error("output_configurations: maximizer product exceeds guard of " +
                                 std::to_string(product_guard));
  }

  std::vector<Configuration> out;
  out.reserve(product);
  std::vector<size_t> odo(n, 0);
  for (;;) {
    Configuration cfg;
    cfg.p.resize(n);
    for (int l = 0; l < n; ++l) cfg.p[l] = maximizers[l][odo[l]];
    out.push_back(std::move(cfg));
    int l = n - 1;
    while (l >= 0 && ++odo[l] == maximizers[l].size()) odo[l--] = 0;
    if (l < 0) break;
  }
  return out;
}

void append_level_rows(ConstraintSystem& sys, int n, int i, int j_winner) {
  for (int c = 1; c <= n - i + 1; ++c) {
    if (c == j_winner) continue;
    Constraint row;
    row.w.assign(n, 0);
    for (int t = j_winner; t < j_winner + i; ++t) row.w[t - 1] += 1;
    for (int t = c; t < c + i; ++t) row.w[t - 1] -= 1;
    row.length = i;
    row.challenger = c;
    sys.rows.push_back(std::move(row));
  }
}

ConstraintSystem build_inequalities(const Configuration& cfg, int i) {
  require_valid(cfg);
  const int n = cfg.n();
  if (i < 1 || i > n) throw std::invalid_argument("build_inequalities: level out of range");
  ConstraintSystem sys;
  sys.dim = n;
  if (i < n) append_level_rows(sys, n, i, cfg.p[i - 1]);
  return sys;
}

std::vector<std::pair<int, int>> nonadjacency_violations(std::span<const int> positions) {
  const int k = static_cast<int>(positions.size());
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= k; ++j)
      if (positions[j - 1] == positions[i - 1] + i) pairs.emplace_back(i, j);
  return pairs;
}

Uniqueness is_unique(const Configuration& cfg) {
  require_valid(cfg);
  const int n = cfg.n();

  Uniqueness out;
  out.adjacency_pairs = nonadjacency_violations(cfg.p);
  if (!out.adjacency_pairs.empty()) {
    out.unique = false;
    out.reason = Uniqueness::Reason::adjacency;
    return out;
  }

  ConstraintSystem sys;
  sys.dim = n;
  for (int i = 1; i <= n - 1; ++i) append_level_rows(sys, n, i, cfg.p[i - 1]);
  FeasibilityResult lp = strict_feasible(sys);
  if (lp.feasible) {
    out.unique = true;
    out.reason = Uniqueness::Reason::none;
    out.witness = std::move(lp.witness);
  } else {
    out.unique = false;
    out.reason = Uniqueness::Reason::infeasible_lp;
  }
  return out;
}

}  // namespace subsums
