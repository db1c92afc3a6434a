#include "subsums/family.hpp"

#include <omp.h>

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace subsums {

FamilyInstance gen_instance(int n, std::span<const int> subset) {
  if (n < 5) throw std::invalid_argument("gen_instance: n must be >= 5");
  std::vector<int> s(subset.begin(), subset.end());
  std::sort(s.begin(), s.end());
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 4 || s[i] > n) throw std::invalid_argument("gen_instance: subset element outside {4..n}");
    if (i > 0 && s[i] == s[i - 1]) throw std::invalid_argument("gen_instance: duplicate subset element");
  }
  std::vector<bool> in_s(n + 3, false);
  for (int v : s) in_s[v] = true;

  FamilyInstance inst;
  inst.n = n;
  inst.subset = std::move(s);
  inst.a.resize(n);
  for (int i = 1; i <= n; ++i) {
    if (i == 1)
      inst.a[i - 1] = 0;
    else if (i == 2)
      inst.a[i - 1] = 2;
    else if (i == 3)
      inst.a[i - 1] = 4 * n;
    else
      inst.a[i - 1] = in_s[i] ? 1 : 3;
  }
  inst.cfg.p.resize(n);
  for (int j = 1; j <= n; ++j) {
    if (j <= n - 2)
      inst.cfg.p[j - 1] = in_s[j + 2] ? 2 : 3;
    else
      inst.cfg.p[j - 1] = n - j + 1;
  }
  return inst;
}

FamilyReport verify_family(int n, int threads) {
  if (n < 5) throw std::invalid_argument("verify_family: n must be >= 5");
  if (n > 20) throw std::invalid_argument("verify_family: n > 20 exceeds the enumeration guard");
  if (threads < 1) throw std::invalid_argument("verify_family: threads must be >= 1");

  const double t0 = omp_get_wtime();
  const std::uint64_t count = std::uint64_t{1} << (n - 3);

  FamilyReport rep;
  rep.n = n;
  rep.instances = count;

  std::vector<char> ok(count, 0);
  std::vector<Configuration> cfgs(count);

#pragma omp parallel for schedule(dynamic, 8) num_threads(threads)
  for (long mask = 0; mask < static_cast<long>(count); ++mask) {
    std::vector<int> subset;
    for (int b = 0; b < n - 3; ++b)
      if (mask & (1L << b)) subset.push_back(4 + b);
    FamilyInstance inst = gen_instance(n, subset);
    auto configs = output_configurations(inst.a);
    bool pass = configs.size() == 1 && configs.front() == inst.cfg;
    if (pass) pass = is_unique(inst.cfg).unique;
    ok[mask] = pass ? 1 : 0;
    cfgs[mask] = std::move(inst.cfg);
  }

  std::set<Configuration> distinct;
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    if (ok[mask]) {
      ++rep.passed;
    } else {
      std::ostringstream os;
      os << "S={";
      bool first = true;
      for (int b = 0; b < n - 3; ++b)
        if (mask & (1ULL << b)) {
          os << (first ? "" : ",") << (4 + b);
          first = false;
        }
      os << "}";
      rep.failures.push_back(os.str());
    }
    distinct.insert(cfgs[mask]);
  }
  rep.all_distinct = distinct.size() == count;
  rep.elapsed_seconds = omp_get_wtime() - t0;
  return rep;
}

}  // namespace subsums
