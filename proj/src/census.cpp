#include "subsums/census.hpp"

#include <omp.h>

#include <fstream>
#include <json.hpp>
#include <map>
#include <optional>
#include <stdexcept>

#include "subsums/halfgamma.hpp"

namespace subsums {

namespace {

using nlohmann::json;

constexpr int kCheckpointVersion = 1;

bool adjacent_to_fixed(std::span<const int> prefix, int i, int j) {
  for (int k = 1; k < i; ++k) {
    const int pk = prefix[k - 1];
    if (pk + k == j || j + i == pk) return true;
  }
  return false;
}

struct Worker {
  int n = 0;
  bool adjacency_prune = true;
  FeasibilitySolver solver;
  ConstraintSystem sys;
  std::vector<int> prefix;
  CensusCounters counters;

  void reset(int n_, bool prune) {
    n = n_;
    adjacency_prune = prune;
    sys.dim = n_;
    sys.rows.clear();
    prefix.clear();
    counters = CensusCounters{};
  }

  // Rebuilds the incremental system for the current prefix.
  void load_prefix(std::span<const int> p) {
    prefix.assign(p.begin(), p.end());
    sys.rows.clear();
    for (int lvl = 1; lvl <= static_cast<int>(prefix.size()); ++lvl)
      append_level_rows(sys, n, lvl, prefix[lvl - 1]);
  }

  // Gate for p_i := j on top of the current prefix (level i == prefix+1).
  // On success the level-i rows stay appended; caller pops them via mark.
  bool gate(int i, int j, size_t& mark) {
    if (adjacency_prune && adjacent_to_fixed(prefix, i, j)) {
      ++counters.adjacency_prunes;
      return false;
    }
    mark = sys.rows.size();
    append_level_rows(sys, n, i, j);
    ++counters.lp_calls;
    if (!solver.solve(sys).feasible) {
      sys.rows.resize(mark);
      return false;
    }
    ++counters.nodes_visited;
    return true;
  }

  std::uint64_t dfs(int i) {
    if (i > n) return 1;
    std::uint64_t total = 0;
    for (int j = 1; j <= n - i + 1; ++j) {
      size_t mark = 0;
      if (!gate(i, j, mark)) continue;
      prefix.push_back(j);
      total += dfs(i + 1);
      prefix.pop_back();
      sys.rows.resize(mark);
    }
    return total;
  }
};

struct UnitResult {
  std::uint64_t unique_count = 0;
  CensusCounters counters;
};

void enumerate_units(Worker& w, int depth, int i, std::vector<std::vector<int>>& out) {
  if (i > depth) {
    out.push_back(w.prefix);
    return;
  }
  for (int j = 1; j <= w.n - i + 1; ++j) {
    size_t mark = 0;
    if (!w.gate(i, j, mark)) continue;
    w.prefix.push_back(j);
    enumerate_units(w, depth, i + 1, out);
    w.prefix.pop_back();
    w.sys.rows.resize(mark);
  }
}

json checkpoint_to_json(int n, int depth, bool prune, const std::vector<std::vector<int>>& units,
                        const std::vector<std::optional<UnitResult>>& results) {
  json out;
  out["format_version"] = kCheckpointVersion;
  out["n"] = n;
  out["depth"] = depth;
  out["adjacency_prune"] = prune;
  json arr = json::array();
  for (size_t idx = 0; idx < units.size(); ++idx) {
    if (!results[idx]) continue;
    json u;
    u["prefix"] = units[idx];
    u["unique_count"] = results[idx]->unique_count;
    u["nodes_visited"] = results[idx]->counters.nodes_visited;
    u["lp_calls"] = results[idx]->counters.lp_calls;
    u["adjacency_prunes"] = results[idx]->counters.adjacency_prunes;
    arr.push_back(std::move(u));
  }
  out["units"] = std::move(arr);
  return out;
}

void write_checkpoint(const std::string& path, const json& doc) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw std::ios_base::failure("cannot write checkpoint: " + tmp);
    out << doc.dump(1) << "\n";
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw std::ios_base::failure("cannot move checkpoint into place: " + path);
}

}  // namespace

bool is_feasible_extension(std::span<const int> prefix, int n, int i, int j,
                           FeasibilitySolver& solver, CensusCounters* counters) {
  if (i != static_cast<int>(prefix.size()) + 1 || i < 1 || i > n)
    throw std::invalid_argument("is_feasible_extension: level does not extend the prefix");
  if (j < 1 || j > n - i + 1) throw std::invalid_argument("is_feasible_extension: position out of range");
  for (int k = 1; k < i; ++k)
    if (prefix[k - 1] < 1 || prefix[k - 1] > n - k + 1)
      throw std::invalid_argument("is_feasible_extension: invalid prefix");

  if (adjacent_to_fixed(prefix, i, j)) {
    if (counters) ++counters->adjacency_prunes;
    return false;
  }
  ConstraintSystem sys;
  sys.dim = n;
  for (int lvl = 1; lvl < i; ++lvl) append_level_rows(sys, n, lvl, prefix[lvl - 1]);
  append_level_rows(sys, n, i, j);
  if (counters) ++counters->lp_calls;
  bool ok = solver.solve(sys).feasible;
  if (ok && counters) ++counters->nodes_visited;
  return ok;
}

CensusReport count_unique(int n, const CensusOptions& opts) {
  if (n < 1) throw std::invalid_argument("count_unique: n must be >= 1");
  if (opts.shards < 1) throw std::invalid_argument("count_unique: shards must be >= 1");

  const double t0 = omp_get_wtime();
  const int depth = std::min(n, n >= 5 ? 2 : 1);

  CensusReport report;
  report.n = n;

  // deterministic unit list from the same gating as the full search
  Worker root;
  root.reset(n, opts.adjacency_prune);
  std::vector<std::vector<int>> units;
  enumerate_units(root, depth, 1, units);
  report.work_units = units.size();
  CensusCounters totals = root.counters;

  std::vector<std::optional<UnitResult>> results(units.size());

  // resume completed units from the checkpoint, if any
  if (!opts.checkpoint_path.empty()) {
    std::ifstream in(opts.checkpoint_path);
    if (in) {
      json doc = json::parse(in);
      if (doc.value("format_version", -1) != kCheckpointVersion || doc.value("n", -1) != n ||
          doc.value("depth", -1) != depth ||
          doc.value("adjacency_prune", !opts.adjacency_prune) != opts.adjacency_prune)
        throw std::invalid_argument("checkpoint does not match this census run: " + opts.checkpoint_path);
      std::map<std::vector<int>, size_t> index;
      for (size_t idx = 0; idx < units.size(); ++idx) index[units[idx]] = idx;
      for (const auto& u : doc["units"]) {
        auto it = index.find(u["prefix"].get<std::vector<int>>());
        if (it == index.end())
          throw std::invalid_argument("checkpoint names an unknown work unit");
        UnitResult r;
        r.unique_count = u["unique_count"].get<std::uint64_t>();
        r.counters.nodes_visited = u["nodes_visited"].get<std::uint64_t>();
        r.counters.lp_calls = u["lp_calls"].get<std::uint64_t>();
        r.counters.adjacency_prunes = u["adjacency_prunes"].get<std::uint64_t>();
        results[it->second] = r;
        ++report.resumed_units;
      }
    }
  }

  std::uint64_t done = report.resumed_units;
  std::uint64_t running_count = 0;
  for (const auto& r : results)
    if (r) running_count += r->unique_count;
  double last_flush = omp_get_wtime();

#pragma omp parallel num_threads(opts.shards)
  {
    Worker w;
    w.reset(n, opts.adjacency_prune);
#pragma omp for schedule(dynamic)
    for (long idx = 0; idx < static_cast<long>(units.size()); ++idx) {
      if (results[idx]) continue;
      w.counters = CensusCounters{};
      w.load_prefix(units[idx]);
      UnitResult r;
      r.unique_count = w.dfs(depth + 1);
      r.counters = w.counters;
      results[idx] = r;
#pragma omp critical(census_io)
      {
        ++done;
        running_count += r.unique_count;
        if (opts.on_progress) opts.on_progress(done, units.size(), running_count);
        if (!opts.checkpoint_path.empty()) {
          double now = omp_get_wtime();
          if (now - last_flush >= opts.checkpoint_interval_s || done == units.size()) {
            write_checkpoint(opts.checkpoint_path,
                             checkpoint_to_json(n, depth, opts.adjacency_prune, units, results));
            last_flush = now;
          }
        }
      }
    }
  }

  for (const auto& r : results) {
    report.unique_count += r->unique_count;
    totals += r->counters;
  }
  report.nodes_visited = totals.nodes_visited;
  report.lp_calls = totals.lp_calls;
  report.adjacency_prunes = totals.adjacency_prunes;
  report.elapsed_seconds = omp_get_wtime() - t0;

  HalfGamma g = gamma_half_factorial(n);
  report.gamma = gamma_decimal(g);
  report.ratio = ratio_decimal(Integer(static_cast<unsigned long>(report.unique_count)), g);
  return report;
}

int lower_bound_from_count(const Integer& k) {
  if (k < 1) throw std::invalid_argument("lower_bound_from_count: count must be >= 1");
  int depth = 0;
  Integer pow = 1;
  while (pow < k) {
    pow *= 3;
    ++depth;
  }
  return depth;
}

}  // namespace subsums
