#include "subsums/reductions.hpp"

#include <omp.h>

#include <sstream>
#include <stdexcept>

#include "subsums/rng.hpp"

namespace subsums {

ConvToMcspInstance conv_to_mcsp(const Sequence& x, const Sequence& y) {
  if (x.size() != y.size()) throw std::invalid_argument("conv_to_mcsp: length mismatch");
  if (x.empty()) throw std::invalid_argument("conv_to_mcsp: empty input");
  const int n = static_cast<int>(x.size()) - 1;

  Rational s = 1;
  for (const auto& v : x) s += abs(v);
  for (const auto& v : y) s += abs(v);

  ConvToMcspInstance inst;
  inst.n = n;
  inst.big_constant = s;
  inst.a.resize(2 * n + 4);
  for (int i = 1; i <= n; ++i) inst.a[i - 1] = x[n - i] - x[n + 1 - i];
  inst.a[n] = s;           // a_{n+1}
  inst.a[n + 1] = -x[0];   // a_{n+2}
  inst.a[n + 2] = -y[0];   // a_{n+3}
  inst.a[n + 3] = s;       // a_{n+4}
  for (int i = n + 5; i <= 2 * n + 4; ++i) inst.a[i - 1] = y[i - n - 5] - y[i - n - 4];
  return inst;
}

ConvolutionResult decode_conv(const ConvToMcspInstance& inst, const SubsumProfile& profile) {
  const int n = inst.n;
  if (static_cast<int>(profile.maxima.size()) != 2 * n + 4)
    throw std::invalid_argument("decode_conv: profile length mismatch");
  ConvolutionResult z(2 * n + 1);
  for (int k = 0; k <= 2 * n; ++k) z[k] = 2 * inst.big_constant - profile.maxima[k + 3];
  return z;
}

McspToConvInstance mcsp_to_conv(const Sequence& a) {
  if (a.empty()) throw std::invalid_argument("mcsp_to_conv: empty input");
  const int n = static_cast<int>(a.size());
  std::vector<Rational> prefix(n + 1);
  prefix[0] = 0;
  for (int i = 1; i <= n; ++i) prefix[i] = prefix[i - 1] + a[i - 1];

  McspToConvInstance inst;
  inst.n = n;
  inst.x.resize(n + 1);
  inst.y.resize(n + 1);
  for (int i = 0; i <= n; ++i) {
    inst.x[i] = prefix[n - i];
    inst.y[i] = -prefix[i];
  }
  return inst;
}

std::vector<Rational> decode_mcsp(const McspToConvInstance& inst, const ConvolutionResult& z) {
  const int n = inst.n;
  if (static_cast<int>(z.size()) != 2 * n + 1)
    throw std::invalid_argument("decode_mcsp: convolution length mismatch");
  std::vector<Rational> maxima(n);
  for (int l = 1; l <= n; ++l) maxima[l - 1] = -z[n + l];
  return maxima;
}

namespace {

Sequence random_sequence(SplitMix64& rng, int length) {
  Sequence s(length);
  for (auto& v : s) v = rng.rational(40, 8);
  return s;
}

EquivalenceTrial run_trial(std::uint64_t index, int max_n, std::uint64_t seed) {
  SplitMix64 rng = SplitMix64::stream(seed, index);
  EquivalenceTrial trial;
  trial.index = index;
  trial.pass = true;

  // conv -> mcsp -> decode against the naive convolution
  trial.conv_arity = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_n) + 1));
  Sequence x = random_sequence(rng, trial.conv_arity + 1);
  Sequence y = random_sequence(rng, trial.conv_arity + 1);
  ConvToMcspInstance inst = conv_to_mcsp(x, y);
  ConvolutionResult got = decode_conv(inst, mcsp_naive(inst.a));
  ConvolutionResult expect = minplus_conv(x, y);
  for (size_t k = 0; k < expect.size(); ++k) {
    if (got[k] != expect[k]) {
      trial.pass = false;
      std::ostringstream os;
      os << "conv->mcsp mismatch at k=" << k;
      trial.detail = os.str();
      break;
    }
  }

  // mcsp -> conv -> decode against the naive window scan
  trial.mcsp_length = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_n)));
  Sequence a = random_sequence(rng, trial.mcsp_length);
  McspToConvInstance inst2 = mcsp_to_conv(a);
  std::vector<Rational> maxima = decode_mcsp(inst2, minplus_conv(inst2.x, inst2.y));
  SubsumProfile profile = mcsp_naive(a);
  for (size_t l = 0; l < maxima.size(); ++l) {
    if (maxima[l] != profile.maxima[l]) {
      trial.pass = false;
      std::ostringstream os;
      os << (trial.detail.empty() ? "" : "; ") << "mcsp->conv mismatch at l=" << (l + 1);
      trial.detail += os.str();
      break;
    }
  }
  return trial;
}

}  // namespace

EquivalenceReport verify_equivalence(std::uint64_t trials, int max_n, std::uint64_t seed,
                                     int threads) {
  if (trials < 1) throw std::invalid_argument("verify_equivalence: trials must be >= 1");
  if (max_n < 1) throw std::invalid_argument("verify_equivalence: max_n must be >= 1");
  if (threads < 1) throw std::invalid_argument("verify_equivalence: threads must be >= 1");

  const double t0 = omp_get_wtime();
  EquivalenceReport rep;
  rep.trials = trials;
  rep.max_n = max_n;
  rep.seed = seed;
  rep.results.resize(trials);

#pragma omp parallel for schedule(dynamic, 4) num_threads(threads)
  for (long idx = 0; idx < static_cast<long>(trials); ++idx)
    rep.results[idx] = run_trial(static_cast<std::uint64_t>(idx), max_n, seed);

  for (const auto& t : rep.results)
    if (t.pass) ++rep.passes;
  rep.elapsed_seconds = omp_get_wtime() - t0;
  return rep;
}

}  // namespace subsums
