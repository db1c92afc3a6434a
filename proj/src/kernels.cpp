#include "subsums/kernels.hpp"

#include <stdexcept>

namespace subsums {

SubsumProfile mcsp_naive(const Sequence& a) {
  const int n = static_cast<int>(a.size());
  if (n == 0) throw std::invalid_argument("mcsp_naive: empty sequence");

  SubsumProfile out;
  out.maxima.resize(n);
  out.positions.resize(n);

#pragma omp parallel for schedule(dynamic) if (n >= 96)
  for (int len = 1; len <= n; ++len) {
    Rational sum = 0;
    for (int k = 0; k < len; ++k) sum += a[k];
    Rational best = sum;
    int best_start = 1;
    for (int start = 2; start + len - 1 <= n; ++start) {
      sum += a[start + len - 2];
      sum -= a[start - 2];
      if (sum > best) {
        best = sum;
        best_start = start;  // strict '>' keeps the smallest tied start
      }
    }
    out.maxima[len - 1] = best;
    out.positions[len - 1] = best_start;
  }
  return out;
}

ConvolutionResult minplus_conv(const Sequence& x, const Sequence& y) {
  if (x.size() != y.size()) throw std::invalid_argument("minplus_conv: length mismatch");
  if (x.empty()) throw std::invalid_argument("minplus_conv: empty input");
  const int n = static_cast<int>(x.size()) - 1;
  ConvolutionResult z(2 * n + 1);

#pragma omp parallel for schedule(dynamic) if (n >= 96)
  for (int k = 0; k <= 2 * n; ++k) {
    const int lo = std::max(0, k - n);
    const int hi = std::min(n, k);
    Rational best = x[lo] + y[k - lo];
    for (int i = lo + 1; i <= hi; ++i) {
      Rational cand = x[i] + y[k - i];
      if (cand < best) best = cand;
    }
    z[k] = best;
  }
  return z;
}

ConvolutionResult maxplus_conv(const Sequence& x, const Sequence& y) {
  Sequence nx(x.size()), ny(y.size());
  for (size_t i = 0; i < x.size(); ++i) nx[i] = -x[i];
  for (size_t i = 0; i < y.size(); ++i) ny[i] = -y[i];
  ConvolutionResult z = minplus_conv(nx, ny);
  for (auto& v : z) v = -v;
  return z;
}

}  // namespace subsums
