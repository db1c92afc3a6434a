#include "subsums/serial.hpp"

#include <stdexcept>

namespace subsums::serial {

SubsumProfile mcsp_naive(const Sequence& a) {
  const int n = static_cast<int>(a.size());
  if (n == 0) throw std::invalid_argument("mcsp_naive: empty sequence");
  SubsumProfile out;
  out.maxima.resize(n);
  out.positions.resize(n);
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
        best_start = start;
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

// Phase-1 primal simplex over mpq on W(u-v) - s + z = 1. Columns are laid
// out u_0..u_{n-1}, v_0..v_{n-1}, s_0..s_{m-1}, z_0..z_{m-1}, rhs; the
// objective (min sum z) sits in the extra row. Artificials never re-enter.
FeasibilityResult strict_feasible(const ConstraintSystem& sys) {
  const int n = sys.dim;
  const int m = static_cast<int>(sys.rows.size());
  for (const auto& row : sys.rows)
    if (static_cast<int>(row.w.size()) != n)
      throw std::invalid_argument("strict_feasible: row dimension mismatch");

  FeasibilityResult res;
  if (m == 0) {
    res.feasible = true;
    res.witness.assign(n, Rational(0));
    return res;
  }

  const int cols = 2 * n + 2 * m + 1;
  const int rhs = cols - 1;
  const int art0 = 2 * n + m;
  std::vector<std::vector<Rational>> tab(m + 1, std::vector<Rational>(cols, Rational(0)));
  std::vector<int> basis(m);

  for (int r = 0; r < m; ++r) {
    for (int t = 0; t < n; ++t) {
      tab[r][t] = sys.rows[r].w[t];
      tab[r][n + t] = -sys.rows[r].w[t];
    }
    tab[r][2 * n + r] = -1;
    tab[r][art0 + r] = 1;
    tab[r][rhs] = 1;
    basis[r] = art0 + r;
  }
  // reduced costs with the all-artificial basis
  for (int j = 0; j < cols; ++j) {
    Rational acc = 0;
    for (int r = 0; r < m; ++r) acc += tab[r][j];
    tab[m][j] = (j >= art0 && j < art0 + m ? Rational(0) : -acc);
  }

  long pivots = 0;
  for (;;) {
    int enter = -1;
    for (int j = 0; j < art0; ++j) {  // Bland: least index, artificials excluded
      if (tab[m][j] < 0) {
        enter = j;
        break;
      }
    }
    if (enter < 0) break;

    int leave = -1;
    for (int r = 0; r < m; ++r) {
      if (tab[r][enter] <= 0) continue;
      if (leave < 0) {
        leave = r;
        continue;
      }
      Rational cur = tab[r][rhs] * tab[leave][enter];
      Rational best = tab[leave][rhs] * tab[r][enter];
      if (cur < best || (cur == best && basis[r] < basis[leave])) leave = r;
    }
    if (leave < 0) throw std::logic_error("strict_feasible: phase-1 unbounded");

    Rational piv = tab[leave][enter];
    for (int j = 0; j < cols; ++j) tab[leave][j] /= piv;
    for (int r = 0; r <= m; ++r) {
      if (r == leave) continue;
      if (tab[r][enter] == 0) continue;
      Rational f = tab[r][enter];
      for (int j = 0; j < cols; ++j) tab[r][j] -= f * tab[leave][j];
    }
    basis[leave] = enter;
    ++pivots;
  }

  res.pivots = pivots;
  Rational optimum = -tab[m][rhs];
  if (optimum == 0) {
    res.feasible = true;
    std::vector<Rational> u(n, Rational(0)), v(n, Rational(0));
    for (int r = 0; r < m; ++r) {
      if (basis[r] < n)
        u[basis[r]] = tab[r][rhs];
      else if (basis[r] < 2 * n)
        v[basis[r] - n] = tab[r][rhs];
    }
    res.witness.resize(n);
    for (int t = 0; t < n; ++t) res.witness[t] = u[t] - v[t];
    for (const auto& row : sys.rows) {
      Rational dot = 0;
      for (int t = 0; t < n; ++t)
        if (row.w[t] != 0) dot += row.w[t] * res.witness[t];
      if (!(dot >= 1)) throw std::logic_error("strict_feasible: witness verification failed");
    }
  } else {
    res.feasible = false;
  }
  return res;
}

}  // namespace subsums::serial
