#include "subsums/feasibility.hpp"

#include <cassert>
#include <cstdlib>
#include <stdexcept>
#include <vector>

namespace subsums {

// strict_feasible decides {W a > 0} through the Farkas dual of the scaled
// system {W a >= 1}: exactly one of
//   (1) some a satisfies W a >= 1,
//   (2) some y >= 0 satisfies W^T y = 0 and sum(y) = 1
// holds. (2) is decided by Phase-1 simplex on an (n+1)-row tableau, which
// for the window systems here is far smaller than the m-row primal. When
// Phase-1 bottoms out above zero, the dual multipliers pi of its optimal
// basis satisfy W(-pi_{0..n-1}) >= pi_n * 1 with pi_n > 0, so
// a = -pi_{0..n-1}/pi_n solves (1).
//
// The tableau is kept as integers over a common positive denominator
// (fraction-free pivoting): a pivot on (r,e) maps entry (i,j) to
// (t[i][j]*t[r][e] - t[i][e]*t[r][j]) / den with exact division, and the
// new denominator is the pivot element. Entries are minors of the original
// {-1,0,+1} system, so an int64 tableau almost always suffices; overflow
// aborts the run and the same pivot sequence is replayed on GMP integers.

namespace {

struct Overflow {};

constexpr long long kLimit = (1LL << 62);

inline long long combine(long long a, long long piv, long long b, long long c, long long den) {
  __int128 t = static_cast<__int128>(a) * piv - static_cast<__int128>(b) * c;
  __int128 q = t / den;
  assert(t % den == 0);
  if (q >= kLimit || q <= -kLimit) throw Overflow{};
  return static_cast<long long>(q);
}

inline Integer combine(const Integer& a, const Integer& piv, const Integer& b, const Integer& c,
                       const Integer& den) {
  Integer t = a * piv - b * c;
  Integer q;
  mpz_divexact(q.get_mpz_t(), t.get_mpz_t(), den.get_mpz_t());
  return q;
}

// ratio a1/b1 < a2/b2 with b1,b2 > 0
inline bool ratio_less(long long a1, long long b1, long long a2, long long b2) {
  return static_cast<__int128>(a1) * b2 < static_cast<__int128>(a2) * b1;
}

inline bool ratio_less(const Integer& a1, const Integer& b1, const Integer& a2, const Integer& b2) {
  return a1 * b2 < a2 * b1;
}

inline Rational to_rational(long long v, long long den) {
  Rational r(static_cast<long>(v), static_cast<long>(den));
  r.canonicalize();
  return r;
}

inline Rational to_rational(const Integer& v, const Integer& den) {
  Rational r(v, den);
  r.canonicalize();
  return r;
}

template <typename Z>
struct RawSolution {
  bool feasible = false;
  std::vector<Z> values;  // pi (n+1) when feasible, y (m) when not
  Z den;
  long pivots = 0;
};

// Phase-1 on [ W^T | I ] y,z = (0..0,1), minimizing sum(z). Bland's least
// index rule everywhere; artificial columns never re-enter.
template <typename Z>
RawSolution<Z> phase_one(const ConstraintSystem& sys) {
  const int n = sys.dim;
  const int m = static_cast<int>(sys.rows.size());
  const int rows = n + 1;            // constraint rows
  const int obj = rows;              // objective row index
  const int cols = m + rows + 1;     // y columns, artificials, rhs
  const int rhs = cols - 1;
  const int art0 = m;

  std::vector<Z> tab(static_cast<size_t>(rows + 1) * cols, Z(0));
  auto at = [&](int r, int c) -> Z& { return tab[static_cast<size_t>(r) * cols + c]; };
  std::vector<int> basis(rows);

  for (int j = 0; j < m; ++j) {
    const auto& w = sys.rows[j].w;
    for (int t = 0; t < n; ++t) at(t, j) = Z(w[t]);
    at(n, j) = Z(1);
  }
  for (int t = 0; t < rows; ++t) {
    at(t, art0 + t) = Z(1);
    basis[t] = art0 + t;
  }
  at(n, rhs) = Z(1);
  for (int j = 0; j < m; ++j) {
    Z acc(0);
    for (int t = 0; t < rows; ++t) acc += at(t, j);
    at(obj, j) = -acc;
  }
  at(obj, rhs) = Z(-1);

  Z den(1);
  long pivots = 0;
  const long pivot_cap = 100000 + 200L * (m + rows);

  for (;;) {
    int enter = -1;
    for (int j = 0; j < m; ++j) {
      if (at(obj, j) < 0) {
        enter = j;
        break;
      }
    }
    if (enter < 0) break;

    int leave = -1;
    for (int t = 0; t < rows; ++t) {
      if (!(at(t, enter) > 0)) continue;
      if (leave < 0 || ratio_less(at(t, rhs), at(t, enter), at(leave, rhs), at(leave, enter)) ||
          (!ratio_less(at(leave, rhs), at(leave, enter), at(t, rhs), at(t, enter)) &&
           basis[t] < basis[leave])) {
        leave = t;
      }
    }
    if (leave < 0) throw std::logic_error("strict_feasible: phase-1 column unbounded");

    const Z piv = at(leave, enter);
    for (int i = 0; i <= rows; ++i) {
      if (i == leave) continue;
      const Z fac = at(i, enter);
      for (int j = 0; j < cols; ++j) {
        if (j == enter) continue;
        at(i, j) = combine(at(i, j), piv, fac, at(leave, j), den);
      }
      at(i, enter) = Z(0);
    }
    den = piv;
    basis[leave] = enter;
    if (++pivots > pivot_cap) throw std::logic_error("strict_feasible: pivot cap exceeded");
  }

  RawSolution<Z> out;
  out.den = den;
  out.pivots = pivots;
  if (at(obj, rhs) == 0) {
    // dual system solvable: primal infeasible, read off y
    out.feasible = false;
    out.values.assign(m, Z(0));
    for (int t = 0; t < rows; ++t)
      if (basis[t] < m) out.values[basis[t]] = at(t, rhs);
  } else {
    // pi_t = 1 - reduced_cost(artificial t); stored scaled by den
    out.feasible = true;
    out.values.resize(rows);
    for (int t = 0; t < rows; ++t) out.values[t] = den - at(obj, art0 + t);
  }
  return out;
}

template <typename Z>
FeasibilityResult finish(const ConstraintSystem& sys, RawSolution<Z>&& raw) {
  const int n = sys.dim;
  const int m = static_cast<int>(sys.rows.size());
  FeasibilityResult res;
  res.pivots = raw.pivots;
  res.feasible = raw.feasible;

  if (raw.feasible) {
    // a = -pi_{0..n-1} / pi_n
    Rational pi_n = to_rational(raw.values[n], raw.den);
    if (!(pi_n > 0)) throw std::logic_error("strict_feasible: nonpositive phase-1 optimum");
    res.witness.resize(n);
    for (int t = 0; t < n; ++t) res.witness[t] = -to_rational(raw.values[t], raw.den) / pi_n;
    for (const auto& row : sys.rows) {
      Rational dot = 0;
      for (int t = 0; t < n; ++t)
        if (row.w[t] != 0) dot += row.w[t] * res.witness[t];
      if (!(dot >= 1)) throw std::logic_error("strict_feasible: witness verification failed");
    }
  } else {
    res.certificate.resize(m);
    Rational total = 0;
    for (int j = 0; j < m; ++j) {
      res.certificate[j] = to_rational(raw.values[j], raw.den);
      if (res.certificate[j] < 0) throw std::logic_error("strict_feasible: negative certificate entry");
      total += res.certificate[j];
    }
    if (total != 1) throw std::logic_error("strict_feasible: certificate not normalized");
    for (int t = 0; t < n; ++t) {
      Rational dot = 0;
      for (int j = 0; j < m; ++j)
        if (sys.rows[j].w[t] != 0) dot += sys.rows[j].w[t] * res.certificate[j];
      if (dot != 0) throw std::logic_error("strict_feasible: certificate verification failed");
    }
  }
  return res;
}

}  // namespace

FeasibilityResult FeasibilitySolver::solve(const ConstraintSystem& sys) {
  const int n = sys.dim;
  if (n <= 0) throw std::invalid_argument("strict_feasible: nonpositive dimension");
  for (const auto& row : sys.rows) {
    if (static_cast<int>(row.w.size()) != n)
      throw std::invalid_argument("strict_feasible: row dimension mismatch");
    bool zero = true;
    for (int c : row.w)
      if (c != 0) {
        zero = false;
        break;
      }
    if (zero) throw std::invalid_argument("strict_feasible: all-zero row");
  }

  ++calls;
  FeasibilityResult res;
  if (sys.rows.empty()) {
    res.feasible = true;
    res.witness.assign(n, Rational(0));
    return res;
  }

  try {
    res = finish(sys, phase_one<long long>(sys));
  } catch (const Overflow&) {
    ++bignum_reruns;
    res = finish(sys, phase_one<Integer>(sys));
    res.used_bignum = true;
  }
  total_pivots += static_cast<std::uint64_t>(res.pivots);
  return res;
}

FeasibilityResult strict_feasible(const ConstraintSystem& sys) {
  FeasibilitySolver solver;
  return solver.solve(sys);
}

}  // namespace subsums
