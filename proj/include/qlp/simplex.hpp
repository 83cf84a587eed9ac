#pragma once

#include "qlp/rational.hpp"

#include <optional>
#include <vector>

namespace qlp {

enum class Sense { Eq, Ge, Le };

struct Row {
  std::vector<Rational> coeffs;
  Sense sense = Sense::Eq;
  Rational rhs;
};

inline bool satisfies(const Row& row, const std::vector<Rational>& x) {
  Rational lhs = 0;
  for (size_t j = 0; j < row.coeffs.size(); ++j)
    if (!row.coeffs[j].is_zero() && !x[j].is_zero()) lhs += row.coeffs[j] * x[j];
  switch (row.sense) {
    case Sense::Eq: return lhs == row.rhs;
    case Sense::Ge: return lhs >= row.rhs;
    case Sense::Le: return lhs <= row.rhs;
  }
  return false;
}

// Phase-1 simplex with Bland's rule over x >= 0. Returns a feasible point or nullopt.
inline std::optional<std::vector<Rational>> find_feasible_point(const std::vector<Row>& rows, size_t nvars) {
  const size_t m = rows.size();
  size_t nslack = 0, nart = 0;
  for (auto& r : rows)
    if (r.sense != Sense::Eq) ++nslack;

  struct Norm {
    int slack_sign = 0;  // +1, -1, or 0 (no slack)
    bool artificial = false;
    bool flip = false;
  };
  std::vector<Norm> norm(m);
  for (size_t i = 0; i < m; ++i) {
    auto& r = rows[i];
    Norm& nm = norm[i];
    nm.flip = r.rhs.sign() < 0;
    Sense s = r.sense;
    if (nm.flip && s != Sense::Eq) s = (s == Sense::Ge ? Sense::Le : Sense::Ge);
    nm.slack_sign = s == Sense::Le ? 1 : s == Sense::Ge ? -1 : 0;
    nm.artificial = nm.slack_sign != 1;
    if (nm.artificial) ++nart;
  }

  const size_t ncols = nvars + nslack + nart;
  const size_t rhs_col = ncols;
  std::vector<std::vector<Rational>> T(m + 1, std::vector<Rational>(ncols + 1));
  std::vector<size_t> basis(m);
  size_t si = nvars, ai = nvars + nslack;
  for (size_t i = 0; i < m; ++i) {
    auto& r = rows[i];
    Rational sgn = norm[i].flip ? -1 : 1;
    for (size_t j = 0; j < nvars && j < r.coeffs.size(); ++j)
      if (!r.coeffs[j].is_zero()) T[i][j] = sgn * r.coeffs[j];
    T[i][rhs_col] = sgn * r.rhs;
    if (r.sense != Sense::Eq) {
      T[i][si] = norm[i].slack_sign;
      if (!norm[i].artificial) basis[i] = si;
      ++si;
    }
    if (norm[i].artificial) {
      T[i][ai] = 1;
      basis[i] = ai++;
    }
  }
  // reduced costs for min sum(artificials): d_j = c_j - sum over artificial rows
  auto& d = T[m];
  for (size_t j = nvars + nslack; j < ncols; ++j) d[j] = 1;
  for (size_t i = 0; i < m; ++i)
    if (basis[i] >= nvars + nslack)
      for (size_t j = 0; j <= ncols; ++j)
        if (!T[i][j].is_zero()) d[j] -= T[i][j];

  for (;;) {
    size_t enter = ncols;
    for (size_t j = 0; j < ncols; ++j)
      if (d[j].sign() < 0) {
        enter = j;
        break;
      }
    if (enter == ncols) break;
    size_t leave = m;
    Rational best;
    for (size_t i = 0; i < m; ++i) {
      if (T[i][enter].sign() <= 0) continue;
      Rational ratio = T[i][rhs_col] / T[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) break;  // unbounded direction cannot occur in phase 1
    Rational piv = T[leave][enter];
    for (auto& x : T[leave])
      if (!x.is_zero()) x /= piv;
    for (size_t i = 0; i <= m; ++i) {
      if (i == leave || T[i][enter].is_zero()) continue;
      Rational f = T[i][enter];
      for (size_t j = 0; j <= ncols; ++j)
        if (!T[leave][j].is_zero()) T[i][j] -= f * T[leave][j];
    }
    basis[leave] = enter;
  }

  // phase-1 optimum is -d[rhs]
  if (!d[rhs_col].is_zero()) return std::nullopt;
  std::vector<Rational> x(nvars);
  for (size_t i = 0; i < m; ++i)
    if (basis[i] < nvars) x[basis[i]] = T[i][rhs_col];
  for (auto& r : rows)
    if (!satisfies(r, x)) throw std::logic_error("simplex produced a point violating a constraint");
  return x;
}

}  // namespace qlp
