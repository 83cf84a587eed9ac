#pragma once

#include "qlp/simplex.hpp"
#include "qlp/wtj.hpp"

namespace qlp {

struct LPOptions {
  bool self_dual = false;
  bool pure = false;
};

enum class RowKind { NonNegative, Pin, Equality, Inequality, SelfDual, Purity };

struct LPConstraint {
  RowKind kind;
  long t;
  Row row;
};

struct LPInstance {
  FamilySpec family;
  Rational K;
  long d = 1;
  LPOptions opts;
};

struct FeasibilityResult {
  bool feasible = false;
  std::optional<std::vector<Rational>> witness;
};

struct BoundResult {
  Rational feasible_at;
  std::optional<Rational> infeasible_at;
  long iterations = 0;
  std::optional<BigInt> integer_bound;
};

inline std::vector<LPConstraint> build_system(const WtjMatrix& W, const Rational& K, long d, const LPOptions& opts) {
  const long r = W.r();
  if (K.sign() <= 0) throw std::invalid_argument("K must be positive");
  if (d < 1 || d > r + 1) throw std::invalid_argument("d must satisfy 1 <= d <= r+1");
  std::optional<SelfDualSignature> sig;
  if (opts.self_dual) {
    sig = lambda_signature(W.family);
    if (!sig) throw std::invalid_argument(describe(W.family) + " is not self-dual");
  }
  const size_t nv = r + 1;
  auto unit = [&](long t) {
    std::vector<Rational> c(nv);
    c[t] = 1;
    return c;
  };
  auto krow = [&](long t) {
    std::vector<Rational> c(nv);
    for (long j = 0; j <= r; ++j) c[j] = K * W(t, j);
    c[t] -= 1;
    return c;
  };
  std::vector<LPConstraint> out;
  for (long t = 0; t <= r; ++t) out.push_back({RowKind::NonNegative, t, {unit(t), Sense::Ge, 0}});
  out.push_back({RowKind::Pin, 0, {unit(0), Sense::Eq, K}});
  for (long t = 0; t < d; ++t) out.push_back({RowKind::Equality, t, {krow(t), Sense::Eq, 0}});
  for (long t = 0; t <= r; ++t) out.push_back({RowKind::Inequality, t, {krow(t), Sense::Ge, 0}});
  if (sig)
    for (long t = 0; t <= r; ++t) {
      std::vector<Rational> c(nv);
      for (long j = 0; j <= r; ++j) c[j] = sig->lambda[j] * W(t, j);
      out.push_back({RowKind::SelfDual, t, {c, Sense::Ge, 0}});
    }
  if (opts.pure)
    for (long t = 1; t < d; ++t) out.push_back({RowKind::Purity, t, {unit(t), Sense::Eq, 0}});
  return out;
}

inline FeasibilityResult check_feasible(const std::vector<LPConstraint>& sys, size_t nvars) {
  std::vector<Row> rows;
  for (auto& c : sys)
    if (c.kind != RowKind::NonNegative) rows.push_back(c.row);
  auto x = find_feasible_point(rows, nvars);
  if (!x) return {};
  // independent re-verification, including the nonnegativity rows
  for (auto& c : sys)
    if (!satisfies(c.row, *x)) throw std::logic_error("witness fails re-verification");
  return {true, x};
}

inline FeasibilityResult check_feasible(const LPInstance& in) {
  auto W = wtj_matrix(in.family);
  return check_feasible(build_system(*W, in.K, in.d, in.opts), W->r() + 1);
}

inline bool feasible_at(const FamilySpec& f, long d, const LPOptions& opts, const Rational& K) {
  return check_feasible(LPInstance{f, K, d, opts}).feasible;
}

// the system is infeasible already at K = 1 (e.g. no pure code of that distance)
struct NoFeasibleValue : std::domain_error {
  using std::domain_error::domain_error;
};

inline BoundResult lp_bound(const FamilySpec& f, long d, const LPOptions& opts, const Rational& tol = Rational(1, 100000),
                            bool integer = false) {
  if (tol.sign() <= 0) throw std::invalid_argument("tolerance must be positive");
  auto prof = profile(f);
  if (d < 1 || d > prof.r + 1) throw std::invalid_argument("d must satisfy 1 <= d <= r+1");
  BoundResult res;
  Rational hi(prof.dim_H);
  if (feasible_at(f, d, opts, hi)) {
    res.feasible_at = hi;
    res.iterations = 1;
    if (integer) res.integer_bound = prof.dim_H;
    return res;
  }
  Rational lo(1);
  if (!feasible_at(f, d, opts, lo)) throw NoFeasibleValue(describe(f) + ", d=" + std::to_string(d) + ": no feasible K >= 1");
  res.iterations = 2;
  while (hi - lo >= tol) {
    Rational mid = (lo + hi) / Rational(2);
    if (feasible_at(f, d, opts, mid))
      lo = mid;
    else
      hi = mid;
    ++res.iterations;
  }
  if (integer) {
    // largest integer K feasible with K+1 infeasible
    BigInt c = hi.floor();
    if (Rational(c) == hi) c -= 1;
    while (c > 1 && !feasible_at(f, d, opts, Rational(c))) c -= 1;
    while (feasible_at(f, d, opts, Rational(c + 1))) c += 1;
    res.integer_bound = c;
  }
  res.feasible_at = lo;
  res.infeasible_at = hi;
  return res;
}

// smallest-denominator rational in [lo, hi], 0 <= lo <= hi
inline Rational simplest_rational(const Rational& lo, const Rational& hi) {
  if (lo.sign() < 0 || hi < lo) throw std::invalid_argument("simplest_rational needs 0 <= lo <= hi");
  Rational fl(lo.floor());
  if (fl == lo) return lo;
  if (fl + Rational(1) <= hi) return fl + Rational(1);
  return fl + simplest_rational((hi - fl).inverse(), (lo - fl).inverse()).inverse();
}

// min_j W_1(j) and its argmin set
inline std::pair<Rational, std::vector<long>> w1_minimum(const WtjMatrix& W) {
  Rational m = W(1, 0);
  for (long j = 0; j <= W.r(); ++j) m = std::min(m, W(1, j));
  std::vector<long> J;
  for (long j = 0; j <= W.r(); ++j)
    if (W(1, j) == m) J.push_back(j);
  return {m, J};
}

// nullopt: not applicable
inline std::optional<Rational> dist2_bound(const FamilySpec& f) {
  auto W = wtj_matrix(f);
  if (W->r() < 1) throw std::invalid_argument("diameter must be >= 1");
  auto [m, J] = w1_minimum(*W);
  if (std::find(J.begin(), J.end(), 1L) != J.end()) return std::nullopt;
  Rational dimH(profile(f).dim_H);
  Rational a = -m * dimH / ((*W)(1, 0) - m);
  Rational b = Rational(1) / ((*W)(1, 1) - m);
  return std::max(a, b);
}

inline Rational dist2_bound_pure(const FamilySpec& f) {
  auto W = wtj_matrix(f);
  if (W->r() < 1) throw std::invalid_argument("diameter must be >= 1");
  auto m = w1_minimum(*W).first;
  return -m * Rational(profile(f).dim_H) / ((*W)(1, 0) - m);
}

inline Rational volume_bound(const FamilySpec& f, long d) {
  auto p = profile(f);
  if (d < 1 || d > p.r + 1) throw std::invalid_argument("d must satisfy 1 <= d <= r+1");
  BigInt s = 0;
  for (long t = 0; t <= (d - 1) / 2; ++t) s += p.dim_V[t];
  return Rational(p.dim_H, s);
}

}  // namespace qlp
