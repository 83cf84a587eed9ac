#pragma once

#include "qlp/rational.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace qlp {

enum class FamilyKind { QHamming, Su2, SuqSym, SunExt, CliffordOdd, CliffordEven, Spinorial, Semispinorial };

struct FamilySpec {
  FamilyKind kind = FamilyKind::Su2;
  long q = 0;
  long n = 0;
  long w = 0;

  static FamilySpec qhamming(long q, long n) { return {FamilyKind::QHamming, q, n, 0}; }
  static FamilySpec su2(long n) { return {FamilyKind::Su2, 0, n, 0}; }
  static FamilySpec su_sym(long q, long n) { return {FamilyKind::SuqSym, q, n, 0}; }
  static FamilySpec su_ext(long n, long w) { return {FamilyKind::SunExt, 0, n, w}; }
  static FamilySpec clifford_odd(long n) { return {FamilyKind::CliffordOdd, 0, n, 0}; }
  static FamilySpec clifford_even(long n) { return {FamilyKind::CliffordEven, 0, n, 0}; }
  static FamilySpec spinorial(long n) { return {FamilyKind::Spinorial, 0, n, 0}; }
  static FamilySpec semispinorial(long n) { return {FamilyKind::Semispinorial, 0, n, 0}; }

  friend auto operator<=>(const FamilySpec&, const FamilySpec&) = default;
};

inline const char* family_name(FamilyKind k) {
  switch (k) {
    case FamilyKind::QHamming: return "qhamming";
    case FamilyKind::Su2: return "su2";
    case FamilyKind::SuqSym: return "su-sym";
    case FamilyKind::SunExt: return "su-ext";
    case FamilyKind::CliffordOdd: return "clifford-odd";
    case FamilyKind::CliffordEven: return "clifford-even";
    case FamilyKind::Spinorial: return "spinorial";
    case FamilyKind::Semispinorial: return "semispinorial";
  }
  return "?";
}

inline std::optional<FamilyKind> parse_family(const std::string& s) {
  for (auto k : {FamilyKind::QHamming, FamilyKind::Su2, FamilyKind::SuqSym, FamilyKind::SunExt,
                 FamilyKind::CliffordOdd, FamilyKind::CliffordEven, FamilyKind::Spinorial,
                 FamilyKind::Semispinorial})
    if (s == family_name(k)) return k;
  return std::nullopt;
}

inline bool uses_q(FamilyKind k) { return k == FamilyKind::QHamming || k == FamilyKind::SuqSym; }
inline bool uses_w(FamilyKind k) { return k == FamilyKind::SunExt; }

inline std::string describe(const FamilySpec& f) {
  std::string s = family_name(f.kind);
  s += "(";
  if (uses_q(f.kind)) s += "q=" + std::to_string(f.q) + ",";
  s += "n=" + std::to_string(f.n);
  if (uses_w(f.kind)) s += ",w=" + std::to_string(f.w);
  return s + ")";
}

// error message, or nullopt when valid
inline std::optional<std::string> validate(const FamilySpec& f) {
  auto err = [&](const std::string& m) { return std::optional<std::string>(describe(f) + ": " + m); };
  switch (f.kind) {
    case FamilyKind::QHamming:
    case FamilyKind::SuqSym:
      if (f.q < 2) return err("q must be >= 2");
      if (f.n < 1) return err("n must be >= 1");
      break;
    case FamilyKind::SunExt:
      if (f.n < 2) return err("n must be >= 2");
      if (f.w < 1 || f.w > f.n - 1) return err("w must satisfy 1 <= w <= n-1");
      break;
    case FamilyKind::Semispinorial:
      if (f.n < 2) return err("n must be >= 2");
      break;
    default:
      if (f.n < 1) return err("n must be >= 1");
  }
  // keeps 2^n and bit-vector labels in range
  bool clifford = f.kind == FamilyKind::CliffordOdd || f.kind == FamilyKind::CliffordEven ||
                  f.kind == FamilyKind::Spinorial || f.kind == FamilyKind::Semispinorial;
  if (clifford && f.n > 31) return err("n must be <= 31");
  if (f.n > 100000 || f.q > 100000) return err("parameter too large");
  return std::nullopt;
}

inline void require_valid(const FamilySpec& f) {
  if (auto e = validate(f)) throw std::invalid_argument(*e);
}

struct MetricProfile {
  BigInt dim_H;
  long r = 0;
  std::vector<BigInt> dim_V;
};

inline long diameter(const FamilySpec& f) {
  switch (f.kind) {
    case FamilyKind::QHamming:
    case FamilyKind::Su2:
    case FamilyKind::SuqSym:
    case FamilyKind::CliffordOdd:
    case FamilyKind::Spinorial: return f.n;
    case FamilyKind::SunExt: return std::min(f.w, f.n - f.w);
    case FamilyKind::CliffordEven: return 2 * f.n;
    case FamilyKind::Semispinorial: return f.n / 2;
  }
  return 0;
}

inline MetricProfile profile(const FamilySpec& f) {
  require_valid(f);
  MetricProfile p;
  p.r = diameter(f);
  const long n = f.n, q = f.q;
  switch (f.kind) {
    case FamilyKind::QHamming: p.dim_H = ipow(q, n); break;
    case FamilyKind::Su2: p.dim_H = n + 1; break;
    case FamilyKind::SuqSym: p.dim_H = binomial(n + q - 1, q - 1); break;
    case FamilyKind::SunExt: p.dim_H = binomial(n, f.w); break;
    case FamilyKind::CliffordOdd:
    case FamilyKind::CliffordEven:
    case FamilyKind::Spinorial: p.dim_H = ipow(2, n); break;
    case FamilyKind::Semispinorial: p.dim_H = ipow(2, n - 1); break;
  }
  for (long t = 0; t <= p.r; ++t) {
    BigInt v;
    switch (f.kind) {
      case FamilyKind::QHamming: v = ipow(q * q - 1, t) * binomial(n, t); break;
      case FamilyKind::Su2: v = 2 * t + 1; break;
      case FamilyKind::SuqSym: {
        BigInt c = binomial(q + t - 2, q - 2);
        v = (2 * t + q - 1) * c * c / (q - 1);
        break;
      }
      case FamilyKind::SunExt: {
        BigInt c = binomial(n + 1, t);
        v = (n - 2 * t + 1) * c * c / (n + 1);
        break;
      }
      case FamilyKind::CliffordOdd: v = binomial(2 * n + 1, t); break;
      case FamilyKind::CliffordEven: v = binomial(2 * n, t); break;
      case FamilyKind::Spinorial: v = binomial(2 * n + 1, 2 * t); break;
      case FamilyKind::Semispinorial:
        v = 2 * t == n ? BigInt(binomial(2 * n, n) / 2) : binomial(2 * n, 2 * t);
        break;
    }
    p.dim_V.push_back(v);
  }
  return p;
}

}  // namespace qlp
