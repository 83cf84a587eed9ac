#pragma once

#include "qlp/family.hpp"
#include "qlp/matrix.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace qlp {

struct WtjMatrix {
  FamilySpec family;
  Matrix<Rational> entries;  // entries(t, j) = W_t(j)

  long r() const { return static_cast<long>(entries.rows()) - 1; }
  const Rational& operator()(long t, long j) const { return entries(t, j); }
};

namespace detail {

inline int neg1(long e) { return (e % 2 == 0) ? 1 : -1; }

inline BigInt sq(const BigInt& x) { return x * x; }

inline Rational w_qhamming(long q, long n, long t, long j) {
  BigInt s = 0, a = q * q - 1;
  for (long i = 0; i <= t; ++i) s += neg1(i) * ipow(a, t - i) * binomial(j, i) * binomial(n - j, t - i);
  return Rational(s, ipow(q, n));
}

inline Rational w_su2(long n, long t, long j) {
  BigInt sum = 0;
  for (long s = std::max(t, j); s <= std::min(t + j, n); ++s)
    sum += neg1(s) * factorial(n + s + 1) /
           (sq(factorial(s - t)) * sq(factorial(s - j)) * sq(factorial(t + j - s)) * factorial(n - s));
  BigInt num = (2 * t + 1) * sq(factorial(t)) * sq(factorial(j)) * factorial(n - t) * factorial(n - j);
  BigInt den = factorial(n + t + 1) * factorial(n + j + 1);
  return Rational(neg1(t + j) * num * sum, den);
}

inline Rational w_sym(long q, long n, long t, long j) {
  Rational sum = 0;
  for (long s = std::max(0L, t + j - n); s <= t; ++s)
    sum += Rational(neg1(s) * factorial(2 * t + q - 2 - s) * sq(factorial(s + n - t)),
                    factorial(s) * factorial(s - (t + j - n)) * factorial(s + n - t + j + q - 1) *
                        sq(factorial(t - s)));
  Rational pre((2 * t + q - 1) * factorial(n - j) * factorial(n + j + q - 1),
               factorial(n - t) * factorial(n + t + q - 1));
  return pre * sum;
}

inline Rational w_ext(long n, long w, long t, long j) {
  long r = std::min(w, n - w);
  Rational sum = 0;
  for (long s = std::max(0L, t + j - r); s <= t; ++s)
    sum += Rational(neg1(s) * factorial(n - r + t - j - s) * sq(factorial(s + r - t)),
                    factorial(s) * factorial(s - (t + j - r)) * factorial(s + n - 2 * t + 1) *
                        sq(factorial(t - s)));
  Rational pre((n - 2 * t + 1) * factorial(r - j) * factorial(n - r - t),
               factorial(r - t) * factorial(n - r - j));
  return pre * sum;
}

// Cl(m) on 2^n dimensions
inline Rational w_clifford(long m, long n, long t, long j) {
  BigInt s = 0;
  for (long i = 0; i <= t; ++i) s += neg1(i) * binomial(j, i) * binomial(m - j, t - i);
  return Rational(neg1(t * j) * s, ipow(2, n));
}

inline Rational w_spinorial(long n, long t, long j) {
  BigInt s = 0;
  for (long i = 0; i <= 2 * t; ++i) s += neg1(i) * binomial(2 * j, i) * binomial(2 * n + 1 - 2 * j, 2 * t - i);
  return Rational(s, ipow(2, n));
}

inline Rational w_semispinorial(long n, long t, long j) {
  BigInt s = 0;
  for (long i = 0; i <= 2 * t; ++i) s += neg1(i) * binomial(2 * j, i) * binomial(2 * n - 2 * j, 2 * t - i);
  return Rational(s, ipow(2, 2 * t == n ? n : n - 1));
}

}  // namespace detail

inline Rational wtj_entry(const FamilySpec& f, long t, long j) {
  switch (f.kind) {
    case FamilyKind::QHamming: return detail::w_qhamming(f.q, f.n, t, j);
    case FamilyKind::Su2: return detail::w_su2(f.n, t, j);
    case FamilyKind::SuqSym: return detail::w_sym(f.q, f.n, t, j);
    case FamilyKind::SunExt: return detail::w_ext(f.n, f.w, t, j);
    case FamilyKind::CliffordOdd: return detail::w_clifford(2 * f.n + 1, f.n, t, j);
    case FamilyKind::CliffordEven: return detail::w_clifford(2 * f.n, f.n, t, j);
    case FamilyKind::Spinorial: return detail::w_spinorial(f.n, t, j);
    case FamilyKind::Semispinorial: return detail::w_semispinorial(f.n, t, j);
  }
  return 0;
}

inline WtjMatrix compute_wtj_matrix(const FamilySpec& f) {
  require_valid(f);
  long r = diameter(f);
  WtjMatrix w{f, Matrix<Rational>(r + 1, r + 1)};
  for (long t = 0; t <= r; ++t)
    for (long j = 0; j <= r; ++j) w.entries(t, j) = wtj_entry(f, t, j);
  return w;
}

// cached, shared read-only
inline std::shared_ptr<const WtjMatrix> wtj_matrix(const FamilySpec& f) {
  static std::mutex mu;
  static std::map<FamilySpec, std::shared_ptr<const WtjMatrix>> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(f); it != cache.end()) return it->second;
  }
  auto m = std::make_shared<const WtjMatrix>(compute_wtj_matrix(f));
  std::lock_guard lock(mu);
  return cache.emplace(f, m).first->second;
}

struct SelfDualSignature {
  FamilySpec family;
  std::vector<int> lambda;
};

inline bool is_self_dual(const FamilySpec& f) {
  switch (f.kind) {
    case FamilyKind::QHamming: return f.q == 2;
    case FamilyKind::SuqSym: return f.q == 2;
    case FamilyKind::SunExt: return f.n == 2 * f.w;
    case FamilyKind::Semispinorial: return f.n % 2 == 0;
    default: return true;
  }
}

// nullopt: not self-dual
inline std::optional<SelfDualSignature> lambda_signature(const FamilySpec& f) {
  require_valid(f);
  if (!is_self_dual(f)) return std::nullopt;
  SelfDualSignature s{f, {}};
  long r = diameter(f);
  bool clifford = f.kind == FamilyKind::CliffordOdd || f.kind == FamilyKind::CliffordEven;
  for (long j = 0; j <= r; ++j)
    s.lambda.push_back(clifford ? detail::neg1(j * (j + 2 * f.n - 1) / 2) : detail::neg1(j));
  return s;
}

inline bool spinorial_consistency(long n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  auto sp = FamilySpec::spinorial(n);
  for (long t = 0; t <= n; ++t)
    for (long j = 0; j <= n; ++j)
      if (wtj_entry(sp, t, j) != detail::w_clifford(2 * n + 1, n, 2 * t, 2 * j)) return false;
  return true;
}

}  // namespace qlp
