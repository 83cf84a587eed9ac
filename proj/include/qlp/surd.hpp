#pragma once

#include "qlp/rational.hpp"

#include <cmath>
#include <map>
#include <numeric>
#include <optional>
#include <utility>

namespace qlp {

// n = s^2 * f with f squarefree
inline std::pair<uint64_t, uint64_t> squarefree_split(uint64_t n) {
  if (n == 0) throw std::domain_error("zero radicand");
  uint64_t s = 1, f = 1;
  for (uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) s *= p;
    if (e % 2) f *= p;
  }
  f *= n;
  return {s, f};
}

inline uint64_t smallest_prime_factor(uint64_t n) {
  for (uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return p;
  return n;
}

class SurdSum {
 public:
  using Terms = std::map<uint64_t, Rational>;

  SurdSum() = default;
  SurdSum(int v) : SurdSum(Rational(v)) {}
  SurdSum(const Rational& r) {
    if (!r.is_zero()) terms_.emplace(1, r);
  }
  // c * sqrt(d)
  SurdSum(const Rational& c, uint64_t d) {
    if (c.is_zero()) return;
    auto [s, f] = squarefree_split(d);
    terms_.emplace(f, c * Rational(static_cast<unsigned long>(s)));
  }

  // sqrt of a nonnegative rational: sqrt(p/q) = sqrt(pq)/q
  static SurdSum sqrt(const Rational& r) {
    if (r.sign() < 0) throw std::domain_error("sqrt of negative rational");
    if (r.is_zero()) return {};
    BigInt pq = r.num() * r.den();
    if (!pq.fits_ulong_p()) throw std::overflow_error("radicand too large");
    return SurdSum(Rational(BigInt(1), r.den()), pq.get_ui());
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  std::optional<Rational> rational() const {
    if (terms_.empty()) return Rational(0);
    if (terms_.size() == 1 && terms_.begin()->first == 1) return terms_.begin()->second;
    return std::nullopt;
  }

  double to_double() const {
    double v = 0;
    for (auto& [d, c] : terms_) v += c.to_double() * std::sqrt(static_cast<double>(d));
    return v;
  }

  // 1/a via Galois conjugates: a * sigma_p(a) drops every radicand divisible by p
  SurdSum inverse() const {
    if (terms_.empty()) throw std::domain_error("division by zero");
    SurdSum a = *this, num(1);
    while (!a.rational()) {
      uint64_t p = 0;
      for (auto& [d, c] : a.terms_)
        if (d != 1) {
          p = smallest_prime_factor(d);
          break;
        }
      SurdSum conj = a;
      for (auto& [d, c] : conj.terms_)
        if (d % p == 0) c = -c;
      num *= conj;
      a = a * conj;
    }
    return num * a.rational()->inverse();
  }

  SurdSum operator-() const {
    SurdSum r = *this;
    for (auto& [d, c] : r.terms_) c = -c;
    return r;
  }
  SurdSum& operator+=(const SurdSum& o) {
    for (auto& [d, c] : o.terms_) add(d, c);
    return *this;
  }
  SurdSum& operator-=(const SurdSum& o) {
    for (auto& [d, c] : o.terms_) add(d, -c);
    return *this;
  }
  SurdSum& operator*=(const Rational& r) {
    if (r.is_zero()) terms_.clear();
    for (auto& [d, c] : terms_) c *= r;
    return *this;
  }
  SurdSum& operator*=(const SurdSum& o) { return *this = *this * o; }
  SurdSum& operator/=(const SurdSum& o) { return *this *= o.inverse(); }

  friend SurdSum operator+(SurdSum a, const SurdSum& b) { return a += b; }
  friend SurdSum operator-(SurdSum a, const SurdSum& b) { return a -= b; }
  friend SurdSum operator/(SurdSum a, const SurdSum& b) { return a /= b; }
  friend SurdSum operator*(const SurdSum& a, const SurdSum& b) {
    SurdSum r;
    for (auto& [da, ca] : a.terms_)
      for (auto& [db, cb] : b.terms_) {
        // sqrt(a) sqrt(b) = g sqrt((a/g)(b/g)), both squarefree so the product stays squarefree
        uint64_t g = std::gcd(da, db);
        unsigned __int128 rad = static_cast<unsigned __int128>(da / g) * (db / g);
        if (rad > UINT64_MAX) throw std::overflow_error("radicand overflow");
        r.add(static_cast<uint64_t>(rad), ca * cb * Rational(static_cast<unsigned long>(g)));
      }
    return r;
  }
  friend SurdSum operator*(SurdSum a, const Rational& r) { return a *= r; }
  friend SurdSum operator*(const Rational& r, SurdSum a) { return a *= r; }
  friend bool operator==(const SurdSum& a, const SurdSum& b) = default;

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto& [d, c] : terms_) {
      std::string t = c.str();
      if (d != 1) t += "*sqrt(" + std::to_string(d) + ")";
      if (!s.empty() && t[0] != '-') s += "+";
      s += t;
    }
    return s;
  }
  friend std::ostream& operator<<(std::ostream& os, const SurdSum& s) { return os << s.str(); }

 private:
  void add(uint64_t d, const Rational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(d);
    if (it == terms_.end()) {
      terms_.emplace(d, c);
      return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  Terms terms_;
};

inline SurdSum conj(const SurdSum& s) { return s; }
inline bool is_zero(const SurdSum& s) { return s.is_zero(); }

inline std::optional<Rational> surd_is_rational(const SurdSum& s) { return s.rational(); }

}  // namespace qlp
