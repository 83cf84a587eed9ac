#pragma once

#include "qlp/matrix.hpp"

#include <map>
#include <string>
#include <vector>

namespace qlp {

// amplitudes on the orthonormal weight basis |k>, k = -n, -n+2, ..., n
struct Su2Vector {
  long n = 0;
  std::map<long, SurdSum> amp;

  static Su2Vector basis(long n, long k) {
    Su2Vector v{n, {}};
    v.add(k, SurdSum(1));
    return v;
  }

  bool admissible(long k) const { return k >= -n && k <= n && ((k - n) % 2 == 0); }
  void add(long k, const SurdSum& c) {
    if (!admissible(k)) throw std::invalid_argument("weight " + std::to_string(k) + " not admissible");
    if (c.is_zero()) return;
    auto& a = amp[k];
    a += c;
    if (a.is_zero()) amp.erase(k);
  }
  bool is_zero() const { return amp.empty(); }

  Su2Vector& operator+=(const Su2Vector& o) {
    for (auto& [k, c] : o.amp) add(k, c);
    return *this;
  }
  Su2Vector& operator*=(const SurdSum& s) {
    if (s.is_zero()) amp.clear();
    for (auto& [k, c] : amp) c *= s;
    return *this;
  }
  friend bool operator==(const Su2Vector&, const Su2Vector&) = default;
};

inline SurdSum inner(const Su2Vector& a, const Su2Vector& b) {
  SurdSum s;
  for (auto& [k, c] : a.amp)
    if (auto it = b.amp.find(k); it != b.amp.end()) s += c * it->second;
  return s;
}

inline Rational norm2(const Su2Vector& v) {
  auto r = inner(v, v).rational();
  if (!r) throw std::domain_error("irrational squared norm");
  return *r;
}

// single letter E, F or H
inline Su2Vector apply_letter(char op, const Su2Vector& v) {
  const long n = v.n;
  Su2Vector out{n, {}};
  for (auto& [k, c] : v.amp) {
    switch (op) {
      case 'E':
        if (k < n) out.add(k + 2, c * SurdSum::sqrt(Rational((n - k) * (n + k + 2), 4)));
        break;
      case 'F':
        if (k > -n) out.add(k - 2, c * SurdSum::sqrt(Rational((n - k + 2) * (n + k), 4)));
        break;
      case 'H': out.add(k, c * SurdSum(Rational(k))); break;
      default: throw std::invalid_argument(std::string("unknown su(2) letter ") + op);
    }
  }
  return out;
}

// integer combination of words; a word "EFH" acts as E(F(H(v)))
struct Su2Operator {
  std::vector<std::pair<BigInt, std::string>> terms;

  static Su2Operator word(std::string w) { return {{{BigInt(1), std::move(w)}}}; }

  Su2Operator adjoint() const {
    Su2Operator a;
    for (auto& [c, w] : terms) {
      std::string r(w.rbegin(), w.rend());
      for (char& ch : r) ch = ch == 'E' ? 'F' : ch == 'F' ? 'E' : ch;
      a.terms.push_back({c, r});
    }
    return a;
  }
};

inline Su2Vector apply(const Su2Operator& op, const Su2Vector& v) {
  Su2Vector out{v.n, {}};
  for (auto& [c, w] : op.terms) {
    Su2Vector x = v;
    for (auto it = w.rbegin(); it != w.rend(); ++it) x = apply_letter(*it, x);
    x *= SurdSum(Rational(c));
    out += x;
  }
  return out;
}

inline Su2Vector apply(long, const Su2Operator& op, const Su2Vector& v) { return apply(op, v); }

// ad_F^k(E^t) = sum_i (-1)^i C(k,i) F^{k-i} E^t F^i
inline Su2Operator ad_f_power(long t, long k) {
  Su2Operator op;
  for (long i = 0; i <= k; ++i) {
    BigInt c = binomial(k, i);
    if (i % 2) c = -c;
    op.terms.push_back({c, std::string(k - i, 'F') + std::string(t, 'E') + std::string(i, 'F')});
  }
  return op;
}

inline std::string ad_label(long t, long k) { return "adF^" + std::to_string(k) + "(E^" + std::to_string(t) + ")"; }

namespace detail {

inline Su2Vector phi(long n, long k) {
  Su2Vector v{n, {}};
  SurdSum s = SurdSum::sqrt(Rational(1, 2));
  v.add(k, s);
  v.add(-k, s);
  return v;
}

inline Su2Vector combo(long n, std::initializer_list<std::pair<long, SurdSum>> parts) {
  Su2Vector v{n, {}};
  for (auto& [k, c] : parts) v.add(k, c);
  return v;
}

}  // namespace detail

inline std::vector<Su2Vector> code_quarter(long n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  std::vector<Su2Vector> out;
  long start = n % 4 == 0 ? 4 : n % 4 == 1 ? 5 : n % 4 == 2 ? 6 : 3;
  for (long k = n; k >= start; k -= 4) out.push_back(detail::phi(n, k));
  if (n % 2 == 0) out.push_back(Su2Vector::basis(n, 0));
  return out;
}

inline std::vector<Su2Vector> code_third(long n) {
  if (n < 4) throw std::invalid_argument("code of density 1/3 needs n >= 4");
  auto psi = [n](long k) {
    Rational a(k, 2 * k - 2), b(k - 2, 2 * k - 2);
    SurdSum sa = SurdSum::sqrt(a), sb = SurdSum::sqrt(b);
    return std::pair{detail::combo(n, {{-(k - 2), sa}, {k, -sb}}), detail::combo(n, {{-k, sb}, {k - 2, sa}})};
  };
  long r = n % 6;
  long last = r == 0 ? 6 : r == 1 ? 7 : r == 2 ? 8 : r == 3 ? 9 : r == 4 ? 4 : 5;
  std::vector<Su2Vector> out;
  if (r == 0 || r == 2) out.push_back(Su2Vector::basis(n, 0));
  if (r == 3) out.push_back(detail::phi(n, 3));
  for (long k = n; k >= last; k -= 6) {
    auto [a, b] = psi(k);
    out.push_back(a);
    out.push_back(b);
  }
  return out;
}

inline long code_third_dimension(long n) {
  switch (n % 6) {
    case 0: return 2 * (n / 6) + 1;
    case 1: return 2 * (n - 1) / 6;
    case 2: return 2 * (n - 2) / 6 + 1;
    case 3: return 2 * (n - 3) / 6 + 1;
    case 4: return 2 * (n + 2) / 6;
    default: return 2 * (n + 1) / 6;
  }
}

inline long code_quarter_dimension(long n) {
  switch (n % 4) {
    case 0: return n / 4 + 1;
    case 1: return (n - 1) / 4;
    case 2: return (n + 2) / 4;
    default: return (n + 1) / 4;
  }
}

inline void check_su2_code(long n, const std::vector<Su2Vector>& vs) {
  if (vs.empty()) throw std::invalid_argument("code has no vectors");
  for (auto& v : vs) {
    if (v.n != n) throw std::invalid_argument("vector built for a different n");
    if (v.is_zero()) throw std::invalid_argument("zero vector in code");
    for (auto& [k, c] : v.amp)
      if (!v.admissible(k)) throw std::invalid_argument("inadmissible weight");
    norm2(v);
  }
  for (size_t i = 0; i < vs.size(); ++i)
    for (size_t j = i + 1; j < vs.size(); ++j)
      if (!inner(vs[i], vs[j]).is_zero()) throw std::invalid_argument("code vectors are not orthogonal");
}

// epsilon(X) if detected, nullopt otherwise
inline std::optional<SurdSum> su2_detects(const std::vector<Su2Vector>& vs, const Su2Operator& X) {
  std::vector<Su2Vector> img;
  for (auto& v : vs) img.push_back(apply(X, v));
  std::optional<SurdSum> eps;
  for (size_t i = 0; i < vs.size(); ++i)
    for (size_t j = 0; j < vs.size(); ++j) {
      SurdSum m = inner(vs[i], img[j]);
      if (i != j) {
        if (!m.is_zero()) return std::nullopt;
        continue;
      }
      SurdSum e = m * norm2(vs[i]).inverse();
      if (eps && !(*eps == e)) return std::nullopt;
      eps = e;
    }
  return eps;
}

inline long min_distance(long n, const std::vector<Su2Vector>& vs) {
  check_su2_code(n, vs);
  if (vs.size() == 1) return n + 1;
  for (long t = 1; t <= n; ++t)
    for (long k = 0; k <= 2 * t; ++k)
      if (!su2_detects(vs, ad_f_power(t, k))) return t;
  return n + 1;
}

}  // namespace qlp
