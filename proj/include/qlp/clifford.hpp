#pragma once

#include "qlp/matrix.hpp"

#include <bit>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace qlp {

// bit i holds component i+1; strings are written leftmost = component 1
struct BinaryVector {
  uint64_t bits = 0;
  int len = 0;

  BinaryVector() = default;
  BinaryVector(uint64_t b, int l) : bits(b), len(l) {
    if (l < 0 || l > 63) throw std::invalid_argument("binary vector length must be <= 63");
    if (l < 64 && (b >> l)) throw std::invalid_argument("bits outside binary vector length");
  }

  static BinaryVector parse(const std::string& s) {
    if (s.size() > 63) throw std::invalid_argument("binary vector longer than 63");
    uint64_t b = 0;
    for (size_t i = 0; i < s.size(); ++i) {
      if (s[i] == '1')
        b |= uint64_t(1) << i;
      else if (s[i] != '0')
        throw std::invalid_argument("bad bit string: '" + s + "'");
    }
    return {b, static_cast<int>(s.size())};
  }
  std::string str() const {
    std::string s(len, '0');
    for (int i = 0; i < len; ++i)
      if (get(i)) s[i] = '1';
    return s;
  }

  bool get(int i) const { return (bits >> i) & 1; }
  void set(int i, bool v) { bits = v ? bits | (uint64_t(1) << i) : bits & ~(uint64_t(1) << i); }
  int weight() const { return std::popcount(bits); }

  friend BinaryVector operator+(const BinaryVector& a, const BinaryVector& b) {
    if (a.len != b.len) throw std::invalid_argument("length mismatch");
    return {a.bits ^ b.bits, a.len};
  }
  friend bool operator==(const BinaryVector&, const BinaryVector&) = default;
};

inline int q_form(const BinaryVector& x, const BinaryVector& y) {
  if (x.len != y.len) throw std::invalid_argument("length mismatch");
  return (x.weight() * y.weight() + std::popcount(x.bits & y.bits)) & 1;
}

inline bool is_q_isotropic(const std::vector<BinaryVector>& S) {
  for (size_t i = 0; i < S.size(); ++i)
    for (size_t j = i; j < S.size(); ++j)
      if (q_form(S[i], S[j])) return false;
  return true;
}

inline int f2_rank(std::vector<uint64_t> rows) {
  int r = 0;
  for (int bit = 63; bit >= 0; --bit) {
    auto it = std::find_if(rows.begin() + r, rows.end(), [&](uint64_t v) { return (v >> bit) & 1; });
    if (it == rows.end()) continue;
    std::swap(*it, rows[r]);
    for (size_t i = 0; i < rows.size(); ++i)
      if (static_cast<int>(i) != r && ((rows[i] >> bit) & 1)) rows[i] ^= rows[r];
    ++r;
  }
  return r;
}

// i^phase * X^x Z^z on n qubits; qubit k (1-based) is bit n-k of a basis index
struct Pauli {
  int n = 0;
  uint32_t x = 0, z = 0;
  int phase = 0;

  friend Pauli operator*(const Pauli& a, const Pauli& b) {
    int sign = std::popcount(a.z & b.x) & 1;
    return {a.n, a.x ^ b.x, a.z ^ b.z, (a.phase + b.phase + 2 * sign) & 3};
  }
  // P|j> = i^k |j'>
  std::pair<uint32_t, int> apply(uint32_t j) const {
    int k = phase + 2 * (std::popcount(z & j) & 1);
    return {j ^ x, k & 3};
  }
  Matrix<Gaussian> matrix() const {
    size_t d = size_t(1) << n;
    Matrix<Gaussian> m(d, d);
    for (uint32_t j = 0; j < d; ++j) {
      auto [i, k] = apply(j);
      m(i, j) = Gaussian::ipow(k);
    }
    return m;
  }
};

inline uint32_t qubit_mask(int n, int k) { return uint32_t(1) << (n - k); }

inline Pauli weyl_brauer_pauli(int n, int k) {
  if (n < 1 || n > 31) throw std::invalid_argument("n out of range");
  if (k < 1 || k > 2 * n + 1) throw std::invalid_argument("Weyl-Brauer index out of range");
  Pauli p{n, 0, 0, 0};
  if (k == 2 * n + 1) {
    for (int q = 1; q <= n; ++q) p.z |= qubit_mask(n, q);
    return p;
  }
  int q = k <= n ? k : k - n;
  for (int l = 1; l < q; ++l) p.z |= qubit_mask(n, l);
  p.x |= qubit_mask(n, q);
  if (k > n) {  // sigma_y = i X Z
    p.z |= qubit_mask(n, q);
    p.phase = 1;
  }
  return p;
}

inline Matrix<Gaussian> weyl_brauer(int n, int k) { return weyl_brauer_pauli(n, k).matrix(); }

inline int tau(const BinaryVector& x) {
  long w = x.weight();
  return static_cast<int>(w * (w - 1) / 2);
}

inline Pauli gamma_pauli(int n, const BinaryVector& x) {
  if (x.len != 2 * n && x.len != 2 * n + 1) throw std::invalid_argument("gamma label length must be 2n or 2n+1");
  Pauli p{n, 0, 0, tau(x) & 3};
  for (int k = 1; k <= n; ++k) {
    if (x.get(k - 1)) p = p * weyl_brauer_pauli(n, k);
    if (x.get(n + k - 1)) p = p * weyl_brauer_pauli(n, n + k);
  }
  if (x.len == 2 * n + 1 && x.get(2 * n)) p = p * weyl_brauer_pauli(n, 2 * n + 1);
  return p;
}

struct CliffordOp {
  BinaryVector label;
  int n = 0;
  Matrix<Gaussian> matrix;
};

inline CliffordOp gamma(int n, const BinaryVector& x) { return {x, n, gamma_pauli(n, x).matrix()}; }

// Gamma_x Gamma_y = i^k Gamma_{x+y}, from the labels alone (same length 2n or 2n+1)
inline int gamma_product_phase(int n, const BinaryVector& x, const BinaryVector& y) {
  auto order = [&](const BinaryVector& v) {
    uint64_t o = 0;
    for (int i = 0; i < v.len; ++i)
      if (v.get(i)) o |= uint64_t(1) << (i < n ? 2 * i : i < 2 * n ? 2 * (i - n) + 1 : 2 * n);
    return o;
  };
  uint64_t ox = order(x), oy = order(y);
  int inv = 0;
  for (int b = 0; b < 64; ++b)
    if ((oy >> b) & 1) inv += std::popcount(b == 63 ? 0 : ox >> (b + 1));
  int k = tau(x) + tau(y) - tau(x + y) + 2 * inv;
  return ((k % 4) + 4) % 4;
}

struct StabilizerCode {
  int n = 0;
  std::vector<BinaryVector> generators;
  std::vector<int> signs;
};

inline void check_stabilizer(const StabilizerCode& s) {
  if (s.n < 1 || s.n > 31) throw std::invalid_argument("stabilizer code needs 1 <= n <= 31");
  if (s.signs.size() != s.generators.size()) throw std::invalid_argument("one sign per generator required");
  std::vector<uint64_t> rows;
  for (auto& g : s.generators) {
    if (g.len != 2 * s.n) throw std::invalid_argument("generator length must be 2n");
    rows.push_back(g.bits);
  }
  for (int v : s.signs)
    if (v != 1 && v != -1) throw std::invalid_argument("signs must be +1 or -1");
  if (f2_rank(rows) != static_cast<int>(rows.size())) throw std::invalid_argument("generators are linearly dependent");
  if (!is_q_isotropic(s.generators)) throw std::invalid_argument("generators are not q-isotropic");
}

// stabilizer group elements: label bits -> c with c * Gamma_y acting as identity on the code
inline std::unordered_map<uint64_t, int> stabilizer_span(const StabilizerCode& s) {
  check_stabilizer(s);
  std::unordered_map<uint64_t, int> span;
  struct Elt {
    BinaryVector y;
    int k;
  };
  std::vector<Elt> elts{{BinaryVector(0, 2 * s.n), 0}};
  for (size_t g = 0; g < s.generators.size(); ++g) {
    size_t m = elts.size();
    for (size_t i = 0; i < m; ++i) {
      Elt e = elts[i];
      int k = e.k + gamma_product_phase(s.n, e.y, s.generators[g]) + (s.signs[g] < 0 ? 2 : 0);
      elts.push_back({e.y + s.generators[g], k & 3});
    }
  }
  for (auto& e : elts) {
    if (e.k & 1) throw std::logic_error("non-real stabilizer element");
    span[e.y.bits] = e.k == 0 ? 1 : -1;
  }
  return span;
}

inline StabilizerCode clifford_hamming(int s) {
  if (s < 3) throw std::invalid_argument("Clifford Hamming codes need s >= 3");
  if (s > 5) throw std::invalid_argument("Clifford Hamming codes limited to s <= 5 (n <= 31)");
  int n = (1 << s) - 1;
  StabilizerCode c{n, {}, {}};
  for (int i = 1; i <= s; ++i) {
    BinaryVector g(0, 2 * n);
    for (int j = 1; j <= n; ++j)
      if ((j >> (s - i)) & 1) {
        g.set(j - 1, true);
        g.set(n + j - 1, true);
      }
    c.generators.push_back(g);
  }
  c.generators.push_back(BinaryVector((uint64_t(1) << n) - 1, 2 * n));
  c.signs.assign(c.generators.size(), 1);
  return c;
}

inline Matrix<Gaussian> stabilizer_projector(const StabilizerCode& s) {
  check_stabilizer(s);
  if (s.n > 10) throw std::invalid_argument("dense projector limited to n <= 10; use the symbolic path");
  size_t d = size_t(1) << s.n;
  Matrix<Gaussian> P = Matrix<Gaussian>::identity(d);
  Rational half(1, 2);
  for (size_t g = 0; g < s.generators.size(); ++g) {
    Pauli G = gamma_pauli(s.n, s.generators[g]);
    if (s.signs[g] < 0) G.phase = (G.phase + 2) & 3;
    // P <- (P + G P)/2
    Matrix<Gaussian> next = P;
    for (uint32_t row = 0; row < d; ++row) {
      // (G P)(i, :) = coefficient * P(row, :) where G|row> = i^k |i>
      auto [i, k] = G.apply(row);
      Gaussian c = Gaussian::ipow(k);
      for (size_t col = 0; col < d; ++col)
        if (!P(row, col).is_zero()) next(i, col) += c * P(row, col);
    }
    P = next.scale(half);
  }
  // certify: P = P*, tr P = 2^{n-m}, and S P = P for each signed generator (which forces P^2 = P)
  if (!(P == P.adjoint())) throw std::logic_error("projector not Hermitian");
  if (P.trace() != Gaussian(pow2(s.n - static_cast<long>(s.generators.size()))))
    throw std::logic_error("projector trace mismatch");
  for (size_t g = 0; g < s.generators.size(); ++g) {
    Pauli G = gamma_pauli(s.n, s.generators[g]);
    if (s.signs[g] < 0) G.phase = (G.phase + 2) & 3;
    for (uint32_t row = 0; row < d; ++row) {
      auto [i, k] = G.apply(row);
      Gaussian c = Gaussian::ipow(k);
      for (size_t col = 0; col < d; ++col)
        if (!(c * P(row, col) == P(i, col))) throw std::logic_error("projector not stabilized");
    }
  }
  return P;
}

}  // namespace qlp
