#pragma once

#include "qlp/clifford.hpp"
#include "qlp/family.hpp"
#include "qlp/su2.hpp"
#include "qlp/wtj.hpp"

#include <variant>

namespace qlp {

struct Su2Code {
  long n = 0;
  std::vector<Su2Vector> vectors;
};

struct CodeObject {
  FamilySpec family;
  std::variant<StabilizerCode, Matrix<Gaussian>, Su2Code> rep;
};

enum class Reading { Even, Odd, Spinorial };

inline const char* reading_name(Reading r) {
  return r == Reading::Even ? "even" : r == Reading::Odd ? "odd" : "spinorial";
}

inline std::optional<Reading> parse_reading(const std::string& s) {
  for (auto r : {Reading::Even, Reading::Odd, Reading::Spinorial})
    if (s == reading_name(r)) return r;
  return std::nullopt;
}

inline FamilySpec reading_family(Reading r, int n) {
  return r == Reading::Even ? FamilySpec::clifford_even(n)
         : r == Reading::Odd ? FamilySpec::clifford_odd(n) : FamilySpec::spinorial(n);
}

inline std::optional<Reading> family_reading(const FamilySpec& f) {
  switch (f.kind) {
    case FamilyKind::CliffordEven: return Reading::Even;
    case FamilyKind::CliffordOdd: return Reading::Odd;
    case FamilyKind::Spinorial: return Reading::Spinorial;
    default: return std::nullopt;
  }
}

inline long reading_diameter(Reading r, int n) { return r == Reading::Even ? 2 * n : n; }

// weights of the even labels y in F_2^{2n} whose Gamma_y span V_t (up to phases)
inline std::vector<int> class_weights(Reading r, int n, long t) {
  std::vector<int> w;
  auto push = [&](long v) {
    if (v >= 0 && v <= 2 * n && std::find(w.begin(), w.end(), v) == w.end()) w.push_back(static_cast<int>(v));
  };
  switch (r) {
    case Reading::Even: push(t); break;
    case Reading::Odd:
      push(t);
      if (t >= 1) push(2 * n + 1 - t);
      break;
    case Reading::Spinorial:
      push(2 * t);
      if (t >= 1) push(2 * n + 1 - 2 * t);
      break;
  }
  return w;
}

// all len-bit words of weight w, increasing order (Gosper)
template <class F>
void for_each_weight(int len, int w, F&& f) {
  if (w < 0 || w > len) return;
  if (w == 0) {
    f(uint64_t(0));
    return;
  }
  uint64_t v = (w == 64) ? ~uint64_t(0) : (uint64_t(1) << w) - 1;
  const uint64_t limit = uint64_t(1) << len;
  while (v < limit) {
    f(v);
    uint64_t c = v & (~v + 1), r = v + c;
    v = (((r ^ v) >> 2) / c) | r;
  }
}

template <class F>
void for_each_in_class(Reading r, int n, long t, F&& f) {
  for (int w : class_weights(r, n, t)) for_each_weight(2 * n, w, f);
}

using SlopeValue = std::variant<Gaussian, SurdSum>;

struct DetectionReport {
  BigInt dimension;
  long min_distance = 0;
  std::vector<std::pair<std::string, SlopeValue>> slope_values;  // nonzero slopes on E_{d-1}; others are 0
  bool is_pure = false;
  bool is_nondegenerate = false;
  std::string reading;
  std::string path;                  // "symbolic" or "matrix"
  std::optional<bool> matrix_check;  // symbolic result confirmed by the matrix condition
};

// ---------- Clifford: symbolic path ----------

struct SymbolicDetector {
  int n;
  std::unordered_map<uint64_t, int> span;
  std::vector<uint64_t> functionals;  // y is q-orthogonal to generator s iff parity(f_s & y) = 0

  explicit SymbolicDetector(const StabilizerCode& s) : n(s.n), span(stabilizer_span(s)) {
    uint64_t ones = (uint64_t(1) << (2 * s.n)) - 1;
    for (auto& g : s.generators) functionals.push_back(g.bits ^ ((g.weight() & 1) ? ones : 0));
  }
  // epsilon in {-1,0,1}, or nullopt when undetectable
  std::optional<int> detect(uint64_t y) const {
    if (auto it = span.find(y); it != span.end()) return it->second;
    for (uint64_t f : functionals)
      if (std::popcount(f & y) & 1) return 0;
    return std::nullopt;
  }
};

// ---------- Clifford: matrix path ----------

// orthogonal (unnormalized) spanning vectors of the code
struct CliffordBasis {
  int n = 0;
  std::vector<std::vector<Gaussian>> w;
  std::vector<std::vector<uint32_t>> supp;
  std::vector<Rational> norm2;

  void push(std::vector<Gaussian> v) {
    std::vector<uint32_t> s;
    Rational nn = 0;
    for (uint32_t i = 0; i < v.size(); ++i)
      if (!v[i].is_zero()) {
        s.push_back(i);
        nn += v[i].norm2();
      }
    w.push_back(std::move(v));
    supp.push_back(std::move(s));
    norm2.push_back(nn);
  }
  // <w_a| P |w_b>
  Gaussian element(const Pauli& P, size_t a, size_t b) const {
    Gaussian s;
    for (uint32_t j : supp[b]) {
      auto [i, k] = P.apply(j);
      const Gaussian& wa = w[a][i];
      if (wa.is_zero()) continue;
      s += wa.conj() * Gaussian::ipow(k) * w[b][j];
    }
    return s;
  }
  size_t size() const { return w.size(); }
};

inline constexpr int kMatrixMaxN = 10;

// columns P e_j from the generators alone, one per orbit; columns from distinct orbits are orthogonal
inline CliffordBasis basis_from_stabilizer(const StabilizerCode& s) {
  check_stabilizer(s);
  if (s.n > kMatrixMaxN) throw std::invalid_argument("matrix path limited to n <= 10; use the symbolic path");
  const size_t d = size_t(1) << s.n;
  const size_t K = size_t(1) << (s.n - s.generators.size());
  std::vector<Pauli> gens;
  for (size_t g = 0; g < s.generators.size(); ++g) {
    Pauli G = gamma_pauli(s.n, s.generators[g]);
    if (s.signs[g] < 0) G.phase = (G.phase + 2) & 3;
    gens.push_back(G);
  }
  CliffordBasis B;
  B.n = s.n;
  std::vector<char> covered(d, 0);
  Rational half(1, 2);
  for (uint32_t j = 0; j < d && B.size() < K; ++j) {
    if (covered[j]) continue;
    std::map<uint32_t, Gaussian> v{{j, Gaussian(1)}};
    for (auto& G : gens) {
      std::map<uint32_t, Gaussian> next = v;
      for (auto& [i, c] : v) {
        auto [i2, k] = G.apply(i);
        next[i2] += Gaussian::ipow(k) * c;
      }
      v.clear();
      for (auto& [i, c] : next)
        if (!c.is_zero()) v[i] = c * Gaussian(half);
    }
    // orbit of j under the generators' X parts
    std::vector<uint32_t> orbit{j};
    covered[j] = 1;
    for (size_t q = 0; q < orbit.size(); ++q)
      for (auto& G : gens) {
        uint32_t o = orbit[q] ^ G.x;
        if (!covered[o]) {
          covered[o] = 1;
          orbit.push_back(o);
        }
      }
    if (v.empty()) continue;
    std::vector<Gaussian> dense(d);
    for (auto& [i, c] : v) dense[i] = c;
    B.push(std::move(dense));
  }
  if (B.size() != K) throw std::logic_error("code basis has wrong dimension");
  return B;
}

// Gram-Schmidt over the columns of a projector
inline CliffordBasis basis_from_projector(const Matrix<Gaussian>& P) {
  size_t d = P.rows();
  int n = 0;
  while ((size_t(1) << n) < d) ++n;
  if ((size_t(1) << n) != d || P.cols() != d) throw std::invalid_argument("projector must be 2^n x 2^n");
  if (n > kMatrixMaxN) throw std::invalid_argument("matrix path limited to n <= 10");
  if (!(P * P == P) || !(P == P.adjoint())) throw std::invalid_argument("matrix is not an orthogonal projector");
  CliffordBasis B;
  B.n = n;
  for (size_t c = 0; c < d; ++c) {
    std::vector<Gaussian> v(d);
    for (size_t i = 0; i < d; ++i) v[i] = P(i, c);
    for (size_t a = 0; a < B.size(); ++a) {
      Gaussian ip;
      for (uint32_t i : B.supp[a]) ip += B.w[a][i].conj() * v[i];
      if (ip.is_zero()) continue;
      Gaussian f = ip * Gaussian(B.norm2[a].inverse());
      for (uint32_t i : B.supp[a]) v[i] -= f * B.w[a][i];
    }
    bool nz = std::any_of(v.begin(), v.end(), [](auto& x) { return !x.is_zero(); });
    if (nz) B.push(std::move(v));
  }
  if (B.size() == 0) throw std::invalid_argument("dimension-0 code");
  return B;
}

inline std::optional<Gaussian> matrix_detects(const CliffordBasis& B, const Pauli& G) {
  std::optional<Gaussian> eps;
  for (size_t a = 0; a < B.size(); ++a)
    for (size_t b = 0; b < B.size(); ++b) {
      Gaussian m = B.element(G, a, b);
      if (a != b) {
        if (!m.is_zero()) return std::nullopt;
        continue;
      }
      Gaussian e = m * Gaussian(B.norm2[a].inverse());
      if (eps && !(*eps == e)) return std::nullopt;
      eps = e;
    }
  return eps;
}

// ---------- shared scan ----------

// det(y) -> optional slope; phase(a, b) -> k with Gamma_a Gamma_b = i^k Gamma_{a+b}
template <class Det>
DetectionReport clifford_scan(int n, Reading reading, const BigInt& K, Det&& det) {
  DetectionReport rep;
  rep.dimension = K;
  rep.reading = reading_name(reading);
  const long r = reading_diameter(reading, n);
  long d = r + 1;
  for (long t = 1; t <= r && d == r + 1; ++t)
    for_each_in_class(reading, n, t, [&](uint64_t y) {
      if (d == r + 1 && !det(y)) d = t;
    });
  rep.min_distance = d;
  rep.is_pure = true;
  for (long t = 1; t < d; ++t)
    for_each_in_class(reading, n, t, [&](uint64_t y) {
      Gaussian e = *det(y);
      if (!e.is_zero()) {
        rep.is_pure = false;
        rep.slope_values.push_back({BinaryVector(y, 2 * n).str(), e});
      }
    });
  // nondegeneracy: rank of epsilon(Gamma_a Gamma_b) over E_e
  std::vector<uint64_t> basis;
  for (long t = 0; t <= (d - 1) / 2; ++t) for_each_in_class(reading, n, t, [&](uint64_t y) { basis.push_back(y); });
  Matrix<Gaussian> M(basis.size(), basis.size());
  for (size_t a = 0; a < basis.size(); ++a)
    for (size_t b = 0; b < basis.size(); ++b) {
      BinaryVector ya(basis[a], 2 * n), yb(basis[b], 2 * n);
      auto e = det(basis[a] ^ basis[b]);
      if (!e) throw std::logic_error("product of low-weight errors undetected");
      M(a, b) = Gaussian::ipow(gamma_product_phase(n, ya, yb)) * *e;
    }
  rep.is_nondegenerate = rank(M) == basis.size();
  return rep;
}

inline DetectionReport detection_report(const StabilizerCode& s, Reading reading, bool crosscheck = true) {
  SymbolicDetector sym(s);
  const int n = s.n;
  BigInt K = ipow(2, n - s.generators.size());
  auto rep = clifford_scan(n, reading, K, [&](uint64_t y) -> std::optional<Gaussian> {
    auto e = sym.detect(y);
    if (!e) return std::nullopt;
    return Gaussian(*e);
  });
  rep.path = "symbolic";
  if (crosscheck && n <= kMatrixMaxN) {
    auto B = basis_from_stabilizer(s);
    bool ok = true;
    // every label in E_d (one class past the distance) agrees
    long upto = std::min(rep.min_distance, reading_diameter(reading, n));
    for (long t = 0; t <= upto && ok; ++t)
      for_each_in_class(reading, n, t, [&](uint64_t y) {
        if (!ok) return;
        auto m = matrix_detects(B, gamma_pauli(n, BinaryVector(y, 2 * n)));
        auto e = sym.detect(y);
        if (m.has_value() != e.has_value() || (m && !(*m == Gaussian(*e)))) ok = false;
      });
    rep.matrix_check = ok;
  }
  return rep;
}

inline DetectionReport detection_report(const Matrix<Gaussian>& P, Reading reading) {
  auto B = basis_from_projector(P);
  const int n = B.n;
  auto rep = clifford_scan(n, reading, BigInt(static_cast<unsigned long>(B.size())),
                           [&](uint64_t y) { return matrix_detects(B, gamma_pauli(n, BinaryVector(y, 2 * n))); });
  rep.path = "matrix";
  return rep;
}

// ---------- su(2) ----------

inline DetectionReport detection_report(const Su2Code& c) {
  DetectionReport rep;
  rep.dimension = static_cast<unsigned long>(c.vectors.size());
  rep.reading = "su2";
  rep.path = "matrix";
  rep.min_distance = min_distance(c.n, c.vectors);
  const long d = rep.min_distance;
  rep.is_pure = true;
  for (long t = 1; t < d; ++t)
    for (long k = 0; k <= 2 * t; ++k) {
      SurdSum e = *su2_detects(c.vectors, ad_f_power(t, k));
      if (!e.is_zero()) {
        rep.is_pure = false;
        rep.slope_values.push_back({ad_label(t, k), e});
      }
    }
  std::vector<Su2Operator> basis{Su2Operator::word("")};
  for (long t = 1; t <= (d - 1) / 2; ++t)
    for (long k = 0; k <= 2 * t; ++k) basis.push_back(ad_f_power(t, k));
  // epsilon(X_a^* X_b) = <X_a w, X_b w>/<w, w> on any code vector
  const Su2Vector& w0 = c.vectors.front();
  Rational g = norm2(w0);
  std::vector<Su2Vector> img;
  for (auto& X : basis) img.push_back(apply(X, w0));
  Matrix<SurdSum> M(basis.size(), basis.size());
  for (size_t a = 0; a < basis.size(); ++a)
    for (size_t b = 0; b < basis.size(); ++b) M(a, b) = inner(img[a], img[b]) * g.inverse();
  rep.is_nondegenerate = rank(M) == basis.size();
  return rep;
}

// ---------- distance distributions ----------

struct Distribution {
  std::vector<Rational> A, B;
};

// symbolic, stabilizer codes: A_t = K |span in class t|, B_t = |q-dual in class t|
inline Distribution distribution_symbolic(const StabilizerCode& s, Reading reading) {
  auto span = stabilizer_span(s);
  const int n = s.n, len = 2 * n;
  const long r = reading_diameter(reading, n);
  BigInt K = ipow(2, n - s.generators.size());
  // weight -> class index
  std::vector<long> cls(len + 1, -1);
  for (long t = 0; t <= r; ++t)
    for (int w : class_weights(reading, n, t)) cls[w] = t;
  std::vector<BigInt> a(r + 1, 0), b(r + 1, 0);
  for (auto& [y, c] : span)
    if (long t = cls[std::popcount(y)]; t >= 0) a[t] += 1;
  // q-dual = kernel of the functionals; enumerate by Gray code
  uint64_t ones = (uint64_t(1) << len) - 1;
  std::vector<uint64_t> rows;
  for (auto& g : s.generators) rows.push_back(g.bits ^ ((g.weight() & 1) ? ones : 0));
  std::vector<int> pivots;
  {
    std::vector<uint64_t> R = rows;
    size_t rk = 0;
    for (int bit = 0; bit < len; ++bit) {
      size_t p = rk;
      while (p < R.size() && !((R[p] >> bit) & 1)) ++p;
      if (p == R.size()) continue;
      std::swap(R[p], R[rk]);
      for (size_t i = 0; i < R.size(); ++i)
        if (i != rk && ((R[i] >> bit) & 1)) R[i] ^= R[rk];
      pivots.push_back(bit);
      ++rk;
    }
    rows.assign(R.begin(), R.begin() + rk);
  }
  std::vector<uint64_t> kernel;
  for (int f = 0; f < len; ++f) {
    if (std::find(pivots.begin(), pivots.end(), f) != pivots.end()) continue;
    uint64_t v = uint64_t(1) << f;
    for (size_t i = 0; i < rows.size(); ++i)
      if ((rows[i] >> f) & 1) v |= uint64_t(1) << pivots[i];
    kernel.push_back(v);
  }
  if (kernel.size() > 34) throw std::invalid_argument("q-dual too large to enumerate");
  std::vector<uint64_t> wc(len + 1, 0);
  uint64_t y = 0;
  wc[0] = 1;
  const uint64_t total = uint64_t(1) << kernel.size();
  for (uint64_t i = 1; i < total; ++i) {
    y ^= kernel[std::countr_zero(i)];
    ++wc[std::popcount(y)];
  }
  for (int w = 0; w <= len; ++w)
    if (cls[w] >= 0) b[cls[w]] += BigInt(static_cast<unsigned long>(wc[w]));
  Distribution D;
  for (long t = 0; t <= r; ++t) {
    D.A.push_back(Rational(K * a[t]));
    D.B.push_back(Rational(b[t]));
  }
  return D;
}

// matrix path: orthonormal basis Gamma_y / sqrt(2^n)
inline Distribution distribution_matrix(const CliffordBasis& Bs, Reading reading) {
  const int n = Bs.n;
  const long r = reading_diameter(reading, n);
  const Rational K(static_cast<unsigned long>(Bs.size()));
  std::vector<Rational> inv;
  for (auto& g : Bs.norm2) inv.push_back(g.inverse());
  Distribution D;
  for (long t = 0; t <= r; ++t) {
    Rational a = 0, b = 0;
    for_each_in_class(reading, n, t, [&](uint64_t y) {
      Pauli G = gamma_pauli(n, BinaryVector(y, 2 * n));
      Gaussian tr;
      for (size_t i = 0; i < Bs.size(); ++i)
        for (size_t j = 0; j < Bs.size(); ++j) {
          Gaussian m = Bs.element(G, i, j);
          if (m.is_zero()) continue;
          if (i == j) tr += m * Gaussian(inv[i]);
          b += m.norm2() * inv[i] * inv[j];
        }
      a += tr.norm2();
    });
    // (dim_H/K) * sum |tr|^2 / 2^n
    D.A.push_back(a / K);
    D.B.push_back(b / K);
  }
  return D;
}

inline Distribution distribution_su2(const Su2Code& c) {
  check_su2_code(c.n, c.vectors);
  const long n = c.n;
  const Rational K(static_cast<unsigned long>(c.vectors.size()));
  std::vector<Rational> inv;
  for (auto& v : c.vectors) inv.push_back(norm2(v).inverse());
  Distribution D;
  for (long t = 0; t <= n; ++t) {
    SurdSum a, b;
    for (long k = 0; k <= 2 * t; ++k) {
      Su2Operator X = t == 0 ? Su2Operator::word("") : ad_f_power(t, k);
      if (t == 0 && k > 0) break;
      // g = tr(X^* X)
      Rational g = 0;
      for (long m = -n; m <= n; m += 2) g += norm2(apply(X, Su2Vector::basis(n, m)));
      std::vector<Su2Vector> img;
      for (auto& v : c.vectors) img.push_back(apply(X, v));
      SurdSum tr;
      for (size_t i = 0; i < c.vectors.size(); ++i)
        for (size_t j = 0; j < c.vectors.size(); ++j) {
          SurdSum m = inner(c.vectors[i], img[j]);
          if (i == j) tr += m * inv[i];
          b += m * m * (inv[i] * inv[j] / g);
        }
      a += tr * tr * g.inverse();
    }
    auto ar = a.rational(), br = b.rational();
    if (!ar || !br) throw std::logic_error("irrational distance distribution");
    D.A.push_back(*ar * Rational(n + 1) / K);
    D.B.push_back(*br * Rational(n + 1) / K);
  }
  return D;
}

}  // namespace qlp
