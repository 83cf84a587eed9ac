#pragma once

#include "qlp/clifford.hpp"
#include "qlp/family.hpp"
#include "qlp/surd.hpp"
#include "qlp/wtj.hpp"

#include <map>
#include <memory>

namespace qlp::oracle {

// Hilbert space with an orthogonal basis |a> of squared norm g[a]; matrices act on coordinates in this basis
struct Space {
  size_t dim = 0;
  std::vector<Rational> g;
  std::vector<std::vector<int>> weight;  // optional grading of basis vectors
};

using Key = std::pair<uint32_t, uint32_t>;
using SparseOp = std::map<Key, Gaussian>;

inline void add_entry(SparseOp& A, Key k, const Gaussian& v) {
  if (v.is_zero()) return;
  auto [it, fresh] = A.emplace(k, v);
  if (fresh) return;
  it->second += v;
  if (it->second.is_zero()) A.erase(it);
}

inline SparseOp mul(const SparseOp& A, const SparseOp& B) {
  SparseOp C;
  for (auto& [ka, va] : A)
    for (auto it = B.lower_bound({ka.second, 0}); it != B.end() && it->first.first == ka.second; ++it)
      add_entry(C, {ka.first, it->first.second}, va * it->second);
  return C;
}

inline SparseOp axpy(SparseOp A, const Gaussian& c, const SparseOp& B) {
  for (auto& [k, v] : B) add_entry(A, k, c * v);
  return A;
}

inline SparseOp scaled(SparseOp A, const Gaussian& c) {
  if (c.is_zero()) return {};
  for (auto& [k, v] : A) v *= c;
  return A;
}

inline SparseOp commutator(const SparseOp& A, const SparseOp& B) { return axpy(mul(A, B), Gaussian(-1), mul(B, A)); }

// X^* with respect to the basis norms: (X^*)_{ba} = conj(X_ab) g_a / g_b
inline SparseOp adjoint(const Space& S, const SparseOp& X) {
  SparseOp Y;
  for (auto& [k, v] : X) Y.emplace(Key{k.second, k.first}, v.conj() * Gaussian(S.g[k.first] / S.g[k.second]));
  return Y;
}

inline SparseOp conjugate(const SparseOp& X) {
  SparseOp Y;
  for (auto& [k, v] : X) Y.emplace(k, v.conj());
  return Y;
}

// tr(A^* B) = sum conj(A_ab) B_ab g_a / g_b
inline Gaussian hs(const Space& S, const SparseOp& A, const SparseOp& B) {
  Gaussian s;
  const SparseOp& small = A.size() <= B.size() ? A : B;
  const SparseOp& big = A.size() <= B.size() ? B : A;
  for (auto& [k, v] : small) {
    auto it = big.find(k);
    if (it == big.end()) continue;
    const Gaussian& a = &small == &A ? v : it->second;
    const Gaussian& b = &small == &A ? it->second : v;
    s += a.conj() * b * Gaussian(S.g[k.first] / S.g[k.second]);
  }
  return s;
}

inline SparseOp identity(const Space& S) {
  SparseOp I;
  for (uint32_t a = 0; a < S.dim; ++a) I.emplace(Key{a, a}, Gaussian(1));
  return I;
}

inline Matrix<Gaussian> dense(const Space& S, const SparseOp& X) {
  Matrix<Gaussian> M(S.dim, S.dim);
  for (auto& [k, v] : X) M(k.first, k.second) = v;
  return M;
}

inline SparseOp sparse(const Matrix<Gaussian>& M) {
  SparseOp X;
  for (uint32_t i = 0; i < M.rows(); ++i)
    for (uint32_t j = 0; j < M.cols(); ++j)
      if (!M(i, j).is_zero()) X.emplace(Key{i, j}, M(i, j));
  return X;
}

// matrix in the orthonormal basis |a>/sqrt(g_a); real operators only
inline Matrix<SurdSum> orthonormal_form(const Space& S, const SparseOp& X) {
  Matrix<SurdSum> M(S.dim, S.dim);
  for (auto& [k, v] : X) {
    if (!v.im().is_zero()) throw std::invalid_argument("orthonormal_form needs a real operator");
    M(k.first, k.second) = SurdSum::sqrt(S.g[k.first] / S.g[k.second]) * v.re();
  }
  return M;
}

// ---------- spaces and generators ----------

inline Space orthonormal_space(size_t dim) {
  Space S;
  S.dim = dim;
  S.g.assign(dim, Rational(1));
  return S;
}

// Sym^n(C^q) on monomials x^m, |x^m|^2 = prod m_i! / n!
struct SymRep {
  long q, n;
  Space space;
  std::map<std::vector<int>, uint32_t> index;

  SymRep(long q_, long n_) : q(q_), n(n_) {
    std::vector<int> m(q, 0);
    enumerate(m, 0, n);
    space.dim = space.weight.size();
    BigInt nf = factorial(n);
    for (auto& w : space.weight) {
      BigInt p = 1;
      for (int c : w) p *= factorial(c);
      space.g.push_back(Rational(p, nf));
    }
  }
  void enumerate(std::vector<int>& m, long i, long left) {
    if (i == q - 1) {
      m[i] = static_cast<int>(left);
      index[m] = static_cast<uint32_t>(space.weight.size());
      space.weight.push_back(m);
      return;
    }
    for (long c = left; c >= 0; --c) {
      m[i] = static_cast<int>(c);
      enumerate(m, i + 1, left - c);
    }
  }
  // E_ij: e_j -> e_i, acting as x_i d/dx_j
  SparseOp unit(int i, int j) const {
    SparseOp X;
    for (auto& [m, a] : index) {
      if (i == j) {
        add_entry(X, {a, a}, Gaussian(m[i]));
        continue;
      }
      if (m[j] == 0) continue;
      auto m2 = m;
      --m2[j];
      ++m2[i];
      add_entry(X, {index.at(m2), a}, Gaussian(m[j]));
    }
    return X;
  }
};

// Lambda^w(C^n) on wedge monomials (bitmasks), orthonormal
struct ExtRep {
  long n, w;
  Space space;
  std::vector<uint32_t> masks;
  std::map<uint32_t, uint32_t> index;

  ExtRep(long n_, long w_) : n(n_), w(w_) {
    for (uint32_t m = 0; m < (1u << n); ++m)
      if (std::popcount(m) == w) {
        index[m] = static_cast<uint32_t>(masks.size());
        masks.push_back(m);
        std::vector<int> wt(n);
        for (int k = 0; k < n; ++k) wt[k] = (m >> k) & 1;
        space.weight.push_back(wt);
      }
    space.dim = masks.size();
    space.g.assign(space.dim, Rational(1));
  }
  SparseOp unit(int i, int j) const {
    SparseOp X;
    for (uint32_t a = 0; a < masks.size(); ++a) {
      uint32_t m = masks[a];
      if (!((m >> j) & 1)) continue;
      if (i == j) {
        add_entry(X, {a, a}, Gaussian(1));
        continue;
      }
      if ((m >> i) & 1) continue;
      int lo = std::min(i, j), hi = std::max(i, j);
      uint32_t between = m & (((1u << hi) - 1) & ~((1u << (lo + 1)) - 1));
      int sign = std::popcount(between) % 2 ? -1 : 1;
      add_entry(X, {index.at((m & ~(1u << j)) | (1u << i)), a}, Gaussian(sign));
    }
    return X;
  }
  SparseOp hodge() const {
    SparseOp L;
    uint32_t all = (1u << n) - 1;
    for (uint32_t a = 0; a < masks.size(); ++a) {
      uint32_t x = masks[a], c = all & ~x;
      int inv = 0;
      for (int i = 0; i < n; ++i)
        if ((x >> i) & 1) inv += std::popcount(c & ((1u << i) - 1));
      add_entry(L, {index.at(c), a}, Gaussian(inv % 2 ? -1 : 1));
    }
    return L;
  }
};

inline SparseOp pauli_op(const Pauli& P) {
  SparseOp X;
  for (uint32_t j = 0; j < (1u << P.n); ++j) {
    auto [i, k] = P.apply(j);
    X.emplace(Key{i, j}, Gaussian::ipow(k));
  }
  return X;
}

// restriction to the even-parity basis states, re-indexed
inline std::vector<uint32_t> even_states(int n) {
  std::vector<uint32_t> v;
  for (uint32_t j = 0; j < (1u << n); ++j)
    if (std::popcount(j) % 2 == 0) v.push_back(j);
  return v;
}

inline SparseOp restrict_even(int n, const Pauli& P) {
  auto st = even_states(n);
  std::map<uint32_t, uint32_t> pos;
  for (uint32_t a = 0; a < st.size(); ++a) pos[st[a]] = a;
  SparseOp X;
  for (uint32_t a = 0; a < st.size(); ++a) {
    auto [i, k] = P.apply(st[a]);
    auto it = pos.find(i);
    if (it != pos.end()) X.emplace(Key{it->second, a}, Gaussian::ipow(k));
  }
  return X;
}

// ---------- bases ----------

struct OperatorBasis {
  FamilySpec family;
  long t = 0;
  std::shared_ptr<const Space> space;
  std::vector<SparseOp> ops;
  Matrix<Rational> gram;

  bool diagonal_gram() const {
    for (size_t i = 0; i < gram.rows(); ++i)
      for (size_t j = 0; j < gram.cols(); ++j)
        if (i != j && !gram(i, j).is_zero()) return false;
    return true;
  }
};

inline std::optional<std::string> ceiling_error(const FamilySpec& f) {
  require_valid(f);
  bool ok = true;
  switch (f.kind) {
    case FamilyKind::QHamming: ok = (f.q == 2 && f.n <= 3) || (f.q == 3 && f.n <= 2) || (f.n == 1 && f.q <= 9); break;
    case FamilyKind::Su2: ok = f.n <= 6; break;
    case FamilyKind::SuqSym: ok = f.q == 2 ? f.n <= 6 : (f.q == 3 ? f.n <= 3 : f.n <= 1 && f.q <= 6); break;
    case FamilyKind::SunExt: ok = f.n <= 6; break;
    case FamilyKind::CliffordOdd:
    case FamilyKind::CliffordEven:
    case FamilyKind::Spinorial: ok = f.n <= 4; break;
    case FamilyKind::Semispinorial: ok = f.n <= 5; break;
  }
  if (ok) return std::nullopt;
  return describe(f) + " exceeds the oracle size ceiling";
}

inline std::shared_ptr<const Space> family_space(const FamilySpec& f) {
  switch (f.kind) {
    case FamilyKind::QHamming: {
      auto S = orthonormal_space(static_cast<size_t>(ipow(f.q, f.n).get_ui()));
      return std::make_shared<Space>(S);
    }
    case FamilyKind::Su2: return std::make_shared<Space>(SymRep(2, f.n).space);
    case FamilyKind::SuqSym: return std::make_shared<Space>(SymRep(f.q, f.n).space);
    case FamilyKind::SunExt: return std::make_shared<Space>(ExtRep(f.n, f.w).space);
    case FamilyKind::Semispinorial: return std::make_shared<Space>(orthonormal_space(size_t(1) << (f.n - 1)));
    default: return std::make_shared<Space>(orthonormal_space(size_t(1) << f.n));
  }
}

namespace detail {

using Vec = std::map<uint64_t, Gaussian>;

inline Vec flatten(const SparseOp& X) {
  Vec v;
  for (auto& [k, x] : X) v.emplace((uint64_t(k.first) << 32) | k.second, x);
  return v;
}

// incremental row echelon over sparse vectors
struct Echelon {
  std::map<uint64_t, Vec> rows;
  bool insert(Vec v) {
    for (auto it = v.begin(); it != v.end();) {
      auto p = rows.find(it->first);
      if (p == rows.end()) {
        ++it;
        continue;
      }
      uint64_t key = it->first;
      Gaussian c = it->second;
      for (auto& [k, x] : p->second) {
        auto& e = v[k];
        e -= c * x;
        if (e.is_zero()) v.erase(k);
      }
      it = v.upper_bound(key);
    }
    if (v.empty()) return false;
    Gaussian inv = v.begin()->second.inverse();
    for (auto& [k, x] : v) x *= inv;
    uint64_t pivot = v.begin()->first;
    rows.emplace(pivot, std::move(v));
    return true;
  }
};

inline std::vector<int> op_weight(const Space& S, const SparseOp& X) {
  if (S.weight.empty() || X.empty()) return {};
  auto k = X.begin()->first;
  std::vector<int> w(S.weight[k.first].size());
  for (size_t i = 0; i < w.size(); ++i) w[i] = S.weight[k.first][i] - S.weight[k.second][i];
  return w;
}

// lowering closure from a highest-weight vector; count is the target dimension
template <class Lower>
std::vector<SparseOp> closure(const Space& S, SparseOp top, const std::vector<Lower>& lowering, size_t count) {
  std::map<std::vector<int>, Echelon> spaces;
  std::vector<SparseOp> out;
  std::vector<size_t> queue;
  auto offer = [&](SparseOp X) {
    if (X.empty()) return;
    if (!spaces[op_weight(S, X)].insert(flatten(X))) return;
    out.push_back(std::move(X));
    queue.push_back(out.size() - 1);
  };
  offer(std::move(top));
  for (size_t q = 0; q < queue.size() && out.size() < count; ++q)
    for (auto& L : lowering) {
      if (out.size() >= count) break;
      offer(commutator(L, out[queue[q]]));
    }
  if (out.size() != count) throw std::logic_error("operator space closure has the wrong dimension");
  return out;
}

inline std::vector<SparseOp> traceless_qudit(long q) {
  std::vector<SparseOp> v;
  for (uint32_t a = 0; a < q; ++a)
    for (uint32_t b = 0; b < q; ++b)
      if (a != b) v.push_back(SparseOp{{Key{a, b}, Gaussian(1)}});
  // generalized Gell-Mann diagonals diag(1,...,1,-k,0,...)
  for (uint32_t k = 1; k < q; ++k) {
    SparseOp d;
    for (uint32_t a = 0; a < k; ++a) d.emplace(Key{a, a}, Gaussian(1));
    d.emplace(Key{k, k}, Gaussian(-static_cast<int>(k)));
    v.push_back(d);
  }
  return v;
}

inline SparseOp kron(const SparseOp& A, const SparseOp& B, uint32_t db) {
  SparseOp C;
  for (auto& [ka, va] : A)
    for (auto& [kb, vb] : B) C.emplace(Key{ka.first * db + kb.first, ka.second * db + kb.second}, va * vb);
  return C;
}

inline std::vector<uint64_t> labels_of_weight(int len, int w) {
  std::vector<uint64_t> v;
  for (uint64_t x = 0; x < (uint64_t(1) << len); ++x)
    if (std::popcount(x) == w) v.push_back(x);
  return v;
}

inline Matrix<Rational> gram_of(const Space& S, const std::vector<SparseOp>& ops) {
  Matrix<Rational> G(ops.size(), ops.size());
  std::vector<std::vector<int>> w;
  for (auto& X : ops) w.push_back(op_weight(S, X));
  for (size_t i = 0; i < ops.size(); ++i)
    for (size_t j = i; j < ops.size(); ++j) {
      if (w[i] != w[j]) continue;
      Gaussian v = hs(S, ops[i], ops[j]);
      if (!v.im().is_zero()) throw std::logic_error("non-real Gram entry");
      G(i, j) = v.re();
      G(j, i) = v.re();
    }
  return G;
}

}  // namespace detail

inline OperatorBasis v_basis(const FamilySpec& f, long t) {
  if (auto e = ceiling_error(f)) throw std::invalid_argument(*e);
  auto prof = profile(f);
  if (t < 0 || t > prof.r) throw std::invalid_argument("t out of range for " + describe(f));
  const size_t count = static_cast<size_t>(prof.dim_V[t].get_ui());
  OperatorBasis B{f, t, family_space(f), {}, {}};
  const Space& S = *B.space;
  const int n = static_cast<int>(f.n);
  switch (f.kind) {
    case FamilyKind::QHamming: {
      auto tl = detail::traceless_qudit(f.q);
      SparseOp I1;
      for (uint32_t a = 0; a < f.q; ++a) I1.emplace(Key{a, a}, Gaussian(1));
      // choose positions (bitmask of size t) and a traceless factor at each
      for (uint32_t pos = 0; pos < (1u << n); ++pos) {
        if (std::popcount(pos) != t) continue;
        std::vector<SparseOp> partial{SparseOp{{Key{0, 0}, Gaussian(1)}}};
        uint32_t d = 1;
        for (int k = 0; k < n; ++k) {
          std::vector<SparseOp> next;
          for (auto& P : partial) {
            if ((pos >> k) & 1)
              for (auto& T : tl) next.push_back(detail::kron(P, T, static_cast<uint32_t>(f.q)));
            else
              next.push_back(detail::kron(P, I1, static_cast<uint32_t>(f.q)));
          }
          partial = std::move(next);
          d *= static_cast<uint32_t>(f.q);
        }
        for (auto& P : partial) B.ops.push_back(std::move(P));
      }
      break;
    }
    case FamilyKind::Su2: {
      SymRep R(2, f.n);
      SparseOp E = R.unit(0, 1), F = R.unit(1, 0), Et = identity(S);
      for (long i = 0; i < t; ++i) Et = mul(E, Et);
      SparseOp X = Et;
      for (long k = 0; k <= 2 * t; ++k) {
        B.ops.push_back(X);
        X = commutator(F, X);
      }
      break;
    }
    case FamilyKind::SuqSym: {
      SymRep R(f.q, f.n);
      SparseOp top = identity(S), E = R.unit(0, static_cast<int>(f.q - 1));
      for (long i = 0; i < t; ++i) top = mul(E, top);
      std::vector<SparseOp> lower;
      for (int i = 0; i < f.q; ++i)
        for (int j = 0; j < i; ++j) lower.push_back(R.unit(i, j));
      B.ops = detail::closure(S, top, lower, count);
      break;
    }
    case FamilyKind::SunExt: {
      ExtRep R(f.n, f.w);
      SparseOp top = identity(S);
      for (long k = 0; k < t; ++k) top = mul(top, R.unit(static_cast<int>(k), static_cast<int>(f.n - 1 - k)));
      std::vector<SparseOp> lower;
      for (int i = 0; i < f.n; ++i)
        for (int j = 0; j < i; ++j) lower.push_back(R.unit(i, j));
      B.ops = detail::closure(S, top, lower, count);
      break;
    }
    case FamilyKind::CliffordOdd:
    case FamilyKind::CliffordEven: {
      int len = f.kind == FamilyKind::CliffordOdd ? 2 * n + 1 : 2 * n;
      for (uint64_t x : detail::labels_of_weight(len, static_cast<int>(t)))
        B.ops.push_back(pauli_op(gamma_pauli(n, BinaryVector(x, len))));
      break;
    }
    case FamilyKind::Spinorial:
      for (uint64_t x : detail::labels_of_weight(2 * n + 1, static_cast<int>(2 * t)))
        B.ops.push_back(pauli_op(gamma_pauli(n, BinaryVector(x, 2 * n + 1))));
      break;
    case FamilyKind::Semispinorial:
      for (uint64_t x : detail::labels_of_weight(2 * n, static_cast<int>(2 * t))) {
        if (2 * t == n && (x & 1)) continue;  // P Gamma_x P and P Gamma_{x+1} P agree up to a phase
        B.ops.push_back(restrict_even(n, gamma_pauli(n, BinaryVector(x, 2 * n))));
      }
      break;
  }
  if (B.ops.size() != count) throw std::logic_error("basis size differs from dim V_t");
  B.gram = detail::gram_of(S, B.ops);
  return B;
}

// Gram-Schmidt within weight groups; result has a diagonal Gram
inline OperatorBasis orthogonalize(const OperatorBasis& B) {
  if (B.diagonal_gram()) return B;
  const Space& S = *B.space;
  OperatorBasis O{B.family, B.t, B.space, {}, {}};
  std::vector<std::vector<int>> w;
  std::vector<Rational> norms;
  for (auto& X : B.ops) {
    auto wx = detail::op_weight(S, X);
    SparseOp Y = X;
    for (size_t k = 0; k < O.ops.size(); ++k) {
      if (w[k] != wx) continue;
      Gaussian c = hs(S, O.ops[k], Y);
      if (!c.is_zero()) Y = axpy(std::move(Y), -c * Gaussian(norms[k].inverse()), O.ops[k]);
    }
    if (Y.empty()) throw std::logic_error("dependent spanning set");
    norms.push_back(hs(S, Y, Y).re());
    w.push_back(std::move(wx));
    O.ops.push_back(std::move(Y));
  }
  O.gram = Matrix<Rational>(O.ops.size(), O.ops.size());
  for (size_t i = 0; i < norms.size(); ++i) O.gram(i, i) = norms[i];
  return O;
}

// Phi_t(X) = sum_{k,l} (G^{-1})_{lk} F_k X F_l^*
inline SparseOp phi_apply(const OperatorBasis& B, const SparseOp& X) {
  const Space& S = *B.space;
  for (auto& [k, v] : X)
    if (k.first >= S.dim || k.second >= S.dim) throw std::invalid_argument("operator dimension mismatch");
  SparseOp out;
  if (B.diagonal_gram()) {
    for (size_t k = 0; k < B.ops.size(); ++k)
      out = axpy(std::move(out), Gaussian(B.gram(k, k).inverse()), mul(mul(B.ops[k], X), adjoint(S, B.ops[k])));
    return out;
  }
  auto Ginv = inverse(B.gram);
  if (!Ginv) throw std::logic_error("singular Gram matrix");
  std::vector<SparseOp> FX, Fs;
  for (auto& F : B.ops) {
    FX.push_back(mul(F, X));
    Fs.push_back(adjoint(S, F));
  }
  for (size_t k = 0; k < B.ops.size(); ++k)
    for (size_t l = 0; l < B.ops.size(); ++l) {
      const Rational& c = (*Ginv)(l, k);
      if (c.is_zero()) continue;
      out = axpy(std::move(out), Gaussian(c), mul(FX[k], Fs[l]));
    }
  return out;
}

inline SparseOp phi_apply(const OperatorBasis& B, const Matrix<Gaussian>& X) {
  if (X.rows() != B.space->dim || X.cols() != B.space->dim) throw std::invalid_argument("operator dimension mismatch");
  return phi_apply(B, sparse(X));
}

struct FamilyOracle {
  FamilySpec family;
  std::vector<OperatorBasis> raw, ortho;

  explicit FamilyOracle(const FamilySpec& f) : family(f) {
    long r = diameter(f);
    for (long t = 0; t <= r; ++t) {
      raw.push_back(v_basis(f, t));
      ortho.push_back(orthogonalize(raw.back()));
    }
  }
  const Space& space() const { return *raw.front().space; }
};

// tr(X^* Phi_t(X)) / tr(X^* X) with X the first spanning element of V_j; also checks X is an eigenvector
inline Rational wtj_bruteforce(const FamilyOracle& O, long t, long j, bool* eigen_ok = nullptr) {
  const Space& S = O.space();
  const SparseOp& X = O.raw.at(j).ops.front();
  SparseOp Y = phi_apply(O.ortho.at(t), X);
  Gaussian num = hs(S, X, Y), den = hs(S, X, X);
  Gaussian v = num * den.inverse();
  if (!v.im().is_zero()) throw std::logic_error("non-real eigenvalue");
  if (eigen_ok) *eigen_ok = axpy(Y, -v, X).empty();
  return v.re();
}

inline Rational wtj_bruteforce(const FamilySpec& f, long t, long j) { return wtj_bruteforce(FamilyOracle(f), t, j); }

struct Report {
  FamilySpec family;
  std::string check;
  bool pass = true;
  std::vector<std::string> mismatches;
  std::optional<Matrix<Rational>> brute;
  std::vector<int> lambda;
};

inline Report verify_wtj(const FamilyOracle& O) {
  Report rep{O.family, "wtj", true, {}, {}, {}};
  auto W = wtj_matrix(O.family);
  long r = W->r();
  Matrix<Rational> M(r + 1, r + 1);
  for (long t = 0; t <= r; ++t)
    for (long j = 0; j <= r; ++j) {
      bool eig = false;
      M(t, j) = wtj_bruteforce(O, t, j, &eig);
      if (!eig) {
        rep.pass = false;
        rep.mismatches.push_back("W[" + std::to_string(t) + "][" + std::to_string(j) + "]: V_j element is not an eigenvector");
      }
      if (M(t, j) != (*W)(t, j)) {
        rep.pass = false;
        rep.mismatches.push_back("W[" + std::to_string(t) + "][" + std::to_string(j) + "]: brute " + M(t, j).str() +
                                 " vs formula " + (*W)(t, j).str());
      }
    }
  rep.brute = M;
  return rep;
}

inline Report verify_wtj(const FamilySpec& f) { return verify_wtj(FamilyOracle(f)); }

// the conjugation isometry Lambda for a self-dual family
inline SparseOp lambda_operator(const FamilySpec& f) {
  if (!is_self_dual(f)) throw std::invalid_argument(describe(f) + " is not self-dual");
  const int n = static_cast<int>(f.n);
  auto gamma_y = [n](int len) {
    BinaryVector y(0, len);
    for (int k = n; k < 2 * n; ++k) y.set(k, true);
    return gamma_pauli(n, y);
  };
  switch (f.kind) {
    case FamilyKind::QHamming: {
      Pauli Y{n, 0, 0, 0};
      for (int q = 1; q <= n; ++q) {
        Pauli s{n, qubit_mask(n, q), qubit_mask(n, q), 1};  // sigma_y = i X Z
        Y = Y * s;
      }
      return pauli_op(Y);
    }
    case FamilyKind::Su2:
    case FamilyKind::SuqSym: {
      SymRep R(2, f.n);
      SparseOp L;
      for (auto& [m, a] : R.index) L.emplace(Key{R.index.at({m[1], m[0]}), a}, Gaussian(m[0] % 2 ? -1 : 1));
      return L;
    }
    case FamilyKind::SunExt: return ExtRep(f.n, f.w).hodge();
    case FamilyKind::CliffordEven: return pauli_op(gamma_y(2 * n));
    case FamilyKind::CliffordOdd:
    case FamilyKind::Spinorial: return pauli_op(gamma_y(2 * n + 1));
    case FamilyKind::Semispinorial: return restrict_even(n, gamma_y(2 * n));
  }
  throw std::logic_error("unreachable");
}

// T(X) = Lambda conj(X) Lambda^* is antilinear; on V_j it satisfies T(X) = lambda_j X^* (so T(X) = lambda_j X for
// self-adjoint X). Returns lambda_j per j, or nullopt where no such scalar exists.
inline std::vector<std::optional<Gaussian>> conjugation_scalars(const FamilyOracle& O, const SparseOp& L) {
  const Space& S = O.space();
  SparseOp Ls = adjoint(S, L);
  std::vector<std::optional<Gaussian>> out;
  for (auto& B : O.raw) {
    std::optional<Gaussian> lam;
    bool ok = true;
    for (auto& X0 : B.ops) {
      SparseOp X = adjoint(S, X0);
      SparseOp T = mul(mul(L, conjugate(X0)), Ls);
      auto it = T.empty() ? X.end() : X.find(T.begin()->first);
      if (it == X.end()) {
        ok = false;
        break;
      }
      Gaussian c = T.begin()->second * it->second.inverse();
      if (!axpy(T, -c, X).empty() || (lam && !(*lam == c))) {
        ok = false;
        break;
      }
      lam = c;
    }
    out.push_back(ok ? lam : std::nullopt);
  }
  return out;
}

inline Report verify_lambda(const FamilyOracle& O) {
  Report rep{O.family, "lambda", true, {}, {}, {}};
  auto sig = lambda_signature(O.family);
  if (!sig) throw std::invalid_argument(describe(O.family) + " is not self-dual");
  auto sc = conjugation_scalars(O, lambda_operator(O.family));
  for (size_t j = 0; j < sc.size(); ++j) {
    int found = 0;
    if (sc[j] && *sc[j] == Gaussian(1)) found = 1;
    if (sc[j] && *sc[j] == Gaussian(-1)) found = -1;
    rep.lambda.push_back(found);
    if (found != sig->lambda[j]) {
      rep.pass = false;
      rep.mismatches.push_back("lambda[" + std::to_string(j) + "]: oracle " +
                               (sc[j] ? sc[j]->str() : std::string("not a scalar")) + " vs catalog " +
                               std::to_string(sig->lambda[j]));
    }
  }
  return rep;
}

inline Report verify_lambda(const FamilySpec& f) { return verify_lambda(FamilyOracle(f)); }

}  // namespace qlp::oracle
