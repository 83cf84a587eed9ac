#include <gtest/gtest.h>

#include "qlp/wtj.hpp"

using namespace qlp;

namespace {

Rational R(long p, long q = 1) { return Rational(p, q); }

void expect_properties(const FamilySpec& f) {
  auto W = wtj_matrix(f);
  auto p = profile(f);
  long r = p.r;
  ASSERT_EQ(W->r(), r);
  EXPECT_EQ(W->entries * W->entries, Matrix<Rational>::identity(r + 1)) << describe(f);
  for (long t = 0; t <= r; ++t) {
    EXPECT_EQ((*W)(t, 0), Rational(p.dim_V[t], p.dim_H)) << describe(f);
    EXPECT_EQ((*W)(0, t), Rational(BigInt(1), p.dim_H)) << describe(f);
    for (long j = 0; j <= r; ++j)
      EXPECT_EQ((*W)(t, j) * Rational(p.dim_V[j]), (*W)(j, t) * Rational(p.dim_V[t])) << describe(f);
  }
}

// Krawtchouk values from the generating function (1 + (Q-1)z)^{n-j}(1 - z)^j, Q = q^2
Rational kraw(long q, long n, long t, long j) {
  std::vector<BigInt> poly{1};
  auto mul = [&](BigInt a0, BigInt a1) {
    std::vector<BigInt> out(poly.size() + 1, 0);
    for (size_t i = 0; i < poly.size(); ++i) {
      out[i] += poly[i] * a0;
      out[i + 1] += poly[i] * a1;
    }
    poly = out;
  };
  for (long i = 0; i < n - j; ++i) mul(1, q * q - 1);
  for (long i = 0; i < j; ++i) mul(1, -1);
  return Rational(poly[t], ipow(q, n));
}

// Clifford W by counting: (1/2^n)(-1)^{tj} sum over x of weight t of (-1)^{|x & y|}, y fixed of weight j
Rational clifford_count(long m, long n, long t, long j) {
  BigInt s = 0;
  uint64_t y = (uint64_t(1) << j) - 1;
  for (uint64_t x = 0; x < (uint64_t(1) << m); ++x)
    if (__builtin_popcountll(x) == t) s += (__builtin_popcountll(x & y) % 2) ? -1 : 1;
  return Rational(((t * j) % 2 ? -1 : 1) * s, ipow(2, n));
}

}  // namespace

TEST(Wtj, BinaryHammingOne) {
  auto W = wtj_matrix(FamilySpec::qhamming(2, 1));
  EXPECT_EQ((*W)(0, 0), R(1, 2));
  EXPECT_EQ((*W)(0, 1), R(1, 2));
  EXPECT_EQ((*W)(1, 0), R(3, 2));
  EXPECT_EQ((*W)(1, 1), R(-1, 2));
}

TEST(Wtj, Su2Two) {
  auto W = wtj_matrix(FamilySpec::su2(2));
  Matrix<Rational> e(3, 3);
  long v[3][3][2] = {{{1, 3}, {1, 3}, {1, 3}}, {{1, 1}, {1, 2}, {-1, 2}}, {{5, 3}, {-5, 6}, {1, 6}}};
  for (int t = 0; t < 3; ++t)
    for (int j = 0; j < 3; ++j) e(t, j) = R(v[t][j][0], v[t][j][1]);
  EXPECT_EQ(W->entries, e);
}

TEST(Wtj, CliffordOddRowOne) {
  for (long n = 1; n <= 12; ++n) {
    auto W = wtj_matrix(FamilySpec::clifford_odd(n));
    for (long j = 0; j <= n; ++j)
      EXPECT_EQ((*W)(1, j), Rational((j % 2 ? -1 : 1) * (2 * n + 1 - 2 * j), 1) / pow2(n));
  }
}

TEST(Wtj, HammingRowOne) {
  for (long q = 2; q <= 4; ++q)
    for (long n = 1; n <= 6; ++n) {
      auto W = wtj_matrix(FamilySpec::qhamming(q, n));
      for (long j = 0; j <= n; ++j)
        EXPECT_EQ((*W)(1, j), Rational((q * q - 1) * n - q * q * j, 1) / Rational(ipow(q, n)));
    }
}

TEST(Wtj, HammingMatchesGeneratingFunction) {
  for (long q = 2; q <= 3; ++q)
    for (long n = 1; n <= 7; ++n) {
      auto W = wtj_matrix(FamilySpec::qhamming(q, n));
      for (long t = 0; t <= n; ++t)
        for (long j = 0; j <= n; ++j) EXPECT_EQ((*W)(t, j), kraw(q, n, t, j));
    }
}

TEST(Wtj, CliffordMatchesCounting) {
  for (long n = 1; n <= 5; ++n) {
    auto Wo = wtj_matrix(FamilySpec::clifford_odd(n));
    auto We = wtj_matrix(FamilySpec::clifford_even(n));
    for (long t = 0; t <= n; ++t)
      for (long j = 0; j <= n; ++j) EXPECT_EQ((*Wo)(t, j), clifford_count(2 * n + 1, n, t, j));
    for (long t = 0; t <= 2 * n; ++t)
      for (long j = 0; j <= 2 * n; ++j) EXPECT_EQ((*We)(t, j), clifford_count(2 * n, n, t, j));
  }
}

TEST(Wtj, TopRowIsUniform) {
  for (auto f : {FamilySpec::su_sym(3, 4), FamilySpec::su_ext(7, 3), FamilySpec::spinorial(3)}) {
    auto W = wtj_matrix(f);
    for (long j = 0; j <= W->r(); ++j) EXPECT_EQ((*W)(0, j), Rational(BigInt(1), profile(f).dim_H));
  }
}

TEST(Wtj, PropertiesOverGrid) {
  for (long n = 1; n <= 8; ++n) {
    expect_properties(FamilySpec::qhamming(2, n));
    expect_properties(FamilySpec::qhamming(3, n));
  }
  for (long n = 1; n <= 30; ++n) expect_properties(FamilySpec::su2(n));
  for (long n = 1; n <= 12; ++n) {
    expect_properties(FamilySpec::su_sym(3, n));
    expect_properties(FamilySpec::clifford_odd(n));
    expect_properties(FamilySpec::clifford_even(n));
    expect_properties(FamilySpec::spinorial(n));
    if (n >= 2) expect_properties(FamilySpec::semispinorial(n));
  }
  for (long n = 2; n <= 12; ++n)
    for (long w = 1; w < n; ++w) expect_properties(FamilySpec::su_ext(n, w));
}

TEST(Wtj, SymmetricWithTwoColorsIsSu2) {
  for (long n = 1; n <= 10; ++n)
    EXPECT_EQ(wtj_matrix(FamilySpec::su_sym(2, n))->entries, wtj_matrix(FamilySpec::su2(n))->entries);
}

TEST(Wtj, SpinorialConsistency) {
  for (long n : {1, 3, 5, 8}) EXPECT_TRUE(spinorial_consistency(n));
}

TEST(Wtj, CacheSharesInstances) {
  EXPECT_EQ(wtj_matrix(FamilySpec::su2(9)).get(), wtj_matrix(FamilySpec::su2(9)).get());
}

TEST(Lambda, Catalog) {
  EXPECT_EQ(lambda_signature(FamilySpec::qhamming(2, 3))->lambda, (std::vector<int>{1, -1, 1, -1}));
  EXPECT_EQ(lambda_signature(FamilySpec::clifford_even(2))->lambda, (std::vector<int>{1, 1, -1, -1, 1}));
  EXPECT_FALSE(lambda_signature(FamilySpec::qhamming(3, 2)).has_value());
  EXPECT_FALSE(lambda_signature(FamilySpec::su_sym(3, 2)).has_value());
  EXPECT_FALSE(lambda_signature(FamilySpec::su_ext(5, 2)).has_value());
  EXPECT_FALSE(lambda_signature(FamilySpec::semispinorial(5)).has_value());
  EXPECT_EQ(lambda_signature(FamilySpec::su_ext(6, 3))->lambda, (std::vector<int>{1, -1, 1, -1}));
  EXPECT_EQ(lambda_signature(FamilySpec::semispinorial(4))->lambda, (std::vector<int>{1, -1, 1}));
  for (long n = 1; n <= 6; ++n) {
    auto s = lambda_signature(FamilySpec::clifford_odd(n));
    EXPECT_EQ(s->lambda[0], 1);
    EXPECT_EQ(static_cast<long>(s->lambda.size()), n + 1);
  }
}
