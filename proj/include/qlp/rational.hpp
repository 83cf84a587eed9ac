#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qlp {

using BigInt = mpz_class;

class Rational {
 public:
  Rational() = default;
  Rational(int v) : v_(v) {}
  Rational(long v) : v_(v) {}
  Rational(long long v) : v_(BigInt(std::to_string(v))) {}
  Rational(unsigned long v) : v_(v) {}
  Rational(const BigInt& v) : v_(v) {}
  template <class U>
  Rational(const __gmp_expr<mpz_t, U>& e) : v_(BigInt(e)) {}
  Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::domain_error("zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}
  explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

  // "p/q" or "p", optional sign
  static Rational parse(std::string_view s) {
    std::string str(s);
    auto bad = [&] { return std::invalid_argument("bad rational: '" + str + "'"); };
    if (str.empty()) throw bad();
    auto slash = str.find('/');
    auto is_int = [](const std::string& t, bool allow_sign) {
      size_t i = 0;
      if (allow_sign && i < t.size() && (t[i] == '-' || t[i] == '+')) ++i;
      if (i == t.size()) return false;
      for (; i < t.size(); ++i)
        if (t[i] < '0' || t[i] > '9') return false;
      return true;
    };
    std::string num = str.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : str.substr(slash + 1);
    if (!is_int(num, true) || !is_int(den, false)) throw bad();
    if (num[0] == '+') num.erase(0, 1);
    BigInt d(den);
    if (d == 0) throw std::domain_error("zero denominator: '" + str + "'");
    return Rational(BigInt(num), d);
  }

  const mpq_class& value() const { return v_; }
  BigInt num() const { return v_.get_num(); }
  BigInt den() const { return v_.get_den(); }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  Rational abs() const { return Rational(::abs(v_)); }
  Rational inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    return Rational(1 / v_);
  }
  BigInt floor() const {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    return q;
  }
  double to_double() const { return v_.get_d(); }

  std::string str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

  // round half up to `digits` decimals
  std::string decimal(int digits) const {
    BigInt scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    mpq_class x = v_ * scale + mpq_class(1, 2);
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    bool neg = q < 0;
    if (neg) q = -q;
    std::string s = q.get_str();
    if (digits > 0) {
      if (s.size() <= static_cast<size_t>(digits)) s.insert(0, digits + 1 - s.size(), '0');
      s.insert(s.size() - digits, ".");
    }
    return neg ? "-" + s : s;
  }

  Rational operator-() const { return Rational(-v_); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    v_ /= o.v_;
    return *this;
  }
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class v_;
};

inline Rational conj(const Rational& r) { return r; }
inline bool is_zero(const Rational& r) { return r.is_zero(); }

inline BigInt factorial(long n) {
  if (n < 0) throw std::domain_error("negative factorial");
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

inline BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

inline BigInt ipow(const BigInt& b, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

inline Rational pow2(long e) {
  BigInt p = ipow(2, static_cast<unsigned long>(e < 0 ? -e : e));
  return e < 0 ? Rational(BigInt(1), p) : Rational(p);
}

}  // namespace qlp
