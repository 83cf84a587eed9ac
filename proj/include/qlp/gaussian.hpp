#pragma once

#include "qlp/rational.hpp"

namespace qlp {

class Gaussian {
 public:
  Gaussian() = default;
  Gaussian(int v) : re_(v) {}
  Gaussian(Rational re) : re_(std::move(re)) {}
  Gaussian(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static Gaussian i() { return {Rational(0), Rational(1)}; }
  // i^k
  static Gaussian ipow(int k) {
    switch (((k % 4) + 4) % 4) {
      case 0: return {1, 0};
      case 1: return {0, 1};
      case 2: return {-1, 0};
      default: return {0, -1};
    }
  }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }
  Rational norm2() const { return re_ * re_ + im_ * im_; }
  Gaussian conj() const { return {re_, -im_}; }
  Gaussian inverse() const {
    Rational n = norm2();
    if (n.is_zero()) throw std::domain_error("division by zero");
    return {re_ / n, -im_ / n};
  }

  Gaussian operator-() const { return {-re_, -im_}; }
  Gaussian& operator+=(const Gaussian& o) { re_ += o.re_; im_ += o.im_; return *this; }
  Gaussian& operator-=(const Gaussian& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
  Gaussian& operator*=(const Gaussian& o) {
    if (o.im_.is_zero()) {
      re_ *= o.re_;
      im_ *= o.re_;
      return *this;
    }
    Rational r = re_ * o.re_ - im_ * o.im_;
    im_ = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    return *this;
  }
  Gaussian& operator/=(const Gaussian& o) { return *this *= o.inverse(); }
  friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
  friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
  friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
  friend Gaussian operator/(Gaussian a, const Gaussian& b) { return a /= b; }
  friend bool operator==(const Gaussian& a, const Gaussian& b) = default;

  std::string str() const {
    if (im_.is_zero()) return re_.str();
    std::string s = re_.is_zero() ? "" : re_.str();
    if (im_.sign() > 0 && !s.empty()) s += "+";
    if (im_ == Rational(-1)) return s + "-i";
    if (im_ == Rational(1)) return s + "i";
    return s + im_.str() + "i";
  }
  friend std::ostream& operator<<(std::ostream& os, const Gaussian& g) { return os << g.str(); }

 private:
  Rational re_, im_;
};

using GaussianRational = Gaussian;

inline Gaussian conj(const Gaussian& g) { return g.conj(); }
inline bool is_zero(const Gaussian& g) { return g.is_zero(); }

}  // namespace qlp
