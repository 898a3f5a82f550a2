#pragma once

#include <complex>
#include <ostream>
#include <string>

#include "hypolab/rational.hpp"

namespace hypolab {

/// Complex number with exact rational real and imaginary parts.
class ExactComplex {
 public:
  ExactComplex() = default;
  ExactComplex(Rational re) : re_(std::move(re)) {}  // NOLINT: implicit real embedding
  ExactComplex(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}
  ExactComplex(long re) : re_(re) {}  // NOLINT
  ExactComplex(int re) : re_(re) {}   // NOLINT

  static ExactComplex i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  ExactComplex conj() const { return {re_, -im_}; }

  /// |x|^2, always rational.
  Rational norm_sq() const { return Rational(re_ * re_ + im_ * im_); }

  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

  ExactComplex operator-() const { return {-re_, -im_}; }

  ExactComplex& operator+=(const ExactComplex& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  ExactComplex& operator-=(const ExactComplex& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  ExactComplex& operator*=(const ExactComplex& o) {
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
  }
  ExactComplex& operator*=(const Rational& s) {
    re_ *= s;
    im_ *= s;
    return *this;
  }
  ExactComplex& operator/=(const ExactComplex& o) {
    const Rational d = o.norm_sq();
    if (sgn(d) == 0) throw std::domain_error("ExactComplex: division by zero");
    *this *= o.conj();
    re_ /= d;
    im_ /= d;
    return *this;
  }
  ExactComplex& operator/=(const Rational& s) {
    if (sgn(s) == 0) throw std::domain_error("ExactComplex: division by zero");
    re_ /= s;
    im_ /= s;
    return *this;
  }

  friend ExactComplex operator+(ExactComplex a, const ExactComplex& b) { return a += b; }
  friend ExactComplex operator-(ExactComplex a, const ExactComplex& b) { return a -= b; }
  friend ExactComplex operator*(ExactComplex a, const ExactComplex& b) { return a *= b; }
  friend ExactComplex operator*(ExactComplex a, const Rational& s) { return a *= s; }
  friend ExactComplex operator*(const Rational& s, ExactComplex a) { return a *= s; }
  friend ExactComplex operator/(ExactComplex a, const ExactComplex& b) { return a /= b; }
  friend ExactComplex operator/(ExactComplex a, const Rational& s) { return a /= s; }

  friend bool operator==(const ExactComplex& a, const ExactComplex& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  friend std::ostream& operator<<(std::ostream& os, const ExactComplex& z) {
    os << z.re_.get_str();
    if (!z.is_real()) os << (sgn(z.im_) < 0 ? " - " : " + ") << Rational(abs(z.im_)).get_str() << "i";
    return os;
  }

 private:
  Rational re_{0};
  Rational im_{0};
};

inline std::string to_string(const ExactComplex& z) {
  std::string s = z.re().get_str();
  if (!z.is_real()) s += (sgn(z.im()) < 0 ? "-" : "+") + Rational(abs(z.im())).get_str() + "i";
  return s;
}

}  // namespace hypolab
