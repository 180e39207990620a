#ifndef POLYSOL_COMPLEX_HPP
#define POLYSOL_COMPLEX_HPP

#include <cmath>
#include <stdexcept>

#include "polysol/ring.hpp"

namespace polysol {

// Complex numbers over an underlying real ring (double or Rational). Not
// std::complex: that template is only specified for floating-point types and
// this one has to carry exact rationals too.
template <class T>
class Complex {
 public:
  Complex() : re_(ring_zero<T>()), im_(ring_zero<T>()) {}
  Complex(T re) : re_(std::move(re)), im_(ring_zero<T>()) {}
  Complex(T re, T im) : re_(std::move(re)), im_(std::move(im)) {}

  static Complex i() { return Complex(ring_zero<T>(), ring_one<T>()); }

  const T& real() const { return re_; }
  const T& imag() const { return im_; }

  Complex conj() const { return Complex(re_, -im_); }

  Complex operator-() const { return Complex(-re_, -im_); }

  friend Complex operator+(const Complex& a, const Complex& b) {
    return Complex(a.re_ + b.re_, a.im_ + b.im_);
  }
  friend Complex operator-(const Complex& a, const Complex& b) {
    return Complex(a.re_ - b.re_, a.im_ - b.im_);
  }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return Complex(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
  }
  friend Complex operator/(const Complex& a, const Complex& b) {
    const T denom = b.re_ * b.re_ + b.im_ * b.im_;
    if (is_zero(denom)) throw std::invalid_argument("complex division by zero");
    const Complex num = a * b.conj();
    return Complex(num.re_ / denom, num.im_ / denom);
  }

  Complex& operator+=(const Complex& o) { return *this = *this + o; }
  Complex& operator-=(const Complex& o) { return *this = *this - o; }
  Complex& operator*=(const Complex& o) { return *this = *this * o; }
  Complex& operator/=(const Complex& o) { return *this = *this / o; }

  friend bool operator==(const Complex& a, const Complex& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const Complex& a, const Complex& b) { return !(a == b); }

 private:
  T re_, im_;
};

template <class T>
struct RingTraits<Complex<T>> {
  static constexpr RingKind kind = RingTraits<T>::kind;
  static constexpr bool orderable = false;
  static const char* name() {
    return kind == RingKind::floating ? "complex" : "complex-rational";
  }
  static Complex<T> zero() { return Complex<T>(); }
  static Complex<T> one() { return Complex<T>(ring_one<T>()); }
  static Complex<T> from_int(long long n) { return Complex<T>(RingTraits<T>::from_int(n)); }
  static bool is_zero(const Complex<T>& x) {
    return polysol::is_zero(x.real()) && polysol::is_zero(x.imag());
  }
  static bool contains_zero(const Complex<T>& x) { return is_zero(x); }
  static double magnitude(const Complex<T>& x) {
    return std::hypot(polysol::magnitude(x.real()), polysol::magnitude(x.imag()));
  }
};

template <class T>
struct RingCaster<Complex<T>, T> {
  static Complex<T> cast(const T& x) { return Complex<T>(x); }
};

template <class T>
struct RingCaster<Complex<T>, long long> {
  static Complex<T> cast(long long n) { return RingTraits<Complex<T>>::from_int(n); }
};

// Demotion; only legal when the imaginary part vanishes.
template <class T>
struct RingCaster<T, Complex<T>> {
  static T cast(const Complex<T>& x) {
    if (!is_zero(x.imag())) {
      throw std::invalid_argument("cannot convert complex value with nonzero imaginary part to real ring");
    }
    return x.real();
  }
};

}  // namespace polysol

#endif
