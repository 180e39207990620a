#ifndef POLYSOL_RATIONAL_HPP
#define POLYSOL_RATIONAL_HPP

#include <gmpxx.h>

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "polysol/interval.hpp"
#include "polysol/ring.hpp"

namespace polysol {

// Exact rational scalar backed by GMP. Always canonical: gcd-reduced with a
// positive denominator.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long long n) : v_(static_cast<long>(n)) {}

  Rational(long long num, long long den) : v_(static_cast<long>(num), static_cast<long>(den)) {
    if (den == 0) throw std::invalid_argument("rational denominator must be nonzero");
    v_.canonicalize();
  }

  explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

  // Exact value of a finite double (every finite double is a binary rational).
  static Rational from_double_exact(double x) {
    if (!std::isfinite(x)) throw std::invalid_argument("cannot convert non-finite double to rational");
    return Rational(mpq_class(x));
  }

  // base 10 always; mpz's base auto-detection would read leading zeros as octal
  static Rational from_integer_strings(const std::string& num, const std::string& den) {
    mpz_class n(num, 10), d(den, 10);
    if (d == 0) throw std::invalid_argument("rational denominator must be nonzero");
    mpq_class q(n, d);
    q.canonicalize();
    return Rational(std::move(q));
  }

  const mpz_class& numerator() const { return v_.get_num(); }
  const mpz_class& denominator() const { return v_.get_den(); }

  int sign() const { return sgn(v_); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }

  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.v_ == 0) throw std::invalid_argument("rational division by zero");
    return Rational(mpq_class(a.v_ / b.v_));
  }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  Rational abs() const { return Rational(mpq_class(::abs(v_))); }

  // Nearest double, ties to even. mpq_get_d truncates toward zero, so the
  // true nearest is that value or one of its neighbours; compare exactly.
  double to_double_nearest() const {
    const double approx = v_.get_d();
    if (!std::isfinite(approx)) return approx;
    double best = approx;
    mpq_class best_err = ::abs(mpq_class(v_ - mpq_class(approx)));
    for (double cand : {rounding::next_down(approx), rounding::next_up(approx)}) {
      if (!std::isfinite(cand)) continue;
      mpq_class err = ::abs(mpq_class(v_ - mpq_class(cand)));
      if (err < best_err) {
        best = cand;
        best_err = err;
      } else if (err == best_err && cand != best) {
        // exact midpoint: ties to even significand
        if (significand_is_even(cand) && !significand_is_even(best)) best = cand;
      }
    }
    return best;
  }

  // Tightest interval [a, b] with a <= *this <= b.
  Interval to_interval_tight() const {
    const double n = to_double_nearest();
    const mpq_class exact_n{n};
    if (exact_n == v_) return Interval(n);
    if (exact_n < v_) return Interval(n, rounding::next_up(n));
    return Interval(rounding::next_down(n), n);
  }

  std::string to_string() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

 private:
  static bool significand_is_even(double x) {
    int e = 0;
    const double m = std::frexp(std::abs(x), &e);
    return (static_cast<unsigned long long>(std::scalbn(m, 53)) & 1ull) == 0;
  }

  mpq_class v_;
};

template <>
struct RingTraits<Rational> {
  static constexpr RingKind kind = RingKind::exact;
  static constexpr bool orderable = true;
  static const char* name() { return "rational"; }
  static Rational zero() { return Rational(); }
  static Rational one() { return Rational(1); }
  static Rational from_int(long long n) { return Rational(n); }
  static bool is_zero(const Rational& x) { return x.sign() == 0; }
  static bool contains_zero(const Rational& x) { return x.sign() == 0; }
  static double magnitude(const Rational& x) { return std::abs(x.to_double_nearest()); }
  static bool definitely_positive(const Rational& x) { return x.sign() > 0; }
  static bool definitely_less(const Rational& a, const Rational& b) { return a < b; }
};

template <>
struct RingCaster<Rational, long long> {
  static Rational cast(long long n) { return Rational(n); }
};

template <>
struct RingCaster<double, Rational> {
  static double cast(const Rational& x) { return x.to_double_nearest(); }
};

template <>
struct RingCaster<Interval, Rational> {
  static Interval cast(const Rational& x) { return x.to_interval_tight(); }
};

}  // namespace polysol

#endif
