#ifndef POLYSOL_INTERVAL_HPP
#define POLYSOL_INTERVAL_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "polysol/ring.hpp"

namespace polysol {

namespace rounding {

inline double next_down(double x) {
  return std::nextafter(x, -std::numeric_limits<double>::infinity());
}

inline double next_up(double x) {
  return std::nextafter(x, std::numeric_limits<double>::infinity());
}

// Knuth's TwoSum error term: a + b = s + err exactly.
inline double two_sum_err(double a, double b, double s) {
  const double bb = s - a;
  return (a - (s - bb)) + (b - bb);
}

// Directed-rounded scalar kernels. Each computes the round-to-nearest result
// plus its exact error term (TwoSum / FMA), then nudges one ulp only when the
// nearest result lands on the wrong side. Exactly representable results are
// returned unchanged, so e.g. [1,2]+[3,4] keeps the endpoints 4 and 6.
inline double add_down(double a, double b) {
  const double s = a + b;
  if (!std::isfinite(s)) return s == std::numeric_limits<double>::infinity() ? std::numeric_limits<double>::max() : s;
  return two_sum_err(a, b, s) < 0 ? next_down(s) : s;
}

inline double add_up(double a, double b) {
  const double s = a + b;
  if (!std::isfinite(s)) return s == -std::numeric_limits<double>::infinity() ? std::numeric_limits<double>::lowest() : s;
  return two_sum_err(a, b, s) > 0 ? next_up(s) : s;
}

inline double mul_down(double a, double b) {
  const double p = a * b;
  if (!std::isfinite(p)) return p == std::numeric_limits<double>::infinity() ? std::numeric_limits<double>::max() : p;
  return std::fma(a, b, -p) < 0 ? next_down(p) : p;
}

inline double mul_up(double a, double b) {
  const double p = a * b;
  if (!std::isfinite(p)) return p == -std::numeric_limits<double>::infinity() ? std::numeric_limits<double>::lowest() : p;
  return std::fma(a, b, -p) > 0 ? next_up(p) : p;
}

inline double div_down(double a, double b) {
  const double q = a / b;
  if (!std::isfinite(q)) return q == std::numeric_limits<double>::infinity() ? std::numeric_limits<double>::max() : q;
  const double r = std::fma(q, b, -a);  // q*b - a, exact
  const bool q_too_high = (r != 0) && ((r > 0) == (b > 0));
  return q_too_high ? next_down(q) : q;
}

inline double div_up(double a, double b) {
  const double q = a / b;
  if (!std::isfinite(q)) return q == -std::numeric_limits<double>::infinity() ? std::numeric_limits<double>::lowest() : q;
  const double r = std::fma(q, b, -a);
  const bool q_too_low = (r != 0) && ((r > 0) == (b < 0));
  return q_too_low ? next_up(q) : q;
}

}  // namespace rounding

// Closed interval [lo, hi] of doubles with outward rounding. Every arithmetic
// result contains the exact real result of the operation on any members of
// the operands.
class Interval {
 public:
  Interval() : lo_(0.0), hi_(0.0) {}

  explicit Interval(double point) : lo_(point), hi_(point) {
    if (!std::isfinite(point)) throw std::invalid_argument("interval endpoint must be finite");
  }

  Interval(double lo, double hi) : lo_(lo), hi_(hi) {
    if (!(lo <= hi)) throw std::invalid_argument("interval requires lo <= hi");
  }

  double lo() const { return lo_; }
  double hi() const { return hi_; }
  double width() const { return rounding::add_up(hi_, -lo_); }

  bool contains(double v) const { return lo_ <= v && v <= hi_; }
  bool contains_zero() const { return lo_ <= 0.0 && 0.0 <= hi_; }

  Interval operator-() const { return Interval(-hi_, -lo_); }

  friend Interval operator+(const Interval& a, const Interval& b) {
    return Interval(rounding::add_down(a.lo_, b.lo_), rounding::add_up(a.hi_, b.hi_));
  }

  friend Interval operator-(const Interval& a, const Interval& b) { return a + (-b); }

  friend Interval operator*(const Interval& a, const Interval& b) {
    const double down = std::min(
        std::min(rounding::mul_down(a.lo_, b.lo_), rounding::mul_down(a.lo_, b.hi_)),
        std::min(rounding::mul_down(a.hi_, b.lo_), rounding::mul_down(a.hi_, b.hi_)));
    const double up = std::max(
        std::max(rounding::mul_up(a.lo_, b.lo_), rounding::mul_up(a.lo_, b.hi_)),
        std::max(rounding::mul_up(a.hi_, b.lo_), rounding::mul_up(a.hi_, b.hi_)));
    return Interval(down, up);
  }

  friend Interval operator/(const Interval& a, const Interval& b) {
    if (b.contains_zero()) throw std::invalid_argument("division by interval containing zero");
    const double down = std::min(
        std::min(rounding::div_down(a.lo_, b.lo_), rounding::div_down(a.lo_, b.hi_)),
        std::min(rounding::div_down(a.hi_, b.lo_), rounding::div_down(a.hi_, b.hi_)));
    const double up = std::max(
        std::max(rounding::div_up(a.lo_, b.lo_), rounding::div_up(a.lo_, b.hi_)),
        std::max(rounding::div_up(a.hi_, b.lo_), rounding::div_up(a.hi_, b.hi_)));
    return Interval(down, up);
  }

  Interval& operator+=(const Interval& o) { return *this = *this + o; }
  Interval& operator-=(const Interval& o) { return *this = *this - o; }
  Interval& operator*=(const Interval& o) { return *this = *this * o; }
  Interval& operator/=(const Interval& o) { return *this = *this / o; }

  friend bool operator==(const Interval& a, const Interval& b) {
    return a.lo_ == b.lo_ && a.hi_ == b.hi_;
  }
  friend bool operator!=(const Interval& a, const Interval& b) { return !(a == b); }

 private:
  double lo_, hi_;
};

template <>
struct RingTraits<Interval> {
  static constexpr RingKind kind = RingKind::enclosure;
  static constexpr bool orderable = true;
  static const char* name() { return "interval"; }
  static Interval zero() { return Interval(); }
  static Interval one() { return Interval(1.0); }
  static Interval from_int(long long n) { return Interval(static_cast<double>(n)); }
  static bool is_zero(const Interval& x) { return x.lo() == 0.0 && x.hi() == 0.0; }
  static bool contains_zero(const Interval& x) { return x.contains_zero(); }
  static double magnitude(const Interval& x) { return std::max(std::abs(x.lo()), std::abs(x.hi())); }
  static bool definitely_positive(const Interval& x) { return x.lo() > 0.0; }
  static bool definitely_less(const Interval& a, const Interval& b) { return a.hi() < b.lo(); }
};

template <>
struct RingCaster<Interval, double> {
  static Interval cast(double x) { return Interval(x); }
};

template <>
struct RingCaster<Interval, long long> {
  static Interval cast(long long n) { return RingTraits<Interval>::from_int(n); }
};

}  // namespace polysol

#endif
