#ifndef POLYSOL_RING_HPP
#define POLYSOL_RING_HPP

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace polysol {

// exact: arithmetic is exact, zero tests are meaningful (Rational, Complex<Rational>)
// floating: IEEE double based, residuals judged by magnitude (double, Complex<double>)
// enclosure: interval coefficients, residuals judged by zero containment
enum class RingKind { exact, floating, enclosure };

template <class T>
struct RingTraits;  // specialized per coefficient ring

template <>
struct RingTraits<double> {
  static constexpr RingKind kind = RingKind::floating;
  static constexpr bool orderable = true;
  static const char* name() { return "double"; }
  static double zero() { return 0.0; }
  static double one() { return 1.0; }
  static double from_int(long long n) { return static_cast<double>(n); }
  static bool is_zero(double x) { return x == 0.0; }
  static bool contains_zero(double x) { return x == 0.0; }
  static double magnitude(double x) { return std::abs(x); }
  static bool definitely_positive(double x) { return x > 0.0; }
  static bool definitely_less(double a, double b) { return a < b; }
};

template <class T>
T ring_zero() { return RingTraits<T>::zero(); }

template <class T>
T ring_one() { return RingTraits<T>::one(); }

template <class T>
T from_int(long long n) { return RingTraits<T>::from_int(n); }

template <class T>
bool is_zero(const T& x) { return RingTraits<T>::is_zero(x); }

// For exact/floating rings this is the plain zero test; for intervals it is
// the membership test that guards divisions.
template <class T>
bool contains_zero(const T& x) { return RingTraits<T>::contains_zero(x); }

template <class T>
double magnitude(const T& x) { return RingTraits<T>::magnitude(x); }

// Orderable rings only. For intervals these hold when every member of the
// enclosure satisfies the comparison.
template <class T>
bool definitely_positive(const T& x) { return RingTraits<T>::definitely_positive(x); }

template <class T>
bool definitely_less(const T& a, const T& b) { return RingTraits<T>::definitely_less(a, b); }

// Value-preserving embeddings between rings. Specializations live next to the
// ring definitions; a missing specialization means there is no promotion path.
template <class To, class From>
struct RingCaster;

template <class T>
struct RingCaster<T, T> {
  static T cast(const T& x) { return x; }
};

template <class To, class From>
To ring_cast(const From& x) { return RingCaster<To, From>::cast(x); }

template <>
struct RingCaster<double, long long> {
  static double cast(long long n) { return static_cast<double>(n); }
};

template <class T>
void require_nonzero(const T& x, const char* what) {
  if (contains_zero(x)) throw std::invalid_argument(std::string(what) + " must be nonzero");
}

}  // namespace polysol

#endif
