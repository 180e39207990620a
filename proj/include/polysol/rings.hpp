#ifndef POLYSOL_RINGS_HPP
#define POLYSOL_RINGS_HPP

#include "polysol/complex.hpp"
#include "polysol/interval.hpp"
#include "polysol/rational.hpp"
#include "polysol/ring.hpp"

namespace polysol {

using ComplexDouble = Complex<double>;
using ComplexRational = Complex<Rational>;

template <>
struct RingCaster<ComplexDouble, Rational> {
  static ComplexDouble cast(const Rational& x) { return ComplexDouble(x.to_double_nearest()); }
};

template <>
struct RingCaster<ComplexDouble, ComplexRational> {
  static ComplexDouble cast(const ComplexRational& x) {
    return ComplexDouble(x.real().to_double_nearest(), x.imag().to_double_nearest());
  }
};

}  // namespace polysol

#endif
