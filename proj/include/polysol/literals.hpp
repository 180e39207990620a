#ifndef POLYSOL_LITERALS_HPP
#define POLYSOL_LITERALS_HPP

#include <cctype>
#include <charconv>
#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>

#include "polysol/rings.hpp"

// Coefficient literal grammar shared by problem files and output:
//   "3/8"        exact fraction
//   "0.375"      decimal (scientific notation allowed)
//   "2+3i"       complex; parts follow the real grammar, "i"/"-i" legal
//   "[0.1,0.2]"  interval; endpoints rounded outward
//   "pi"         expanded per coefficient ring
// Every literal is first read as an exact rational, then converted with the
// ring's own rounding, so e.g. "0.1" in interval mode encloses one tenth.

namespace polysol {

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

namespace literal_detail {

inline bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// 38 significant digits; error below 1e-30
inline Rational pi_rational() {
  static const Rational value = Rational::from_integer_strings(
      "31415926535897932384626433832795028842", "10000000000000000000000000000000000000");
  return value;
}

// value is exact; decimal "a.bEc" becomes (ab)/10^(len b) * 10^c
inline Rational parse_real_rational(std::string_view s) {
  if (s == "pi") return pi_rational();
  if (s == "-pi") return -pi_rational();

  std::string sign;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    if (s.front() == '-') sign = "-";
    s.remove_prefix(1);
  }
  if (s.empty()) throw ParseError("empty numeric literal");

  const size_t slash = s.find('/');
  if (slash != std::string_view::npos) {
    const std::string_view num = s.substr(0, slash);
    const std::string_view den = s.substr(slash + 1);
    if (!is_digits(num) || !is_digits(den)) throw ParseError("malformed fraction literal");
    try {
      return Rational::from_integer_strings(sign + std::string(num), std::string(den));
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
  }

  long long exp10 = 0;
  const size_t epos = s.find_first_of("eE");
  if (epos != std::string_view::npos) {
    const std::string_view etail = s.substr(epos + 1);
    std::string_view digits = etail;
    bool neg = false;
    if (!digits.empty() && (digits.front() == '+' || digits.front() == '-')) {
      neg = digits.front() == '-';
      digits.remove_prefix(1);
    }
    if (!is_digits(digits) || digits.size() > 6) throw ParseError("malformed exponent in numeric literal");
    std::from_chars(digits.data(), digits.data() + digits.size(), exp10);
    if (neg) exp10 = -exp10;
    s = s.substr(0, epos);
  }

  std::string mantissa;
  long long frac_digits = 0;
  const size_t dot = s.find('.');
  if (dot != std::string_view::npos) {
    const std::string_view ipart = s.substr(0, dot);
    const std::string_view fpart = s.substr(dot + 1);
    if (!is_digits(ipart) || !is_digits(fpart)) throw ParseError("malformed decimal literal");
    mantissa = std::string(ipart) + std::string(fpart);
    frac_digits = static_cast<long long>(fpart.size());
  } else {
    if (!is_digits(s)) throw ParseError("malformed numeric literal");
    mantissa = std::string(s);
  }

  std::string den = "1";
  std::string num = sign + mantissa;
  const long long shift = exp10 - frac_digits;
  if (shift >= 0) {
    num.append(static_cast<size_t>(shift), '0');
  } else {
    den.append(static_cast<size_t>(-shift), '0');
  }
  return Rational::from_integer_strings(num, den);
}

inline double checked_nearest(const Rational& q) {
  const double d = q.to_double_nearest();
  if (!std::isfinite(d)) throw ParseError("numeric literal out of double range");
  return d;
}

}  // namespace literal_detail

template <class T>
T parse_coefficient(std::string_view s);

namespace literal_detail {

inline bool is_pi_token(std::string_view s) { return s == "pi" || s == "-pi"; }

inline bool looks_complex(std::string_view s) {
  return !s.empty() && s.back() == 'i' && !is_pi_token(s);
}

}  // namespace literal_detail

template <>
inline Rational parse_coefficient<Rational>(std::string_view s) {
  if (literal_detail::looks_complex(s) || (!s.empty() && s.front() == '[')) {
    throw ParseError("literal '" + std::string(s) + "' is not valid in rational mode");
  }
  return literal_detail::parse_real_rational(s);
}

template <>
inline double parse_coefficient<double>(std::string_view s) {
  if (literal_detail::looks_complex(s) || (!s.empty() && s.front() == '[')) {
    throw ParseError("literal '" + std::string(s) + "' is not valid in double mode");
  }
  return literal_detail::checked_nearest(literal_detail::parse_real_rational(s));
}

template <>
inline Interval parse_coefficient<Interval>(std::string_view s) {
  if (literal_detail::is_pi_token(s)) {
    // M_PI rounds pi down; one ulp up is a rigorous enclosure
    const Interval enc(M_PI, rounding::next_up(M_PI));
    return s.front() == '-' ? -enc : enc;
  }
  if (!s.empty() && s.front() == '[') {
    if (s.back() != ']') throw ParseError("unterminated interval literal");
    const std::string_view body = s.substr(1, s.size() - 2);
    const size_t comma = body.find(',');
    if (comma == std::string_view::npos) throw ParseError("interval literal needs two endpoints");
    const Rational lo = literal_detail::parse_real_rational(body.substr(0, comma));
    const Rational hi = literal_detail::parse_real_rational(body.substr(comma + 1));
    if (hi < lo) throw ParseError("interval literal endpoints out of order");
    return Interval(lo.to_interval_tight().lo(), hi.to_interval_tight().hi());
  }
  if (!s.empty() && s.back() == 'i') throw ParseError("complex literal is not valid in interval mode");
  return literal_detail::parse_real_rational(s).to_interval_tight();
}

namespace literal_detail {

// splits "a+bi" style literals; returns {real, imag} literal views
template <class R>
Complex<R> parse_complex(std::string_view s, R (*part)(std::string_view)) {
  if (s.empty()) throw ParseError("empty numeric literal");
  if (s.back() != 'i' || is_pi_token(s)) return Complex<R>(part(s));
  std::string_view body = s.substr(0, s.size() - 1);
  // split before the last top-level sign that is not an exponent sign
  size_t split = std::string_view::npos;
  for (size_t pos = body.size(); pos-- > 1;) {
    const char c = body[pos];
    if ((c == '+' || c == '-') && body[pos - 1] != 'e' && body[pos - 1] != 'E') {
      split = pos;
      break;
    }
  }
  std::string_view re_part, im_part;
  if (split == std::string_view::npos) {
    im_part = body;
  } else {
    re_part = body.substr(0, split);
    im_part = body.substr(split);
  }
  R re = re_part.empty() ? R{} : part(re_part);
  R im;
  if (im_part.empty() || im_part == "+") {
    im = part("1");
  } else if (im_part == "-") {
    im = part("-1");
  } else {
    im = part(im_part);
  }
  return Complex<R>(re, im);
}

inline Rational rational_part(std::string_view s) { return parse_real_rational(s); }
inline double double_part(std::string_view s) { return checked_nearest(parse_real_rational(s)); }

}  // namespace literal_detail

template <>
inline ComplexRational parse_coefficient<ComplexRational>(std::string_view s) {
  if (!s.empty() && s.front() == '[') throw ParseError("interval literal is not valid in complex mode");
  return literal_detail::parse_complex<Rational>(s, &literal_detail::rational_part);
}

template <>
inline ComplexDouble parse_coefficient<ComplexDouble>(std::string_view s) {
  if (!s.empty() && s.front() == '[') throw ParseError("interval literal is not valid in complex mode");
  return literal_detail::parse_complex<double>(s, &literal_detail::double_part);
}

// ---- formatting, the inverse grammar ----

inline std::string format_coefficient(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);  // shortest round-trip
  return std::string(buf, res.ptr);
}

inline std::string format_coefficient(const Rational& x) { return x.to_string(); }

inline std::string format_coefficient(const Interval& x) {
  return "[" + format_coefficient(x.lo()) + "," + format_coefficient(x.hi()) + "]";
}

template <class T>
std::string format_coefficient(const Complex<T>& x) {
  if (is_zero(x.imag())) return format_coefficient(x.real());
  std::string im = format_coefficient(x.imag()) + "i";
  if (is_zero(x.real())) return im;
  return format_coefficient(x.real()) + (im.front() == '-' ? "" : "+") + im;
}

}  // namespace polysol

#endif
