#ifndef POLYSOL_FORMAT_HPP
#define POLYSOL_FORMAT_HPP

#include <string>

#include "polysol/literals.hpp"
#include "polysol/poly_vector.hpp"
#include "polysol/polynomial.hpp"

// Human-readable polynomial rendering. Terms appear in graded-lex ascending
// order (the storage order). Two styles:
//   ascii    0.375*y*z - 0.125*y^3*z - 0.375*x^2*y*z + 0.25*x^2*y^3*z
//   unicode  0.375yz - 0.125y³z - 0.375x²yz + 0.25x²y³z

namespace polysol {

enum class TermStyle { ascii, unicode };

namespace format_detail {

inline std::string superscript(int e) {
  static const char* digits[10] = {"⁰", "¹", "²", "³", "⁴",
                                   "⁵", "⁶", "⁷", "⁸", "⁹"};
  std::string out;
  for (char c : std::to_string(e)) out += digits[c - '0'];
  return out;
}

inline std::string variable_name(int dim, int axis) {
  static const char* xyz[3] = {"x", "y", "z"};
  if (dim <= 3) return xyz[axis];
  return "x" + std::to_string(axis + 1);
}

inline std::string monomial_string(const MultiIndex& alpha, TermStyle style) {
  std::string out;
  for (int i = 0; i < alpha.dim(); ++i) {
    const int e = alpha[i];
    if (e == 0) continue;
    if (!out.empty() && style == TermStyle::ascii) out += "*";
    out += variable_name(alpha.dim(), i);
    if (e > 1) out += style == TermStyle::ascii ? "^" + std::to_string(e) : superscript(e);
  }
  return out;
}

// sign splitting: orderable rings and intervals with a definite sign render
// as "a - b"; anything else (complex, zero-straddling intervals) joins with
// "+" and keeps the coefficient's own sign
template <class T>
bool extract_negative(const T& c, T& mag) {
  if constexpr (RingTraits<T>::orderable) {
    if (definitely_less(c, ring_zero<T>())) {
      mag = -c;
      return true;
    }
  }
  mag = c;
  return false;
}

inline bool coefficient_needs_parens(const std::string& token) {
  if (!token.empty() && token.front() == '[') return false;  // intervals carry their own brackets
  for (size_t i = 0; i < token.size(); ++i) {
    if (token[i] == '+' || token[i] == '-') {
      if (i > 0 && (token[i - 1] == 'e' || token[i - 1] == 'E')) continue;
      return true;
    }
  }
  return false;
}

template <class T>
std::string term_string(const T& mag, const MultiIndex& alpha, TermStyle style) {
  const std::string mono = monomial_string(alpha, style);
  if (mono.empty()) return format_coefficient(mag);
  if (mag == ring_one<T>()) return mono;
  std::string coef = format_coefficient(mag);
  if (coefficient_needs_parens(coef)) coef = "(" + coef + ")";
  return coef + (style == TermStyle::ascii ? "*" : "") + mono;
}

}  // namespace format_detail

template <class T>
std::string to_string(const Polynomial<T>& p, TermStyle style = TermStyle::ascii) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [alpha, c] : p.terms()) {
    T mag = c;
    const bool neg = format_detail::extract_negative(c, mag);
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    out += format_detail::term_string(mag, alpha, style);
  }
  return out;
}

}  // namespace polysol

#endif
