#ifndef POLYSOL_POLYNOMIAL_HPP
#define POLYSOL_POLYNOMIAL_HPP

#include <limits>
#include <map>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "polysol/multi_index.hpp"
#include "polysol/ring.hpp"

namespace polysol {

// Degree of the zero polynomial; a sentinel standing in for minus infinity.
inline constexpr int kDegreeOfZero = std::numeric_limits<int>::min();

// Sparse multivariate polynomial over a coefficient ring T: an ordered map
// from exponent multi-index to coefficient. Normalized at all times (no
// stored coefficient equals the ring zero), immutable in practice: every
// operation returns a new value. Map order is graded-lex, which fixes the
// iteration, printing, and evaluation-summation order.
template <class T>
class Polynomial {
 public:
  using TermMap = std::map<MultiIndex, T>;

  explicit Polynomial(int dim) : dim_(dim) {
    if (dim < 1) throw std::invalid_argument("polynomial dimension must be >= 1");
  }

  static Polynomial monomial(const MultiIndex& alpha, T coef) {
    Polynomial p(alpha.dim());
    p.add_term(alpha, std::move(coef));
    return p;
  }

  static Polynomial constant(int dim, T value) {
    return monomial(MultiIndex::zero(dim), std::move(value));
  }

  // x_axis, 0-based
  static Polynomial variable(int dim, int axis) {
    return monomial(MultiIndex::unit(dim, axis), ring_one<T>());
  }

  int dim() const { return dim_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  int total_degree() const {
    if (terms_.empty()) return kDegreeOfZero;
    return terms_.rbegin()->first.order();  // graded order: last key has max degree
  }

  T coefficient(const MultiIndex& alpha) const {
    auto it = terms_.find(alpha);
    return it == terms_.end() ? ring_zero<T>() : it->second;
  }

  // Accumulates c into the term at alpha, pruning exact zeros.
  void add_term(const MultiIndex& alpha, T c) {
    if (alpha.dim() != dim_) throw std::invalid_argument("term multi-index length does not match polynomial dimension");
    if (polysol::is_zero(c)) return;
    auto it = terms_.find(alpha);
    if (it == terms_.end()) {
      terms_.emplace(alpha, std::move(c));
    } else {
      it->second = it->second + c;
      if (polysol::is_zero(it->second)) terms_.erase(it);
    }
  }

  Polynomial operator-() const {
    Polynomial r(dim_);
    for (const auto& [alpha, c] : terms_) r.terms_.emplace(alpha, -c);
    return r;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    a.require_same_dim(b);
    Polynomial r = a;
    for (const auto& [alpha, c] : b.terms_) r.add_term(alpha, c);
    return r;
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    a.require_same_dim(b);
    Polynomial r = a;
    for (const auto& [alpha, c] : b.terms_) r.add_term(alpha, -c);
    return r;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.require_same_dim(b);
    Polynomial r(a.dim_);
    for (const auto& [alpha, ca] : a.terms_) {
      for (const auto& [beta, cb] : b.terms_) {
        r.add_term(alpha + beta, ca * cb);
      }
    }
    return r;
  }

  friend Polynomial operator*(const Polynomial& p, const T& s) {
    Polynomial r(p.dim_);
    for (const auto& [alpha, c] : p.terms_) r.add_term(alpha, c * s);
    return r;
  }

  friend Polynomial operator*(const T& s, const Polynomial& p) { return p * s; }

  friend Polynomial operator/(const Polynomial& p, const T& s) {
    require_nonzero(s, "polynomial scalar divisor");
    Polynomial r(p.dim_);
    for (const auto& [alpha, c] : p.terms_) r.add_term(alpha, c / s);
    return r;
  }

  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  Polynomial& operator*=(const T& s) { return *this = *this * s; }
  Polynomial& operator/=(const T& s) { return *this = *this / s; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.dim_ == b.dim_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  void require_same_dim(const Polynomial& o) const {
    if (dim_ != o.dim_) throw std::invalid_argument("polynomial dimension mismatch");
  }

 private:
  int dim_;
  TermMap terms_;
};

// Formal partial derivative along the given 0-based axis, `order` times.
template <class T>
Polynomial<T> partial_derivative(const Polynomial<T>& p, int axis, int order = 1) {
  if (axis < 0 || axis >= p.dim()) throw std::invalid_argument("derivative axis out of range");
  if (order < 1) throw std::invalid_argument("derivative order must be >= 1");
  Polynomial<T> r(p.dim());
  for (const auto& [alpha, c] : p.terms()) {
    const int e = alpha[axis];
    if (e < order) continue;
    long long falling = 1;
    for (int j = 0; j < order; ++j) falling *= e - j;
    r.add_term(alpha.with(axis, e - order), c * from_int<T>(falling));
  }
  return r;
}

// Sum of second derivatives, applied `iterations` times.
template <class T>
Polynomial<T> laplacian(const Polynomial<T>& p, int iterations = 1) {
  if (iterations < 1) throw std::invalid_argument("laplacian iterations must be >= 1");
  Polynomial<T> r = p;
  for (int it = 0; it < iterations && !r.is_zero(); ++it) {
    Polynomial<T> next(p.dim());
    for (int axis = 0; axis < p.dim(); ++axis) next += partial_derivative(r, axis, 2);
    r = std::move(next);
  }
  return r;
}

// Smallest m with laplacian^m(p) != 0 and laplacian^{m+1}(p) == 0.
// Returns -1 for the zero polynomial (every power already vanishes).
template <class T>
int nilpotency_index(const Polynomial<T>& p) {
  if (p.is_zero()) return -1;
  int m = 0;
  Polynomial<T> g = laplacian(p);
  while (!g.is_zero()) {
    ++m;
    g = laplacian(g);
  }
  return m;
}

// Σ c_α · point^α, summed in graded-lex key order so floating results are
// reproducible.
template <class T>
T evaluate(const Polynomial<T>& p, std::span<const T> point) {
  if (static_cast<int>(point.size()) != p.dim()) {
    throw std::invalid_argument("evaluation point length does not match polynomial dimension");
  }
  T acc = ring_zero<T>();
  for (const auto& [alpha, c] : p.terms()) {
    T term = c;
    for (int i = 0; i < p.dim(); ++i) {
      for (int j = 0; j < alpha[i]; ++j) term = term * point[static_cast<size_t>(i)];
    }
    acc = acc + term;
  }
  return acc;
}

template <class T>
T evaluate(const Polynomial<T>& p, const std::vector<T>& point) {
  return evaluate(p, std::span<const T>(point));
}

// Splits p into its homogeneous parts, ascending in degree; empty parts are
// omitted. The sparse map is already the expansion in the monomial basis, so
// this is pure bucketing by key order.
template <class T>
std::vector<std::pair<int, Polynomial<T>>> homogeneous_decomposition(const Polynomial<T>& p) {
  std::vector<std::pair<int, Polynomial<T>>> parts;
  for (const auto& [alpha, c] : p.terms()) {
    const int n = alpha.order();
    if (parts.empty() || parts.back().first != n) parts.emplace_back(n, Polynomial<T>(p.dim()));
    parts.back().second.add_term(alpha, c);
  }
  return parts;
}

// True when every stored term shares total degree n (vacuously true for the
// zero polynomial; degree_out is left untouched then).
template <class T>
bool is_homogeneous(const Polynomial<T>& p, int* degree_out = nullptr) {
  if (p.is_zero()) return true;
  const int n = p.terms().begin()->first.order();
  const int last = p.terms().rbegin()->first.order();
  if (n != last) return false;  // graded order: first and last keys bracket all degrees
  if (degree_out) *degree_out = n;
  return true;
}

}  // namespace polysol

#endif
