#ifndef POLYSOL_POLY_VECTOR_HPP
#define POLYSOL_POLY_VECTOR_HPP

#include <stdexcept>
#include <vector>

#include "polysol/polynomial.hpp"

namespace polysol {

// Fixed-length tuple of polynomials sharing ambient dimension and ring.
// Displacement fields, currents, potentials.
template <class T>
class PolyVector {
 public:
  explicit PolyVector(std::vector<Polynomial<T>> components) : comps_(std::move(components)) {
    if (comps_.empty()) throw std::invalid_argument("polynomial vector needs at least one component");
    for (const auto& c : comps_) comps_.front().require_same_dim(c);
  }

  static PolyVector zero(int dim, int count) {
    return PolyVector(std::vector<Polynomial<T>>(static_cast<size_t>(count), Polynomial<T>(dim)));
  }

  int dim() const { return comps_.front().dim(); }
  int size() const { return static_cast<int>(comps_.size()); }

  const Polynomial<T>& operator[](int i) const { return comps_[static_cast<size_t>(i)]; }
  Polynomial<T>& operator[](int i) { return comps_[static_cast<size_t>(i)]; }

  const std::vector<Polynomial<T>>& components() const { return comps_; }

  bool is_zero() const {
    for (const auto& c : comps_) {
      if (!c.is_zero()) return false;
    }
    return true;
  }

  int max_component_degree() const {
    int d = kDegreeOfZero;
    for (const auto& c : comps_) d = std::max(d, c.total_degree());
    return d;
  }

  PolyVector operator-() const {
    PolyVector r = *this;
    for (auto& c : r.comps_) c = -c;
    return r;
  }

  friend PolyVector operator+(const PolyVector& a, const PolyVector& b) {
    a.require_same_shape(b);
    PolyVector r = a;
    for (int i = 0; i < a.size(); ++i) r[i] += b[i];
    return r;
  }

  friend PolyVector operator-(const PolyVector& a, const PolyVector& b) {
    a.require_same_shape(b);
    PolyVector r = a;
    for (int i = 0; i < a.size(); ++i) r[i] -= b[i];
    return r;
  }

  friend PolyVector operator*(const PolyVector& v, const T& s) {
    PolyVector r = v;
    for (auto& c : r.comps_) c *= s;
    return r;
  }

  friend PolyVector operator*(const T& s, const PolyVector& v) { return v * s; }

  friend PolyVector operator/(const PolyVector& v, const T& s) {
    PolyVector r = v;
    for (auto& c : r.comps_) c /= s;
    return r;
  }

  friend bool operator==(const PolyVector& a, const PolyVector& b) { return a.comps_ == b.comps_; }
  friend bool operator!=(const PolyVector& a, const PolyVector& b) { return !(a == b); }

  void require_same_shape(const PolyVector& o) const {
    if (size() != o.size()) throw std::invalid_argument("polynomial vector component count mismatch");
    comps_.front().require_same_dim(o.comps_.front());
  }

 private:
  std::vector<Polynomial<T>> comps_;
};

template <class T>
PolyVector<T> gradient(const Polynomial<T>& p) {
  std::vector<Polynomial<T>> g;
  g.reserve(static_cast<size_t>(p.dim()));
  for (int axis = 0; axis < p.dim(); ++axis) g.push_back(partial_derivative(p, axis));
  return PolyVector<T>(std::move(g));
}

template <class T>
Polynomial<T> divergence(const PolyVector<T>& v) {
  if (v.size() != v.dim()) {
    throw std::invalid_argument("divergence needs component count equal to ambient dimension");
  }
  Polynomial<T> r(v.dim());
  for (int i = 0; i < v.size(); ++i) r += partial_derivative(v[i], i);
  return r;
}

template <class T>
PolyVector<T> curl(const PolyVector<T>& v) {
  if (v.size() != 3 || v.dim() != 3) throw std::invalid_argument("curl requires a 3-component field in dimension 3");
  std::vector<Polynomial<T>> c;
  c.reserve(3);
  c.push_back(partial_derivative(v[2], 1) - partial_derivative(v[1], 2));
  c.push_back(partial_derivative(v[0], 2) - partial_derivative(v[2], 0));
  c.push_back(partial_derivative(v[1], 0) - partial_derivative(v[0], 1));
  return PolyVector<T>(std::move(c));
}

template <class T>
PolyVector<T> laplacian(const PolyVector<T>& v, int iterations = 1) {
  PolyVector<T> r = v;
  for (int i = 0; i < v.size(); ++i) r[i] = laplacian(v[i], iterations);
  return r;
}

}  // namespace polysol

#endif
