#ifndef POLYSOL_DIFF_OPERATOR_HPP
#define POLYSOL_DIFF_OPERATOR_HPP

#include <stdexcept>
#include <utility>

#include "polysol/polynomial.hpp"

namespace polysol {

// Constant-coefficient partial differential operator, encoded by its symbol:
// a polynomial whose variable i stands for the derivative along axis i, so
// the term c_alpha * xi^alpha applies c_alpha * d^alpha.
template <class T>
class DiffOperator {
 public:
  explicit DiffOperator(Polynomial<T> symbol) : symbol_(std::move(symbol)) {}

  // Σ_i ξ_i², the symbol of the Laplacian.
  static DiffOperator laplace_symbol(int dim) {
    Polynomial<T> s(dim);
    for (int i = 0; i < dim; ++i) s.add_term(MultiIndex::zero(dim).with(i, 2), ring_one<T>());
    return DiffOperator(std::move(s));
  }

  int dim() const { return symbol_.dim(); }
  const Polynomial<T>& symbol() const { return symbol_; }

  bool has_constant_term() const {
    return !is_zero(symbol_.coefficient(MultiIndex::zero(symbol_.dim())));
  }

 private:
  Polynomial<T> symbol_;
};

// Σ_alpha c_alpha d^alpha p.
template <class T>
Polynomial<T> apply(const DiffOperator<T>& op, const Polynomial<T>& p) {
  if (op.dim() != p.dim()) throw std::invalid_argument("operator and polynomial dimension mismatch");
  Polynomial<T> r(p.dim());
  for (const auto& [alpha, c] : op.symbol().terms()) {
    Polynomial<T> d = p;
    for (int axis = 0; axis < p.dim() && !d.is_zero(); ++axis) {
      if (alpha[axis] > 0) d = partial_derivative(d, axis, alpha[axis]);
    }
    r += d * c;
  }
  return r;
}

}  // namespace polysol

#endif
