#ifndef POLYSOL_LAPLACE_FAMILY_HPP
#define POLYSOL_LAPLACE_FAMILY_HPP

#include <stdexcept>
#include <utility>
#include <vector>

#include "polysol/diff_operator.hpp"
#include "polysol/poly_vector.hpp"
#include "polysol/polynomial.hpp"

namespace polysol {

namespace detail {

// 2(l+1)(2l+2n+d); the eigen-style factor the radial recursions divide by.
inline long long gamma_coeff(int l, int n, int d) {
  const long long g = 2LL * (l + 1) * (2LL * l + 2LL * n + d);
  if (g <= 0) throw std::logic_error("radial recursion denominator not positive");
  return g;
}

// Σ_i x_i^2
template <class T>
Polynomial<T> radial_metric(int dim) {
  Polynomial<T> r2(dim);
  for (int i = 0; i < dim; ++i) r2.add_term(MultiIndex::zero(dim).with(i, 2), ring_one<T>());
  return r2;
}

// Solves L u = h for h homogeneous of degree n, given a quadratic form q and
// operator L satisfying L(q^{l+1} h_n) = gamma_l^n q^l h_n + q^{l+1} L h_n:
// u = Σ_l c_l q^{l+1} L^l h with c_0 = 1/gamma_0^n, c_l = -c_{l-1}/gamma_l^{n-2l}.
template <class T, class Op>
Polynomial<T> second_order_radial_solve(const Polynomial<T>& h, int n, const Polynomial<T>& metric,
                                        Op&& op) {
  const int d = h.dim();
  Polynomial<T> u(d);
  Polynomial<T> g = h;
  Polynomial<T> qpow = metric;
  T c = ring_one<T>() / from_int<T>(gamma_coeff(0, n, d));
  int l = 0;
  while (!g.is_zero()) {
    u += qpow * g * c;
    g = op(g);
    if (g.is_zero()) break;
    ++l;
    c = -(c / from_int<T>(gamma_coeff(l, n - 2 * l, d)));
    qpow = qpow * metric;
  }
  return u;
}

// Direct radial ansatz for Δ² u = h, h homogeneous of degree n:
// u = Σ_l c_l r^{2l+4} Δ^l h. Applying the first-order identity twice gives
//   Δ²(r^{2l+4} h_n) = γ_{l+1}^n γ_l^n r^{2l} h_n
//                    + (γ_{l+1}^n + γ_{l+1}^{n-2}) r^{2l+2} Δh_n
//                    + r^{2l+4} Δ²h_n,
// so collecting the r^{2l} Δ^l h terms yields the three-term recursion
//   c_0 = 1/(γ_0^n γ_1^n)
//   c_l = -((γ_l^{n+2-2l} + γ_l^{n-2l}) c_{l-1} + c_{l-2}) / (γ_l^{n-2l} γ_{l+1}^{n-2l})
// with c_{-1} = 0. Exactness is pinned by the Δ²u = f residual oracle.
template <class T>
Polynomial<T> bilaplace_direct_part(const Polynomial<T>& h, int n) {
  const int d = h.dim();
  const Polynomial<T> r2 = radial_metric<T>(d);
  Polynomial<T> u(d);
  Polynomial<T> g = h;
  Polynomial<T> qpow = r2 * r2;
  T c = ring_one<T>() / from_int<T>(gamma_coeff(0, n, d) * gamma_coeff(1, n, d));
  T c_prev = c;
  T c_prev2 = ring_zero<T>();
  int l = 0;
  while (!g.is_zero()) {
    u += qpow * g * c;
    g = laplacian(g);
    if (g.is_zero()) break;
    ++l;
    const T den = from_int<T>(gamma_coeff(l, n - 2 * l, d) * gamma_coeff(l + 1, n - 2 * l, d));
    const T mid = from_int<T>(gamma_coeff(l, n + 2 - 2 * l, d) + gamma_coeff(l, n - 2 * l, d));
    c = -((mid * c_prev + c_prev2) / den);
    c_prev2 = c_prev;
    c_prev = c;
    qpow = qpow * r2;
  }
  return u;
}

}  // namespace detail

// Solves Δu = h for a homogeneous right-hand side; the output is homogeneous
// of degree n+2. The representative is fixed by the recursion (no harmonic
// part added or removed).
template <class T>
Polynomial<T> solve_poisson_homogeneous(const Polynomial<T>& h) {
  int n = 0;
  if (!is_homogeneous(h, &n)) throw std::invalid_argument("poisson: right-hand side must be homogeneous");
  if (h.is_zero()) return h;
  return detail::second_order_radial_solve(h, n, detail::radial_metric<T>(h.dim()),
                                           [](const Polynomial<T>& p) { return laplacian(p); });
}

// Δu = f for arbitrary polynomial f, by linearity over homogeneous parts.
// Unique only up to harmonic polynomials; this returns the specific
// representative of the radial recursion.
template <class T>
Polynomial<T> solve_poisson(const Polynomial<T>& f) {
  Polynomial<T> u(f.dim());
  for (const auto& [n, part] : homogeneous_decomposition(f)) u += solve_poisson_homogeneous(part);
  return u;
}

enum class BilaplaceMethod { iterated, direct };

// Δ²u = f. The two methods produce different (both valid) representatives.
template <class T>
Polynomial<T> solve_bilaplace(const Polynomial<T>& f, BilaplaceMethod method = BilaplaceMethod::iterated) {
  if (method == BilaplaceMethod::iterated) return solve_poisson(solve_poisson(f));
  Polynomial<T> u(f.dim());
  for (const auto& [n, part] : homogeneous_decomposition(f)) u += detail::bilaplace_direct_part(part, n);
  return u;
}

template <class T>
struct ElastostaticsParams {
  T nu;                    // Poisson ratio in (0, 1/2)
  T mu = ring_one<T>();    // labels the body force mu*f; does not enter u

  void validate() const {
    const T half = ring_one<T>() / from_int<T>(2);
    if (!definitely_positive(nu) || !definitely_less(nu, half)) {
      throw std::invalid_argument("elastostatics: Poisson ratio must lie in (0, 1/2)");
    }
  }
};

// Solves Δu + (1/(1-2ν)) ∇(div u) = f via a vector potential g with
// Δ²g = f/(2(1-ν)) and u = 2(1-ν)Δg - ∇(div g).
template <class T>
PolyVector<T> solve_elastostatics(const PolyVector<T>& f, const ElastostaticsParams<T>& params) {
  if (f.size() != f.dim() || f.dim() < 2 || f.dim() > 3) {
    throw std::invalid_argument("elastostatics: needs a d-component field in dimension d, d in {2,3}");
  }
  params.validate();
  const T two_one_minus_nu = from_int<T>(2) * (ring_one<T>() - params.nu);
  PolyVector<T> g = PolyVector<T>::zero(f.dim(), f.size());
  for (int i = 0; i < f.size(); ++i) g[i] = solve_bilaplace(f[i] / two_one_minus_nu);
  return two_one_minus_nu * laplacian(g) - gradient(divergence(g));
}

template <class T>
struct StokesParams {
  T mu;  // dynamic viscosity
};

template <class T>
struct StokesSolution {
  PolyVector<T> velocity;
  Polynomial<T> pressure;
};

// Solves μΔu - ∇p = f, div u = 0 via a vector potential g with Δ²g = f/μ:
// u = Δg - ∇(div g) is divergence-free by construction, p = -μΔ(div g).
template <class T>
StokesSolution<T> solve_stokes(const PolyVector<T>& f, const StokesParams<T>& params) {
  if (f.size() != f.dim() || f.dim() < 2 || f.dim() > 3) {
    throw std::invalid_argument("stokes: needs a d-component field in dimension d, d in {2,3}");
  }
  if (contains_zero(params.mu)) throw std::invalid_argument("stokes: viscosity must be nonzero");
  PolyVector<T> g = PolyVector<T>::zero(f.dim(), f.size());
  for (int i = 0; i < f.size(); ++i) g[i] = solve_bilaplace(f[i] / params.mu);
  const Polynomial<T> div_g = divergence(g);
  PolyVector<T> velocity = laplacian(g) - gradient(div_g);
  Polynomial<T> pressure = -(params.mu) * laplacian(div_g);
  return StokesSolution<T>{std::move(velocity), std::move(pressure)};
}

// Symmetric positive-definite matrix describing anisotropic conductivity,
// with its exact adjugate/determinant inverse. Positive definiteness is
// checked through leading principal minors when the ring is orderable; for
// non-orderable rings only symmetry and invertibility are enforced.
template <class T>
class AnisotropyMatrix {
 public:
  AnisotropyMatrix(int dim, std::vector<T> entries) : dim_(dim), a_(std::move(entries)) {
    if (dim < 1) throw std::invalid_argument("anisotropy matrix dimension must be >= 1");
    if (a_.size() != static_cast<size_t>(dim) * static_cast<size_t>(dim)) {
      throw std::invalid_argument("anisotropy matrix entry count does not match dimension");
    }
    for (int i = 0; i < dim_; ++i) {
      for (int j = i + 1; j < dim_; ++j) {
        if (!(at(i, j) == at(j, i))) throw std::invalid_argument("anisotropy matrix must be symmetric");
      }
    }
    if constexpr (RingTraits<T>::orderable) {
      for (int k = 1; k <= dim_; ++k) {
        if (!definitely_positive(leading_minor(k))) {
          throw std::invalid_argument("anisotropy matrix must be positive definite");
        }
      }
    }
    const T det = leading_minor(dim_);
    if (contains_zero(det)) throw std::invalid_argument("anisotropy matrix must be invertible");
    inv_.resize(a_.size(), ring_zero<T>());
    for (int i = 0; i < dim_; ++i) {
      for (int j = 0; j < dim_; ++j) {
        // adjugate: cofactor of (j, i)
        const T cof = cofactor(j, i);
        inv_[static_cast<size_t>(i) * dim_ + j] = cof / det;
      }
    }
  }

  static AnisotropyMatrix identity(int dim) {
    std::vector<T> e(static_cast<size_t>(dim) * static_cast<size_t>(dim), ring_zero<T>());
    for (int i = 0; i < dim; ++i) e[static_cast<size_t>(i) * dim + i] = ring_one<T>();
    return AnisotropyMatrix(dim, std::move(e));
  }

  int dim() const { return dim_; }
  const T& at(int i, int j) const { return a_[static_cast<size_t>(i) * dim_ + j]; }
  const T& inverse_at(int i, int j) const { return inv_[static_cast<size_t>(i) * dim_ + j]; }

  // r_A^2 = r^T A^{-1} r as a degree-2 polynomial
  Polynomial<T> metric_form() const {
    Polynomial<T> q(dim_);
    for (int i = 0; i < dim_; ++i) {
      q.add_term(MultiIndex::zero(dim_).with(i, 2), inverse_at(i, i));
      for (int j = i + 1; j < dim_; ++j) {
        q.add_term(MultiIndex::zero(dim_).with(i, 1).with(j, 1), inverse_at(i, j) + inverse_at(j, i));
      }
    }
    return q;
  }

  // symbol of div(A grad .) = Σ A_ij d_i d_j
  DiffOperator<T> operator_symbol() const {
    Polynomial<T> s(dim_);
    for (int i = 0; i < dim_; ++i) {
      s.add_term(MultiIndex::zero(dim_).with(i, 2), at(i, i));
      for (int j = i + 1; j < dim_; ++j) {
        s.add_term(MultiIndex::zero(dim_).with(i, 1).with(j, 1), at(i, j) + at(j, i));
      }
    }
    return DiffOperator<T>(std::move(s));
  }

 private:
  // determinant of the top-left k-by-k block, by Laplace expansion (d <= 3 in
  // practice; exact and division-free in every ring)
  T leading_minor(int k) const {
    std::vector<int> rows(static_cast<size_t>(k)), cols(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) rows[static_cast<size_t>(i)] = cols[static_cast<size_t>(i)] = i;
    return det_recursive(rows, cols);
  }

  T cofactor(int row, int col) const {
    std::vector<int> rows, cols;
    for (int i = 0; i < dim_; ++i) {
      if (i != row) rows.push_back(i);
    }
    for (int j = 0; j < dim_; ++j) {
      if (j != col) cols.push_back(j);
    }
    T minor = rows.empty() ? ring_one<T>() : det_recursive(rows, cols);
    return (row + col) % 2 == 0 ? minor : -minor;
  }

  T det_recursive(const std::vector<int>& rows, const std::vector<int>& cols) const {
    const size_t k = rows.size();
    if (k == 1) return at(rows[0], cols[0]);
    T det = ring_zero<T>();
    for (size_t j = 0; j < k; ++j) {
      std::vector<int> sub_rows(rows.begin() + 1, rows.end());
      std::vector<int> sub_cols;
      for (size_t jj = 0; jj < k; ++jj) {
        if (jj != j) sub_cols.push_back(cols[jj]);
      }
      const T term = at(rows[0], cols[j]) * det_recursive(sub_rows, sub_cols);
      det = j % 2 == 0 ? det + term : det - term;
    }
    return det;
  }

  int dim_;
  std::vector<T> a_;
  std::vector<T> inv_;
};

// Solves div(A grad u) = f with the same radial recursion as the isotropic
// Poisson solve, substituting the metric r_A^2 and the operator Δ_A.
template <class T>
Polynomial<T> solve_anisotropic_poisson(const Polynomial<T>& f, const AnisotropyMatrix<T>& aniso) {
  if (aniso.dim() != f.dim()) throw std::invalid_argument("anisotropic poisson: matrix and rhs dimension mismatch");
  const Polynomial<T> metric = aniso.metric_form();
  const DiffOperator<T> op = aniso.operator_symbol();
  Polynomial<T> u(f.dim());
  for (const auto& [n, part] : homogeneous_decomposition(f)) {
    u += detail::second_order_radial_solve(part, n, metric,
                                           [&op](const Polynomial<T>& p) { return apply(op, p); });
  }
  return u;
}

// Solves ∏_i Δ_{A_i} g = f by chaining anisotropic Poisson solves over the
// factors in order. Serves operators whose symbol factorizes into quadratic
// forms; the caller applies their own matrix symbol to recover the physical
// field from g.
template <class T>
Polynomial<T> solve_factorized_anisotropic(const Polynomial<T>& f,
                                           const std::vector<AnisotropyMatrix<T>>& factors) {
  if (factors.empty()) throw std::invalid_argument("factorized anisotropic: factor list must not be empty");
  Polynomial<T> g = f;
  for (const auto& factor : factors) g = solve_anisotropic_poisson(g, factor);
  return g;
}

}  // namespace polysol

#endif
