#ifndef POLYSOL_VERIFY_HPP
#define POLYSOL_VERIFY_HPP

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "polysol/helmholtz_family.hpp"
#include "polysol/laplace_family.hpp"
#include "polysol/poly_vector.hpp"
#include "polysol/polynomial.hpp"

// Independent residual oracles: each applies the forward differential
// operator of a PDE family to a candidate solution using only the polynomial
// primitives (derivatives, arithmetic), never the solver series. A corrupted
// solver coefficient therefore shows up as a nonzero residual.

namespace polysol {

inline constexpr double kFloatingRelTol = 1e-13;

template <class T>
struct ResidualReport {
  std::vector<std::pair<std::string, Polynomial<T>>> residuals;
  std::vector<std::pair<std::string, Polynomial<T>>> constraints;
  bool exact_zero = true;            // every entry has an empty term map
  bool all_contain_zero = true;      // every coefficient encloses zero (interval verdict)
  double max_coeff_magnitude = 0.0;  // absolute, across all entries
  double rhs_scale = 1.0;            // largest right-hand-side coefficient magnitude

  // Ring-appropriate verdict: exact rings demand identically-zero residuals,
  // floating rings a relative magnitude bound, intervals zero containment.
  bool passed(double rel_tol = kFloatingRelTol) const {
    switch (RingTraits<T>::kind) {
      case RingKind::exact: return exact_zero;
      case RingKind::floating: return max_coeff_magnitude <= rel_tol * rhs_scale;
      case RingKind::enclosure: return all_contain_zero;
    }
    return false;
  }
};

namespace detail {

template <class T>
double max_coeff_mag(const Polynomial<T>& p) {
  double m = 0.0;
  for (const auto& [alpha, c] : p.terms()) m = std::max(m, magnitude(c));
  return m;
}

template <class T>
double max_coeff_mag(const PolyVector<T>& v) {
  double m = 0.0;
  for (const auto& c : v.components()) m = std::max(m, max_coeff_mag(c));
  return m;
}

template <class T>
class ReportBuilder {
 public:
  void add_residual(std::string name, Polynomial<T> r) { scan(r); report_.residuals.emplace_back(std::move(name), std::move(r)); }
  void add_constraint(std::string name, Polynomial<T> r) { scan(r); report_.constraints.emplace_back(std::move(name), std::move(r)); }

  void add_residual(const std::string& name, const PolyVector<T>& r) {
    for (int i = 0; i < r.size(); ++i) add_residual(name + "[" + std::to_string(i + 1) + "]", r[i]);
  }

  ResidualReport<T> finish(double rhs_scale) {
    report_.rhs_scale = rhs_scale > 0.0 ? rhs_scale : 1.0;
    return std::move(report_);
  }

 private:
  void scan(const Polynomial<T>& r) {
    if (!r.is_zero()) report_.exact_zero = false;
    for (const auto& [alpha, c] : r.terms()) {
      report_.max_coeff_magnitude = std::max(report_.max_coeff_magnitude, magnitude(c));
      if (!contains_zero(c)) report_.all_contain_zero = false;
    }
  }

  ResidualReport<T> report_;
};

}  // namespace detail

// (Δ + k²)u - f
template <class T>
ResidualReport<T> residual(const HelmholtzParams<T>& pde, const Polynomial<T>& u, const Polynomial<T>& f) {
  u.require_same_dim(f);
  detail::ReportBuilder<T> b;
  b.add_residual("pde", laplacian(u) + pde.k * pde.k * u - f);
  return b.finish(detail::max_coeff_mag(f));
}

// (B(∂) + α)u - f
template <class T>
ResidualReport<T> residual(const ZerothOrderParams<T>& pde, const Polynomial<T>& u, const Polynomial<T>& f) {
  u.require_same_dim(f);
  detail::ReportBuilder<T> b;
  b.add_residual("pde", apply(pde.op, u) + pde.alpha * u - f);
  return b.finish(detail::max_coeff_mag(f));
}

struct PoissonPde {};

// Δu - f
template <class T>
ResidualReport<T> residual(PoissonPde, const Polynomial<T>& u, const Polynomial<T>& f) {
  u.require_same_dim(f);
  detail::ReportBuilder<T> b;
  b.add_residual("pde", laplacian(u) - f);
  return b.finish(detail::max_coeff_mag(f));
}

struct BilaplacePde {
  BilaplaceMethod method = BilaplaceMethod::iterated;
};

// Δ²u - f
template <class T>
ResidualReport<T> residual(BilaplacePde, const Polynomial<T>& u, const Polynomial<T>& f) {
  u.require_same_dim(f);
  detail::ReportBuilder<T> b;
  b.add_residual("pde", laplacian(u, 2) - f);
  return b.finish(detail::max_coeff_mag(f));
}

// Δu + (1/(1-2ν)) ∇(div u) + k2² u - f
template <class T>
ResidualReport<T> residual(const ElastodynamicsParams<T>& pde, const PolyVector<T>& u, const PolyVector<T>& f) {
  u.require_same_shape(f);
  const T c = ring_one<T>() / (ring_one<T>() - from_int<T>(2) * pde.nu);
  detail::ReportBuilder<T> b;
  b.add_residual("pde", laplacian(u) + c * gradient(divergence(u)) + pde.k2_squared() * u - f);
  return b.finish(detail::max_coeff_mag(f));
}

// Δu + (1/(1-2ν)) ∇(div u) - f
template <class T>
ResidualReport<T> residual(const ElastostaticsParams<T>& pde, const PolyVector<T>& u, const PolyVector<T>& f) {
  u.require_same_shape(f);
  const T c = ring_one<T>() / (ring_one<T>() - from_int<T>(2) * pde.nu);
  detail::ReportBuilder<T> b;
  b.add_residual("pde", laplacian(u) + c * gradient(divergence(u)) - f);
  return b.finish(detail::max_coeff_mag(f));
}

// μΔu - ∇p - f, plus the incompressibility constraint div u
template <class T>
ResidualReport<T> residual(const StokesParams<T>& pde, const StokesSolution<T>& sol, const PolyVector<T>& f) {
  sol.velocity.require_same_shape(f);
  detail::ReportBuilder<T> b;
  b.add_residual("pde", pde.mu * laplacian(sol.velocity) - gradient(sol.pressure) - f);
  b.add_constraint("div_u", divergence(sol.velocity));
  return b.finish(detail::max_coeff_mag(f));
}

// All four field equations plus the Lorenz gauge tying the potentials.
template <class T>
ResidualReport<T> residual(const MaxwellParams<T>& pde, const MaxwellSolution<T>& sol, const PolyVector<T>& current) {
  sol.electric.require_same_shape(current);
  const T iw = T::i() * pde.omega;
  detail::ReportBuilder<T> b;
  b.add_residual("ampere", iw * pde.eps * sol.electric + curl(sol.magnetic) - current);
  b.add_residual("faraday", -(iw * pde.mu) * sol.magnetic + curl(sol.electric));
  b.add_residual("gauss_electric", pde.eps * divergence(sol.electric) - sol.charge_density);
  b.add_residual("gauss_magnetic", pde.mu * divergence(sol.magnetic));
  b.add_constraint("lorenz_gauge",
                   divergence(sol.vector_potential) - iw * pde.eps * pde.mu * sol.scalar_potential);
  return b.finish(std::max(detail::max_coeff_mag(current), detail::max_coeff_mag(sol.charge_density)));
}

template <class T>
struct AnisotropicPoissonPde {
  AnisotropyMatrix<T> matrix;
};

// Δ_A u - f, applied through the operator symbol
template <class T>
ResidualReport<T> residual(const AnisotropicPoissonPde<T>& pde, const Polynomial<T>& u, const Polynomial<T>& f) {
  u.require_same_dim(f);
  detail::ReportBuilder<T> b;
  b.add_residual("pde", apply(pde.matrix.operator_symbol(), u) - f);
  return b.finish(detail::max_coeff_mag(f));
}

template <class T>
struct FactorizedAnisotropicPde {
  std::vector<AnisotropyMatrix<T>> factors;
};

// ∏_i Δ_{A_i} g - f, applying the factors in sequence
template <class T>
ResidualReport<T> residual(const FactorizedAnisotropicPde<T>& pde, const Polynomial<T>& g, const Polynomial<T>& f) {
  g.require_same_dim(f);
  Polynomial<T> image = g;
  for (const auto& factor : pde.factors) image = apply(factor.operator_symbol(), image);
  detail::ReportBuilder<T> b;
  b.add_residual("pde", image - f);
  return b.finish(detail::max_coeff_mag(f));
}

// Charge conservation div J - iωρ = 0: exact in exact rings, magnitude-bounded
// in floating rings, zero-enclosing in interval rings.
template <class T>
bool validate_maxwell_source(const PolyVector<T>& current, const Polynomial<T>& charge,
                             const MaxwellParams<T>& params) {
  if (current.size() != 3 || current.dim() != 3) {
    throw std::invalid_argument("maxwell source validation needs a 3-component current in dimension 3");
  }
  const Polynomial<T> mismatch = divergence(current) - (T::i() * params.omega) * charge;
  if constexpr (RingTraits<T>::kind == RingKind::floating) {
    const double scale = std::max({1.0, detail::max_coeff_mag(current), detail::max_coeff_mag(charge)});
    return detail::max_coeff_mag(mismatch) <= kFloatingRelTol * scale;
  } else if constexpr (RingTraits<T>::kind == RingKind::enclosure) {
    for (const auto& [alpha, c] : mismatch.terms()) {
      if (!contains_zero(c)) return false;
    }
    return true;
  } else {
    return mismatch.is_zero();
  }
}

}  // namespace polysol

#endif
