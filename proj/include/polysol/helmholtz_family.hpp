#ifndef POLYSOL_HELMHOLTZ_FAMILY_HPP
#define POLYSOL_HELMHOLTZ_FAMILY_HPP

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "polysol/diff_operator.hpp"
#include "polysol/poly_vector.hpp"
#include "polysol/polynomial.hpp"

namespace polysol {

template <class T>
struct HelmholtzParams {
  T k;
};

template <class T>
struct ZerothOrderParams {
  T alpha;
  DiffOperator<T> op;
};

// Time-harmonic isotropic elastodynamics. Wavenumbers enter the solve only
// through their squares, so rational parameters stay rational throughout.
template <class T>
struct ElastodynamicsParams {
  T rho_mass;  // mass density > 0
  T mu;        // shear modulus > 0
  T nu;        // Poisson ratio in (0, 1/2)
  T omega;     // angular frequency > 0

  void validate() const {
    const T half = ring_one<T>() / from_int<T>(2);
    if (!definitely_positive(rho_mass)) throw std::invalid_argument("elastodynamics: mass density must be positive");
    if (!definitely_positive(mu)) throw std::invalid_argument("elastodynamics: shear modulus must be positive");
    if (!definitely_positive(omega)) throw std::invalid_argument("elastodynamics: angular frequency must be positive");
    if (!definitely_positive(nu) || !definitely_less(nu, half)) {
      throw std::invalid_argument("elastodynamics: Poisson ratio must lie in (0, 1/2)");
    }
  }

  // compressional wavenumber squared
  T k1_squared() const {
    const T one = ring_one<T>();
    const T two = from_int<T>(2);
    return omega * omega * rho_mass * (one - two * nu) / (two * mu * (one - nu));
  }

  // shear wavenumber squared
  T k2_squared() const { return omega * omega * rho_mass / mu; }
};

// Time-harmonic Maxwell in a homogeneous isotropic medium. T must be a
// complex ring; the wavenumber enters only as k^2 = omega^2 * eps * mu.
template <class T>
struct MaxwellParams {
  T eps = ring_one<T>();
  T mu = ring_one<T>();
  T omega = ring_one<T>();

  T k_squared() const { return omega * omega * eps * mu; }

  void validate() const {
    if (contains_zero(k_squared())) throw std::invalid_argument("maxwell: omega^2*eps*mu must be nonzero");
  }
};

namespace detail {

// u = Σ_j (-1)^j (k^2)^{-(j+1)} Δ^j f. Finite because the Laplacian is
// nilpotent on polynomials; terminates structurally even for fuzzy
// (interval) coefficients since differentiation exhausts exponents.
template <class T>
Polynomial<T> helmholtz_series(const Polynomial<T>& f, const T& k_squared) {
  if (contains_zero(k_squared)) {
    throw std::invalid_argument("zeroth-order term vanishes; use Poisson solver");
  }
  Polynomial<T> u(f.dim());
  Polynomial<T> g = f;
  T c = ring_one<T>() / k_squared;
  while (!g.is_zero()) {
    u += g * c;
    g = laplacian(g);
    c = -(c / k_squared);
  }
  return u;
}

template <class T>
void require_field_shape(const PolyVector<T>& f, const char* what) {
  if (f.size() != f.dim() || f.dim() < 2 || f.dim() > 3) {
    throw std::invalid_argument(std::string(what) + ": needs a d-component field in dimension d, d in {2,3}");
  }
}

}  // namespace detail

// Unique polynomial solution of (Δ + k^2) u = f.
template <class T>
Polynomial<T> solve_helmholtz(const Polynomial<T>& f, const HelmholtzParams<T>& params) {
  if (f.dim() < 2 || f.dim() > 3) throw std::invalid_argument("helmholtz: dimension must be 2 or 3");
  if (contains_zero(params.k)) {
    throw std::invalid_argument("zeroth-order term vanishes; use Poisson solver");
  }
  return detail::helmholtz_series(f, params.k * params.k);
}

// Unique polynomial solution of (B(∂) + alpha) u = f for an operator with no
// zeroth-order term: u = Σ_j (-1)^j alpha^{-(j+1)} B^j f.
template <class T>
Polynomial<T> solve_zeroth_order(const Polynomial<T>& f, const ZerothOrderParams<T>& params) {
  if (params.op.dim() != f.dim()) throw std::invalid_argument("zeroth-order: operator and rhs dimension mismatch");
  if (params.op.has_constant_term()) {
    throw std::invalid_argument("zeroth-order: operator must have no constant term");
  }
  if (contains_zero(params.alpha)) throw std::invalid_argument("zeroth-order: alpha must be nonzero");
  Polynomial<T> u(f.dim());
  Polynomial<T> g = f;
  T c = ring_one<T>() / params.alpha;
  while (!g.is_zero()) {
    u += g * c;
    g = apply(params.op, g);
    c = -(c / params.alpha);
  }
  return u;
}

// Solves Δu + (1/(1-2ν)) ∇(div u) + k2² u = f through a vector potential:
// two stacked componentwise Helmholtz solves produce the potential g with
// (Δ+k1²)(Δ+k2²) g = f/(2(1-ν)), and u = 2(1-ν)(Δ+k1²)g - ∇(div g).
template <class T>
PolyVector<T> solve_elastodynamics(const PolyVector<T>& f, const ElastodynamicsParams<T>& params) {
  detail::require_field_shape(f, "elastodynamics");
  params.validate();
  const T k1sq = params.k1_squared();
  const T k2sq = params.k2_squared();
  const T two_one_minus_nu = from_int<T>(2) * (ring_one<T>() - params.nu);

  PolyVector<T> g = PolyVector<T>::zero(f.dim(), f.size());
  for (int i = 0; i < f.size(); ++i) {
    const Polynomial<T> q = detail::helmholtz_series(f[i] / two_one_minus_nu, k1sq);
    g[i] = detail::helmholtz_series(q, k2sq);
  }
  return two_one_minus_nu * (laplacian(g) + k1sq * g) - gradient(divergence(g));
}

template <class T>
struct MaxwellSolution {
  PolyVector<T> electric;
  PolyVector<T> magnetic;
  PolyVector<T> vector_potential;
  Polynomial<T> scalar_potential;
  Polynomial<T> charge_density;  // supplied or derived from div J
};

inline constexpr double kSourceValidationRelTol = 1e-13;

// Solves the full time-harmonic Maxwell system for a polynomial current (and
// optional charge density, otherwise derived from charge conservation).
// Potentials solve (Δ+k²)A = -μJ and (Δ+k²)φ = -ρ/ε; then E = iωA - ∇φ and
// H = (1/μ) rot A, which satisfy all four field equations and the Lorenz
// gauge identically.
template <class T>
MaxwellSolution<T> solve_maxwell(
    const PolyVector<T>& current, const MaxwellParams<T>& params,
    const std::optional<Polynomial<std::type_identity_t<T>>>& charge = std::nullopt) {
  if (current.size() != 3 || current.dim() != 3) {
    throw std::invalid_argument("maxwell: needs a 3-component current in dimension 3");
  }
  params.validate();
  const T iw = T::i() * params.omega;

  Polynomial<T> rho(3);
  if (charge) {
    current[0].require_same_dim(*charge);
    const Polynomial<T> mismatch = divergence(current) - iw * (*charge);
    bool conserving;
    if constexpr (RingTraits<T>::kind == RingKind::floating) {
      double scale = 1.0;
      for (int i = 0; i < 3; ++i) {
        for (const auto& [alpha, c] : current[i].terms()) scale = std::max(scale, magnitude(c));
      }
      double worst = 0.0;
      for (const auto& [alpha, c] : mismatch.terms()) worst = std::max(worst, magnitude(c));
      conserving = worst <= kSourceValidationRelTol * scale;
    } else {
      conserving = mismatch.is_zero();
    }
    if (!conserving) throw std::invalid_argument("maxwell: source not charge-conserving");
    rho = *charge;
  } else {
    rho = divergence(current) / iw;
  }

  const T k2 = params.k_squared();
  std::vector<Polynomial<T>> a;
  a.reserve(3);
  for (int i = 0; i < 3; ++i) a.push_back(detail::helmholtz_series(-(params.mu) * current[i], k2));
  PolyVector<T> vector_potential(std::move(a));
  const Polynomial<T> scalar_potential = detail::helmholtz_series(-(rho / params.eps), k2);

  PolyVector<T> electric = iw * vector_potential - gradient(scalar_potential);
  PolyVector<T> magnetic = curl(vector_potential) / params.mu;
  return MaxwellSolution<T>{std::move(electric), std::move(magnetic), std::move(vector_potential),
                            scalar_potential, rho};
}

}  // namespace polysol

#endif
