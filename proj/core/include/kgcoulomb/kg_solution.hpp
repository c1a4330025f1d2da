#pragma once

#include <vector>

#include "kgcoulomb/constants.hpp"
#include "kgcoulomb/special_functions.hpp"

namespace kgc {

enum class Theory { klein_gordon, schrodinger };

const char* theory_name(Theory theory);

/// Radial factor D(r) of a bound-state charge density rho(r, theta) = D(r) A(theta),
/// normalized so that \int_0^inf D(r) r^2 dr = 1.
///
/// Klein-Gordon:  D(r) = (epsilon + Z/r) / (m c^2) * u(beta r)^2 / r^2
/// Schroedinger:  D(r) = R_nl(r)^2
class RadialDensity {
 public:
  double value(double r) const { return evaluate(r).value; }
  ValueDerivative evaluate(double r) const;  // D and dD/dr

  // Leading power of D as r -> 0+: 2 l' - 1 (KG) or 2 l (Schroedinger).
  double zero_exponent() const noexcept { return zero_exponent_; }
  // 1/beta (KG) or n/(mass Z) (Schroedinger).
  double decay_scale() const noexcept { return decay_scale_; }
  Theory theory() const noexcept { return theory_; }

  // Radial nodes (zeros of D for r > 0), ascending; n - l - 1 of them.
  const std::vector<double>& nodes() const noexcept { return nodes_; }

  const SystemSpec& system() const noexcept { return system_; }
  const QuantumState& state() const noexcept { return state_; }

 private:
  friend RadialDensity kg_density(const SystemSpec&, const QuantumState&);
  friend RadialDensity sch_density(const SystemSpec&, const QuantumState&);
  RadialDensity(const SystemSpec& system, const QuantumState& state) : system_(system), state_(state) {}

  SystemSpec system_;
  QuantumState state_;
  Theory theory_ = Theory::klein_gordon;
  double zero_exponent_ = 0.0;
  double decay_scale_ = 1.0;
  std::vector<double> nodes_;

  // Both radial functions have the shape norm * x^power e^{-x/2} Lt_degree^(laguerre_param)(x)
  // with x = scale * r.
  double scale_ = 1.0;
  double power_ = 0.0;
  double laguerre_param_ = 0.0;
  int degree_ = 0;
  double amplitude_norm_ = 1.0;
  // KG charge weighting (epsilon + Z/r)/(m c^2).
  double epsilon_ = 0.0;
  double rest_energy_ = 1.0;
};

/// u(s) = N s^{l'+1} e^{-s/2} Lt_{n-l-1}^{(2l'+1)}(s) and du/ds.
/// Throws SupercriticalCharge for supercritical pairs, DomainError for s <= 0.
ValueDerivative radial_u(const SystemSpec& system, const QuantumState& state, double s);

/// Lorentz-invariant (charge-normalized) Klein-Gordon radial density.
RadialDensity kg_density(const SystemSpec& system, const QuantumState& state);

/// D(r) A(theta).  Throws DomainError for r <= 0.
double density_3d(const RadialDensity& density, const AngularDensity& angular, double r,
                  double theta);

}  // namespace kgc
