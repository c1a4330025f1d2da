#include "kgcoulomb/kg_solution.hpp"

#include <cmath>
#include <string>

#include "kgcoulomb/errors.hpp"

namespace kgc {
namespace {

// f(x) = norm x^power e^{-x/2} Lt(x) and df/dx.
ValueDerivative laguerre_function(int degree, double param, double power, double norm, double x) {
  const ValueDerivative lt = laguerre_orthonormal(degree, param, x);
  const double envelope = norm * std::exp(power * std::log(x) - 0.5 * x);
  return {envelope * lt.value, envelope * ((power / x - 0.5) * lt.value + lt.derivative)};
}

}  // namespace

const char* theory_name(Theory theory) {
  return theory == Theory::klein_gordon ? "klein-gordon" : "schrodinger";
}

ValueDerivative RadialDensity::evaluate(double r) const {
  if (!(r > 0.0)) throw DomainError("radial density requires r > 0, got " + std::to_string(r));
  const double x = scale_ * r;
  const ValueDerivative f =
      laguerre_function(degree_, laguerre_param_, power_, amplitude_norm_, x);
  const double df_dr = scale_ * f.derivative;

  if (theory_ == Theory::schrodinger) {
    return {f.value * f.value, 2.0 * f.value * df_dr};
  }
  // u(r)^2 / r^2 weighted by g(r) = (epsilon + Z/r) / (m c^2).
  const double Z = system_.Z();
  const double g = (epsilon_ + Z / r) / rest_energy_;
  const double dg = -Z / (r * r * rest_energy_);
  const double w = f.value / r;
  const double dw = df_dr / r - f.value / (r * r);
  return {g * w * w, dg * w * w + 2.0 * g * w * dw};
}

ValueDerivative radial_u(const SystemSpec& system, const QuantumState& state, double s) {
  if (!(s > 0.0)) throw DomainError("radial_u requires s > 0, got " + std::to_string(s));
  const KgParams p = kg_params(system, state);
  return laguerre_function(state.n() - state.l() - 1, 2.0 * p.l_prime + 1.0, p.l_prime + 1.0,
                           std::sqrt(p.norm_sq), s);
}

RadialDensity kg_density(const SystemSpec& system, const QuantumState& state) {
  const KgParams p = kg_params(system, state);
  RadialDensity d(system, state);
  d.theory_ = Theory::klein_gordon;
  d.scale_ = p.beta;
  d.degree_ = state.n() - state.l() - 1;
  d.laguerre_param_ = 2.0 * p.l_prime + 1.0;
  d.power_ = p.l_prime + 1.0;
  d.amplitude_norm_ = std::sqrt(p.norm_sq);
  d.epsilon_ = p.epsilon;
  d.rest_energy_ = system.rest_energy();
  d.zero_exponent_ = 2.0 * p.l_prime - 1.0;
  d.decay_scale_ = 1.0 / p.beta;
  for (double s : laguerre_zeros(d.degree_, d.laguerre_param_)) d.nodes_.push_back(s / p.beta);
  return d;
}

double density_3d(const RadialDensity& density, const AngularDensity& angular, double r,
                  double theta) {
  return density.value(r) * angular.value(theta);
}

}  // namespace kgc
