#include "kgcoulomb/schrodinger.hpp"

#include <cmath>

#include "kgcoulomb/errors.hpp"
#include "kgcoulomb/moments.hpp"

namespace kgc {

RadialDensity sch_density(const SystemSpec& system, const QuantumState& state) {
  const int n = state.n(), l = state.l();
  const double kappa = system.mass() * system.Z() / n;
  RadialDensity d(system, state);
  d.theory_ = Theory::schrodinger;
  d.scale_ = 2.0 * kappa;
  d.degree_ = n - l - 1;
  d.laguerre_param_ = 2.0 * l + 1.0;
  d.power_ = l;
  d.amplitude_norm_ = std::sqrt(d.scale_ * d.scale_ * d.scale_ / (2.0 * n));
  d.zero_exponent_ = 2.0 * l;
  d.decay_scale_ = 1.0 / kappa;
  for (double x : laguerre_zeros(d.degree_, d.laguerre_param_)) d.nodes_.push_back(x / d.scale_);
  return d;
}

double sch_energy(const SystemSpec& system, const QuantumState& state) {
  const double n = state.n();
  return -system.mass() * system.Z() * system.Z() / (2.0 * n * n);
}

double sch_radial_moment(const SystemSpec& system, const QuantumState& state, int k) {
  if (k < 0) throw InvalidArgument("radial moments are defined for k >= 0");
  // With x = 2 kappa r:  <r^k> = (2 kappa)^-k J(k) / (2n), J taken at l' = l.
  const double two_kappa = 2.0 * system.mass() * system.Z() / state.n();
  return std::pow(two_kappa, -k) * j_integral(state.n(), state.l(), state.l(), k) /
         (2.0 * state.n());
}

}  // namespace kgc
