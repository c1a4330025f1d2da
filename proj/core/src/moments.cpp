#include "kgcoulomb/moments.hpp"

#include <cmath>
#include <string>

#include "kgcoulomb/errors.hpp"
#include "kgcoulomb/special_functions.hpp"

namespace kgc {
namespace {

double log_binomial(int n, int k) {
  return log_gamma(n + 1.0) - log_gamma(k + 1.0) - log_gamma(n - k + 1.0);
}

}  // namespace

double j_integral(int n, int l, double l_prime, int k) {
  if (k < -1) throw InvalidArgument("J integral requires k >= -1, got " + std::to_string(k));
  if (n < 1 || l < 0 || l > n - 1) throw InvalidArgument("J integral requires 0 <= l <= n-1");
  if (!(l_prime > -0.5)) throw InvalidArgument("J integral requires l' > -1/2");

  // The two lowest orders reduce to orthonormality and the mean of x.
  if (k == -1) return 1.0;
  if (k == 0) return 2.0 * ((n - l) + l_prime);

  const int degree = n - l - 1;
  const double a = 2.0 * l_prime + 1.0;
  const double log_front = log_gamma(degree + 1.0) - log_gamma(degree + a + 1.0);
  // Binomial(k+1, degree-j) vanishes for j < degree - k - 1.
  double sum = 0.0;
  for (int j = std::max(0, degree - k - 1); j <= degree; ++j) {
    const double log_term = 2.0 * log_binomial(k + 1, degree - j) +
                            log_gamma(a + k + j + 2.0) - log_gamma(j + 1.0);
    sum += std::exp(log_term + log_front);
  }
  return sum;
}

double radial_moment(const SystemSpec& system, const QuantumState& state, int k) {
  if (k < 0) throw InvalidArgument("radial moments are defined for k >= 0");
  const KgParams p = kg_params(system, state);
  // <r^k> = (N^2/mc^2) beta^-k [ (eps/beta) J(k) + gamma c J(k-1) ], gamma c = Z.
  const double front = p.norm_sq / system.rest_energy() * std::pow(p.beta, -k);
  const double j_k = j_integral(state.n(), state.l(), p.l_prime, k);
  const double j_km1 = j_integral(state.n(), state.l(), p.l_prime, k - 1);
  return front * (p.epsilon / p.beta * j_k + system.Z() * j_km1);
}

MomentsResult heisenberg(const SystemSpec& system, const QuantumState& state) {
  MomentsResult result;
  for (int k = 0; k <= 2; ++k) result.moments[k] = radial_moment(system, state, k);
  result.r_mean = result.moments[1];
  result.r2 = result.moments[2];
  result.sigma2 = result.r2 - result.r_mean * result.r_mean;
  return result;
}

MomentsResult circular_closed_forms(const SystemSpec& system, int n) {
  const QuantumState state = make_state(n, n - 1, 0);
  const KgParams p = kg_params(system, state);
  const double lp1 = p.l_prime + 1.0;
  const double g = p.gamma, g2 = g * g;
  const double length = 1.0 / (system.mass() * system.c());  // hbar c / m c^2

  MomentsResult result;
  result.r_mean = length / (4.0 * g * std::sqrt(1.0 + g2 / (lp1 * lp1))) *
                  ((2.0 * lp1) * (2.0 * p.l_prime + 3.0) + 4.0 * g2);
  result.r2 = length * length / (2.0 * g2) * lp1 * (2.0 * p.l_prime + 3.0) *
              (lp1 * (p.l_prime + 2.0) + g2);
  result.sigma2 = length * length * (lp1 / (4.0 * g2)) *
                  (lp1 * (2.0 * p.l_prime + 3.0) * (lp1 * lp1 + 2.0 * g2) + 2.0 * g2 * g2) /
                  (lp1 * lp1 + g2);
  result.moments = {{0, 1.0}, {1, result.r_mean}, {2, result.r2}};
  return result;
}

}  // namespace kgc
