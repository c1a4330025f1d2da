#include "kgcoulomb/constants.hpp"

#include <cmath>
#include <iterator>
#include <string>

#include "kgcoulomb/errors.hpp"

namespace kgc {

SystemSpec make_system(double Z, double mass, double alpha) {
  if (!std::isfinite(Z) || Z <= 0.0) {
    throw InvalidArgument("nuclear charge Z must be positive, got " + std::to_string(Z));
  }
  if (!std::isfinite(mass) || mass <= 0.0) {
    throw InvalidArgument("particle mass must be positive, got " + std::to_string(mass));
  }
  if (!std::isfinite(alpha) || alpha <= 0.0 || alpha >= 1.0) {
    throw InvalidArgument("fine-structure constant must lie in (0, 1), got " +
                          std::to_string(alpha));
  }
  return SystemSpec(Z, mass, alpha);
}

QuantumState make_state(int n, int l, int m) {
  const std::string triple =
      " (n=" + std::to_string(n) + ", l=" + std::to_string(l) + ", m=" + std::to_string(m) + ")";
  if (n < 1) {
    throw InvalidQuantumNumbers("n >= 1", "invalid quantum numbers: n >= 1 violated" + triple);
  }
  if (l < 0) {
    throw InvalidQuantumNumbers("l >= 0", "invalid quantum numbers: l >= 0 violated" + triple);
  }
  if (l > n - 1) {
    throw InvalidQuantumNumbers("l <= n-1",
                                "invalid quantum numbers: l <= n-1 violated" + triple);
  }
  if (std::abs(m) > l) {
    throw InvalidQuantumNumbers("|m| <= l",
                                "invalid quantum numbers: |m| <= l violated" + triple);
  }
  return QuantumState(n, l, m);
}

KgParams kg_params(const SystemSpec& system, const QuantumState& state) {
  const double gamma = system.gamma();
  const double half_l = state.l() + 0.5;
  if (!(gamma < half_l - kCriticalTolerance)) {
    throw SupercriticalCharge("supercritical charge: Z*alpha = " + std::to_string(gamma) +
                              " is not below l + 1/2 = " + std::to_string(half_l));
  }

  KgParams p{};
  p.gamma = gamma;
  // l' - l = sqrt(A^2 - g^2) - A written without the cancellation at small g.
  const double root = std::sqrt((half_l - gamma) * (half_l + gamma));
  p.l_prime = state.l() - gamma * gamma / (root + half_l);
  p.effective_n = (state.n() - state.l()) + p.l_prime;

  const double nu = p.effective_n;
  const double hyp = std::hypot(nu, gamma);
  const double mc2 = system.rest_energy();
  const double c = system.c();

  p.epsilon = mc2 * nu / hyp;
  p.binding_energy = mc2 * gamma * gamma / (hyp * (hyp + nu));
  // 2 sqrt((mc^2)^2 - eps^2)/c, rearranged to avoid the difference of squares.
  p.beta = 2.0 * system.mass() * c * gamma / hyp;
  p.lambda = nu;
  p.norm_sq = system.mass() * c * gamma / (nu * nu + gamma * gamma);
  return p;
}

double coulomb_lambda(const SystemSpec& system, double epsilon, double beta) {
  const double c = system.c();
  return 2.0 * epsilon * system.Z() / (c * c * beta);
}

const char* orbital_letter(int l) {
  static constexpr const char* kLetters[] = {"S", "P", "D", "F", "G", "H", "I", "K",
                                             "L", "M", "N", "O", "Q", "R", "T", "U"};
  if (l < 0 || l >= static_cast<int>(std::size(kLetters))) return "?";
  return kLetters[l];
}

}  // namespace kgc
