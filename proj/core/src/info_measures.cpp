#include "kgcoulomb/info_measures.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "kgcoulomb/errors.hpp"
#include "kgcoulomb/schrodinger.hpp"
#include "kgcoulomb/special_functions.hpp"

namespace kgc {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

ConvergenceReport require_converged(ConvergenceReport report, const std::string& what) {
  if (!report.converged) {
    throw IntegrationFailure(report, what + ": quadrature did not converge (estimated error " +
                                         std::to_string(report.estimated_error) + ")");
  }
  return report;
}

double entropy_density(double p) { return p > 0.0 ? -p * std::log(p) : 0.0; }

ConvergenceReport shannon_angular_report(int l, int m, double tol) {
  const AngularDensity angular = angular_density(l, m);
  if (l == 0) {
    ConvergenceReport exact;
    exact.value = std::log(4.0 * std::numbers::pi);
    exact.converged = true;
    return exact;
  }
  auto integrand = [&angular](double theta) {
    return kTwoPi * entropy_density(angular.value(theta)) * std::sin(theta);
  };
  return require_converged(
      integrate_interval(integrand, 0.0, std::numbers::pi, tol, angular.nodes()),
      "angular Shannon entropy");
}

ConvergenceReport fisher_angular_report(int l, int m, double tol) {
  const AngularDensity angular = angular_density(l, m);
  // (dA/dtheta)^2 / A = 4 (dy/dtheta)^2 for A = y^2, finite across the nodes.
  auto integrand = [&angular](double theta) {
    const double dy = angular.amplitude(theta).derivative;
    return kTwoPi * 4.0 * dy * dy * std::sin(theta);
  };
  return require_converged(integrate_interval(integrand, 0.0, std::numbers::pi, tol),
                           "angular Fisher information");
}

}  // namespace

void IntegrationDiagnostics::absorb(const ConvergenceReport& report) {
  converged = converged && report.converged;
  max_estimated_error = std::max(max_estimated_error, report.estimated_error);
  max_levels = std::max(max_levels, report.levels_used);
}

RadialDensity radial_density(const SystemSpec& system, const QuantumState& state, Theory theory) {
  return theory == Theory::klein_gordon ? kg_density(system, state) : sch_density(system, state);
}

ConvergenceReport shannon_radial_report(const RadialDensity& density, double tol) {
  auto integrand = [&density](double r) { return entropy_density(density.value(r)) * r * r; };
  return require_converged(integrate_semi_infinite(integrand, density.zero_exponent() + 2.0,
                                                   density.decay_scale(), tol, density.nodes()),
                           "radial Shannon entropy");
}

double shannon_radial(const RadialDensity& density, double tol) {
  return shannon_radial_report(density, tol).value;
}

double shannon_angular(int l, int m, double tol) { return shannon_angular_report(l, m, tol).value; }

double entropic_power(double shannon_total) {
  return std::exp(2.0 * shannon_total / 3.0) / (kTwoPi * std::numbers::e);
}

MeasureReport shannon_report(const SystemSpec& system, const QuantumState& state, Theory theory,
                             double tol) {
  MeasureReport report;
  report.theory = theory;
  const ConvergenceReport radial = shannon_radial_report(radial_density(system, state, theory), tol);
  const ConvergenceReport angular = shannon_angular_report(state.l(), state.m(), tol);
  report.diagnostics.absorb(radial);
  report.diagnostics.absorb(angular);
  report.shannon_radial = radial.value;
  report.shannon_angular = angular.value;
  report.shannon_total = radial.value + angular.value;
  report.entropic_power = entropic_power(report.shannon_total);
  return report;
}

double fisher_angular(int l, int m, double tol) { return fisher_angular_report(l, m, tol).value; }

namespace {

double fisher_impl(const SystemSpec& system, const QuantumState& state, Theory theory, double tol,
                   IntegrationDiagnostics* diagnostics) {
  if (theory == Theory::klein_gordon) {
    const KgParams p = kg_params(system, state);
    if (!(p.l_prime > 0.0)) {
      throw FisherUndefined("Fisher information diverges for Klein-Gordon states with l' <= 0 (l=" +
                            std::to_string(state.l()) + ", l'=" + std::to_string(p.l_prime) + ")");
    }
  }
  const RadialDensity density = radial_density(system, state, theory);
  // D'^2/D r^2 and D both behave like r^{zero_exponent} near the origin.
  const double exponent = density.zero_exponent();

  auto gradient = [&density](double r) {
    const ValueDerivative d = density.evaluate(r);
    return d.value > 0.0 ? d.derivative * d.derivative / d.value * r * r : 0.0;
  };
  auto inverse_square = [&density](double r) { return density.value(r); };

  const ConvergenceReport radial = require_converged(
      integrate_semi_infinite(gradient, exponent, density.decay_scale(), tol),
      "radial Fisher information");
  if (state.l() == 0) {
    if (diagnostics) diagnostics->absorb(radial);
    return radial.value;
  }
  const ConvergenceReport r_minus2 = require_converged(
      integrate_semi_infinite(inverse_square, exponent, density.decay_scale(), tol),
      "<r^-2>");
  const ConvergenceReport angular = fisher_angular_report(state.l(), state.m(), tol);
  if (diagnostics) {
    diagnostics->absorb(radial);
    diagnostics->absorb(r_minus2);
    diagnostics->absorb(angular);
  }
  return radial.value + r_minus2.value * angular.value;
}

}  // namespace

double fisher(const SystemSpec& system, const QuantumState& state, Theory theory, double tol) {
  return fisher_impl(system, state, theory, tol, nullptr);
}

MeasureReport measure_report(const SystemSpec& system, const QuantumState& state, Theory theory,
                             double shannon_tol, double fisher_tol) {
  MeasureReport report = shannon_report(system, state, theory, shannon_tol);
  try {
    report.fisher = fisher_impl(system, state, theory, fisher_tol, &report.diagnostics);
  } catch (const FisherUndefined&) {
    report.fisher.reset();
  }
  return report;
}

}  // namespace kgc
