#pragma once

#include <optional>

#include "kgcoulomb/constants.hpp"
#include "kgcoulomb/kg_solution.hpp"
#include "kgcoulomb/quadrature.hpp"

namespace kgc {

inline constexpr double kShannonTolerance = 1e-8;
inline constexpr double kFisherTolerance = 1e-7;

/// Aggregate of the integrations behind one report.
struct IntegrationDiagnostics {
  bool converged = true;
  double max_estimated_error = 0.0;  // absolute, worst single integral
  int max_levels = 0;

  void absorb(const ConvergenceReport& report);
};

/// Spreading measures of rho_nlm for one theory.  Entropies are in nats.
struct MeasureReport {
  Theory theory = Theory::klein_gordon;
  double shannon_radial = 0.0;
  double shannon_angular = 0.0;
  double shannon_total = 0.0;
  double entropic_power = 0.0;
  std::optional<double> fisher;  // absent for KG states where it diverges
  IntegrationDiagnostics diagnostics;
};

/// -\int D ln D r^2 dr.  Throws IntegrationFailure if the quadrature does not converge.
double shannon_radial(const RadialDensity& density, double tol = kShannonTolerance);
ConvergenceReport shannon_radial_report(const RadialDensity& density,
                                        double tol = kShannonTolerance);

/// -\int A ln A dOmega for A = |Y_lm|^2.
double shannon_angular(int l, int m, double tol = kShannonTolerance);

/// exp(2 S / 3) / (2 pi e).
double entropic_power(double shannon_total);

/// Shannon fields of the report (fisher left empty).
MeasureReport shannon_report(const SystemSpec& system, const QuantumState& state, Theory theory,
                             double tol = kShannonTolerance);

/// \int (dA/dtheta)^2 / A dOmega, the angular factor multiplying <r^-2>.
double fisher_angular(int l, int m, double tol = kFisherTolerance);

/// \int |grad rho|^2 / rho d^3r.  For Klein-Gordon this requires l' > 0 and
/// throws FisherUndefined otherwise (in particular for every S state).
double fisher(const SystemSpec& system, const QuantumState& state, Theory theory,
              double tol = kFisherTolerance);

/// Shannon fields plus Fisher when defined.
MeasureReport measure_report(const SystemSpec& system, const QuantumState& state, Theory theory,
                             double shannon_tol = kShannonTolerance,
                             double fisher_tol = kFisherTolerance);

/// Radial density of the requested theory.
RadialDensity radial_density(const SystemSpec& system, const QuantumState& state, Theory theory);

}  // namespace kgc
