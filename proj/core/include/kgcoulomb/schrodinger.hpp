#pragma once

#include "kgcoulomb/constants.hpp"
#include "kgcoulomb/kg_solution.hpp"

namespace kgc {

// Non-relativistic hydrogenic reference with the same Z and particle mass.

/// R_nl(r)^2 with kappa = mass Z / n.
RadialDensity sch_density(const SystemSpec& system, const QuantumState& state);

/// -mass Z^2 / (2 n^2).
double sch_energy(const SystemSpec& system, const QuantumState& state);

/// <r^k>, k >= 0, from the Laguerre moment sum with integer parameter.
double sch_radial_moment(const SystemSpec& system, const QuantumState& state, int k);

}  // namespace kgc
