#pragma once

#include <map>

#include "kgcoulomb/constants.hpp"

namespace kgc {

struct MomentsResult {
  double r_mean = 0.0;  // <r>
  double r2 = 0.0;      // <r^2>
  double sigma2 = 0.0;  // <r^2> - <r>^2
  std::map<int, double> moments;
};

/// \int_0^inf x^{2l'+k+2} e^{-x} [Lt_{n-l-1}^{(2l'+1)}(x)]^2 dx as a finite sum
/// of Gamma-function ratios.  Requires k >= -1 (throws InvalidArgument).
double j_integral(int n, int l, double l_prime, int k);

/// Klein-Gordon <r^k> of the charge density, k >= 0.
double radial_moment(const SystemSpec& system, const QuantumState& state, int k);

/// Centroid, second moment and variance of the charge density.
MomentsResult heisenberg(const SystemSpec& system, const QuantumState& state);

/// The same three quantities for the circular state (n, n-1) from the
/// dedicated closed forms.
MomentsResult circular_closed_forms(const SystemSpec& system, int n);

}  // namespace kgc
