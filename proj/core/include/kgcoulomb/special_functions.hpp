#pragma once

#include <vector>

namespace kgc {

struct ValueDerivative {
  double value;
  double derivative;
};

/// ln Gamma(x) for x > 0; throws DomainError otherwise.
double log_gamma(double x);

/// Conventional generalized Laguerre polynomial L_k^(a)(x) and d/dx.
ValueDerivative laguerre(int k, double a, double x);

/// Orthonormal Laguerre polynomial sqrt(k!/Gamma(k+a+1)) L_k^(a)(x) and d/dx,
/// orthonormal with respect to the weight x^a e^{-x} on [0, inf).
/// Requires k >= 0, a > -1, x >= 0.
ValueDerivative laguerre_orthonormal(int k, double a, double x);

/// The k positive zeros of L_k^(a), ascending.
std::vector<double> laguerre_zeros(int k, double a);

/// |Y_lm(theta, phi)|^2, which does not depend on phi nor on the sign of m.
/// Normalized so that 2 pi \int_0^pi A(theta) sin(theta) dtheta = 1.
class AngularDensity {
 public:
  int l() const noexcept { return l_; }
  int m() const noexcept { return m_; }

  double value(double theta) const;
  ValueDerivative evaluate(double theta) const;  // A and dA/dtheta

  // Real amplitude y with A = y^2 (sign follows P_l^|m|, no Condon-Shortley phase).
  ValueDerivative amplitude(double theta) const;

  // Interior zeros of A in (0, pi), ascending.
  const std::vector<double>& nodes() const noexcept { return nodes_; }

 private:
  friend AngularDensity angular_density(int l, int m);
  AngularDensity(int l, int m);

  int l_;
  int m_;
  double prefactor_;
  std::vector<double> nodes_;
};

/// Throws InvalidArgument unless 0 <= |m| <= l.
AngularDensity angular_density(int l, int m);

}  // namespace kgc
