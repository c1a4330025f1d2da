#pragma once

#include <functional>
#include <span>
#include <vector>

#include "kgcoulomb/errors.hpp"

namespace kgc {

/// Gauss-Legendre nodes and weights on [-1, 1].
struct QuadratureRule {
  std::vector<double> nodes;    // strictly increasing
  std::vector<double> weights;  // all positive
  double lower = -1.0;
  double upper = 1.0;

  template <typename F>
  double integrate(const F& f, double a, double b) const {
    const double half = 0.5 * (b - a), mid = 0.5 * (a + b);
    double sum = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) sum += weights[i] * f(mid + half * nodes[i]);
    return half * sum;
  }
};

/// n-point rule, 1 <= n <= 512, nodes by Newton iteration on P_n.
QuadratureRule gauss_legendre(int n);

/// Outcome of an adaptive integration.  `tolerance` is the absolute threshold
/// the estimate was held to: the requested relative tolerance times the
/// integral of |f|.
struct ConvergenceReport {
  double value = 0.0;
  double estimated_error = 0.0;
  double tolerance = 0.0;
  double abs_integral = 0.0;
  int levels_used = 0;
  bool converged = false;
};

class IntegrationFailure : public Error {
 public:
  IntegrationFailure(const ConvergenceReport& report, const std::string& what)
      : Error(ErrorKind::integration_failure, what), report_(report) {}

  const ConvergenceReport& report() const noexcept { return report_; }

 private:
  ConvergenceReport report_;
};

using Integrand = std::function<double(double)>;

inline constexpr double kDefaultTolerance = 1e-10;
inline constexpr int kMaxLevels = 12;

/// \int_0^inf f(r) dr for f(r) ~ C r^zero_exponent near 0 (zero_exponent > -1)
/// decaying like exp(-r / decay_scale).
///
/// The half line is cut into panels at 0, at each breakpoint, at decay_scale
/// times 1, 2, 4, 8 and then every 8 decay scales until the integrand is
/// negligible; the remainder is mapped onto (0, 1] by r = R - decay_scale ln t.
/// Near r = 0 the substitution r = b t^p with p = ceil(2 / (1 + zero_exponent))
/// (at most 8) is applied.  Panels touching 0 or a breakpoint are graded
/// geometrically toward it.  Each level halves every panel; iteration stops
/// when two successive levels agree within tol relative to \int |f|.  Error
/// estimates never go below 1e3 machine epsilons relative; a smaller tol ends
/// with converged = false once that floor is reached.
///
/// Breakpoints mark interior points where f is not smooth (e.g. nodes of a
/// density entering f ln f).  f is never evaluated at 0 or at a breakpoint.
ConvergenceReport integrate_semi_infinite(const Integrand& f, double zero_exponent,
                                          double decay_scale, double tol = kDefaultTolerance,
                                          std::span<const double> breakpoints = {});

/// \int_a^b f(x) dx with both ends and every breakpoint treated as possible
/// weak singularities (geometric grading), such as ln|x - x0| or a fractional
/// non-negative power.  Same level/convergence scheme.
ConvergenceReport integrate_interval(const Integrand& f, double a, double b,
                                     double tol = kDefaultTolerance,
                                     std::span<const double> breakpoints = {});

/// Fixed composite rule as used by the adaptive integrators at one level, with
/// an explicit cutoff for the semi-infinite case.  Intended for tensor-product
/// integration of separable-looking multi-dimensional integrands.
struct CompositeRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

CompositeRule semi_infinite_rule(double zero_exponent, double decay_scale, double cutoff,
                                 std::span<const double> breakpoints, int level);
CompositeRule interval_rule(double a, double b, std::span<const double> breakpoints, int level);

}  // namespace kgc
