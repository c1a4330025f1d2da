#include "kgcoulomb/special_functions.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "kgcoulomb/errors.hpp"

namespace kgc {
namespace {

// Roots of f on [lo, hi] located by sign changes on a uniform sample and then
// bisected to machine precision.
template <typename F>
std::vector<double> bracket_roots(const F& f, double lo, double hi, int samples) {
  std::vector<double> roots;
  const double step = (hi - lo) / samples;
  double x_prev = lo;
  double f_prev = f(lo);
  for (int i = 1; i <= samples; ++i) {
    const double x = (i == samples) ? hi : lo + i * step;
    const double fx = f(x);
    if (fx == 0.0) {
      roots.push_back(x);
    } else if (f_prev != 0.0 && std::signbit(fx) != std::signbit(f_prev)) {
      double a = x_prev, b = x;
      double fa = f_prev;
      for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (a + b);
        if (mid <= a || mid >= b) break;
        const double fm = f(mid);
        if (fm == 0.0) {
          a = b = mid;
          break;
        }
        if (std::signbit(fm) == std::signbit(fa)) {
          a = mid;
          fa = fm;
        } else {
          b = mid;
        }
      }
      roots.push_back(0.5 * (a + b));
    }
    x_prev = x;
    f_prev = fx;
  }
  return roots;
}

// Q_l^m(x) = P_l^m(x) / ((2m-1)!! (1-x^2)^{m/2}) and its x-derivative, by
// upward recurrence in l from Q_m^m = 1.
ValueDerivative legendre_reduced(int l, int m, double x) {
  double q_prev = 1.0, dq_prev = 0.0;
  if (l == m) return {q_prev, dq_prev};
  double q = x * (2 * m + 1), dq = 2 * m + 1;
  for (int k = m + 2; k <= l; ++k) {
    const double q_next = ((2 * k - 1) * x * q - (k + m - 1) * q_prev) / (k - m);
    const double dq_next = ((2 * k - 1) * (q + x * dq) - (k + m - 1) * dq_prev) / (k - m);
    q_prev = q;
    dq_prev = dq;
    q = q_next;
    dq = dq_next;
  }
  return {q, dq};
}

}  // namespace

double log_gamma(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError("log_gamma requires x > 0, got " + std::to_string(x));
  }
  int sign = 0;
  return ::lgamma_r(x, &sign);
}

ValueDerivative laguerre(int k, double a, double x) {
  if (k < 0) throw InvalidArgument("laguerre degree must be non-negative");
  if (!(a > -1.0)) throw DomainError("laguerre parameter must exceed -1, got " + std::to_string(a));
  if (k == 0) return {1.0, 0.0};

  // L_j^(a) and L_j^(a+1); d/dx L_k^(a) = -L_{k-1}^(a+1).
  double p_prev = 1.0, p = 1.0 + a - x;
  double q_prev = 0.0, q = 1.0;  // L_{-1}^(a+1) = 0, L_0^(a+1) = 1
  for (int j = 1; j < k; ++j) {
    const double p_next = ((2 * j + 1 + a - x) * p - (j + a) * p_prev) / (j + 1);
    const double b = a + 1.0;
    const double q_next = ((2 * j - 1 + b - x) * q - (j - 1 + b) * q_prev) / j;
    p_prev = p;
    p = p_next;
    q_prev = q;
    q = q_next;
  }
  return {p, -q};
}

ValueDerivative laguerre_orthonormal(int k, double a, double x) {
  if (!(x >= 0.0)) throw DomainError("laguerre argument must be non-negative");
  const ValueDerivative raw = laguerre(k, a, x);
  const double norm = std::exp(0.5 * (log_gamma(k + 1.0) - log_gamma(k + a + 1.0)));
  return {norm * raw.value, norm * raw.derivative};
}

std::vector<double> laguerre_zeros(int k, double a) {
  if (k < 0) throw InvalidArgument("laguerre degree must be non-negative");
  if (!(a > -1.0)) throw DomainError("laguerre parameter must exceed -1");
  if (k == 0) return {};
  const double upper = 4.0 * k + 2.0 * a + 10.0;
  auto f = [k, a](double x) { return laguerre(k, a, x).value; };
  for (int samples = 400 * (k + 1); samples <= 400 * (k + 1) * 64; samples *= 4) {
    auto roots = bracket_roots(f, 0.0, upper, samples);
    if (static_cast<int>(roots.size()) == k) return roots;
  }
  throw DomainError("failed to isolate all zeros of L_" + std::to_string(k));
}

AngularDensity::AngularDensity(int l, int m) : l_(l), m_(m) {
  const int am = std::abs(m);
  const double ln_double_factorial = log_gamma(2.0 * am + 1.0) - am * std::numbers::ln2 -
                                     log_gamma(am + 1.0);
  const double ln_sq = std::log((2 * l + 1) / (4.0 * std::numbers::pi)) +
                       log_gamma(l - am + 1.0) - log_gamma(l + am + 1.0) +
                       2.0 * ln_double_factorial;
  prefactor_ = std::exp(0.5 * ln_sq);

  if (l > am) {
    auto q = [l, am](double x) { return legendre_reduced(l, am, x).value; };
    // Sample strictly inside (-1, 1): the ends are never roots of Q.
    auto xs = bracket_roots(q, -1.0, 1.0, 400 * (l + 1));
    nodes_.reserve(xs.size());
    for (auto it = xs.rbegin(); it != xs.rend(); ++it) nodes_.push_back(std::acos(*it));
  }
}

ValueDerivative AngularDensity::amplitude(double theta) const {
  const int am = std::abs(m_);
  const double c = std::cos(theta), s = std::sin(theta);
  const ValueDerivative q = legendre_reduced(l_, am, c);
  const double s_m = am == 0 ? 1.0 : std::pow(s, am);
  const double y = prefactor_ * s_m * q.value;
  double dy = -prefactor_ * s_m * s * q.derivative;
  if (am > 0) dy += prefactor_ * am * std::pow(s, am - 1) * c * q.value;
  return {y, dy};
}

double AngularDensity::value(double theta) const {
  const double y = amplitude(theta).value;
  return y * y;
}

ValueDerivative AngularDensity::evaluate(double theta) const {
  const ValueDerivative y = amplitude(theta);
  return {y.value * y.value, 2.0 * y.value * y.derivative};
}

AngularDensity angular_density(int l, int m) {
  if (l < 0 || std::abs(m) > l) {
    throw InvalidArgument("angular density requires 0 <= |m| <= l, got l=" + std::to_string(l) +
                          ", m=" + std::to_string(m));
  }
  return AngularDensity(l, m);
}

}  // namespace kgc
