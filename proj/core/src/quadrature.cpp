#include "kgcoulomb/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <utility>

namespace kgc {
namespace {

constexpr int kPanelOrder = 20;
constexpr int kBreakpointDepth = 20;
constexpr int kTailDepth = 8;
constexpr double kNegligible = 1e-17;
constexpr int kMaxMarchSegments = 4000;

const QuadratureRule& panel_rule() {
  static const QuadratureRule rule = gauss_legendre(kPanelOrder);
  return rule;
}

using Panel = std::pair<double, double>;

// Panels on [lo, hi] shrinking geometrically (ratio 1/2) toward the flagged ends.
void append_graded(std::vector<Panel>& out, double lo, double hi, bool sing_lo, bool sing_hi,
                   int depth_lo, int depth_hi) {
  if (sing_lo && sing_hi) {
    const double mid = 0.5 * (lo + hi);
    append_graded(out, lo, mid, true, false, depth_lo, 0);
    append_graded(out, mid, hi, false, true, 0, depth_hi);
    return;
  }
  const double h = hi - lo;
  if (sing_lo) {
    double scale = std::ldexp(1.0, -depth_lo);
    out.emplace_back(lo, lo + h * scale);
    for (int k = depth_lo - 1; k >= 0; --k) {
      out.emplace_back(lo + h * std::ldexp(1.0, -(k + 1)), lo + h * std::ldexp(1.0, -k));
    }
  } else if (sing_hi) {
    for (int k = 0; k < depth_hi; ++k) {
      out.emplace_back(hi - h * std::ldexp(1.0, -k), hi - h * std::ldexp(1.0, -(k + 1)));
    }
    out.emplace_back(hi - h * std::ldexp(1.0, -depth_hi), hi);
  } else {
    out.emplace_back(lo, hi);
  }
}

enum class MapKind { linear, power, tail };

// A stretch of the integration variable x together with the map t -> x used
// on it and its panels in t.
struct Piece {
  MapKind kind = MapKind::linear;
  double origin = 0.0;  // tail: R
  double scale = 1.0;   // power: b;  tail: decay scale
  double power = 1.0;
  std::vector<Panel> panels;

  void map(double t, double& x, double& jac) const {
    switch (kind) {
      case MapKind::linear:
        x = t;
        jac = 1.0;
        break;
      case MapKind::power: {
        const double tp1 = power == 1.0 ? 1.0 : std::pow(t, power - 1.0);
        x = scale * tp1 * t;
        jac = scale * power * tp1;
        break;
      }
      case MapKind::tail:
        x = origin - scale * std::log(t);
        jac = scale / t;
        break;
    }
  }
};

template <typename Visitor>
void visit_piece(const Piece& piece, int level, Visitor&& visit) {
  const QuadratureRule& rule = panel_rule();
  const int splits = 1 << level;
  for (const auto& [lo, hi] : piece.panels) {
    const double width = (hi - lo) / splits;
    for (int s = 0; s < splits; ++s) {
      const double a = lo + s * width;
      const double b = (s + 1 == splits) ? hi : a + width;
      const double half = 0.5 * (b - a), mid = 0.5 * (a + b);
      for (int i = 0; i < kPanelOrder; ++i) {
        const double t = mid + half * rule.nodes[i];
        double x = 0.0, jac = 0.0;
        piece.map(t, x, jac);
        visit(x, rule.weights[i] * half * jac);
      }
    }
  }
}

int power_for(double zero_exponent) {
  const double p = std::ceil(2.0 / (1.0 + zero_exponent));
  return static_cast<int>(std::clamp(p, 1.0, 8.0));
}

int zero_depth(double zero_exponent, int p) {
  const double d = std::ceil(60.0 / (p * (1.0 + zero_exponent)));
  return static_cast<int>(std::clamp(d, 8.0, std::floor(900.0 / p)));
}

Piece origin_piece(double b, bool b_singular, double zero_exponent) {
  Piece piece;
  piece.kind = MapKind::power;
  piece.scale = b;
  piece.power = power_for(zero_exponent);
  append_graded(piece.panels, 0.0, 1.0, true, b_singular,
                zero_depth(zero_exponent, static_cast<int>(piece.power)), kBreakpointDepth);
  return piece;
}

Piece linear_piece(double a, double b, bool sing_a, bool sing_b) {
  Piece piece;
  append_graded(piece.panels, a, b, sing_a, sing_b, kBreakpointDepth, kBreakpointDepth);
  return piece;
}

Piece tail_piece(double from, double decay_scale) {
  Piece piece;
  piece.kind = MapKind::tail;
  piece.origin = from;
  piece.scale = decay_scale;
  append_graded(piece.panels, 0.0, 1.0, true, false, kTailDepth, 0);
  return piece;
}

std::vector<double> sorted_positive(std::span<const double> points, double lo, double hi) {
  std::vector<double> out;
  for (double p : points) {
    if (std::isfinite(p) && p > lo && p < hi) out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

struct Knot {
  double x;
  bool singular;
};

// 0, breakpoints and the fixed geometric points, merged and ordered.
std::vector<Knot> semi_infinite_knots(double decay_scale, std::span<const double> breakpoints) {
  std::vector<Knot> knots{{0.0, true}};
  for (double b : sorted_positive(breakpoints, 0.0, std::numeric_limits<double>::infinity())) {
    knots.push_back({b, true});
  }
  for (double f : {1.0, 2.0, 4.0, 8.0}) knots.push_back({f * decay_scale, false});
  std::sort(knots.begin(), knots.end(), [](const Knot& a, const Knot& b) { return a.x < b.x; });
  std::vector<Knot> merged;
  for (const Knot& k : knots) {
    if (!merged.empty() && k.x == merged.back().x) {
      merged.back().singular = merged.back().singular || k.singular;
    } else {
      merged.push_back(k);
    }
  }
  return merged;
}

std::vector<Piece> pieces_from_knots(const std::vector<Knot>& knots, double zero_exponent) {
  std::vector<Piece> pieces;
  for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
    if (i == 0) {
      pieces.push_back(origin_piece(knots[1].x, knots[1].singular, zero_exponent));
    } else {
      pieces.push_back(
          linear_piece(knots[i].x, knots[i + 1].x, knots[i].singular, knots[i + 1].singular));
    }
  }
  return pieces;
}

// Neumaier-compensated running sums of f and |f|.
struct Accumulator {
  double sum = 0.0, comp = 0.0, abs_sum = 0.0;

  void add(double v) {
    const double t = sum + v;
    if (std::abs(sum) >= std::abs(v)) {
      comp += (sum - t) + v;
    } else {
      comp += (v - t) + sum;
    }
    sum = t;
    abs_sum += std::abs(v);
  }
  double value() const { return sum + comp; }
};

void evaluate_piece(const Piece& piece, int level, const Integrand& f, Accumulator& acc) {
  visit_piece(piece, level, [&](double x, double w) {
    const double fx = f(x);
    if (!std::isfinite(fx)) {
      throw IntegrandFailure(x, "integrand is not finite at x = " + std::to_string(x));
    }
    acc.add(w * fx);
  });
}

ConvergenceReport run_levels(const std::vector<Piece>& pieces, const Integrand& f, double tol) {
  // Level differences below this are rounding noise; refining further cannot help.
  const double noise = 1e3 * std::numeric_limits<double>::epsilon();
  ConvergenceReport report;
  double previous = 0.0, previous_error = std::numeric_limits<double>::infinity();
  for (int level = 0; level <= kMaxLevels; ++level) {
    Accumulator acc;
    for (const Piece& piece : pieces) evaluate_piece(piece, level, f, acc);
    const double value = acc.value();
    report.value = value;
    report.abs_integral = acc.abs_sum;
    report.tolerance = tol * acc.abs_sum;
    report.levels_used = level + 1;
    if (level > 0) {
      const double error = std::max(std::abs(value - previous), noise * acc.abs_sum);
      report.estimated_error = error;
      if (level >= 2 && error <= previous_error) {
        if (error <= report.tolerance) {
          report.converged = true;
          return report;
        }
        if (error <= noise * acc.abs_sum) return report;  // tol is below the noise floor
      }
      previous_error = error;
    }
    previous = value;
  }
  return report;
}

void check_tolerance(double tol) {
  if (!(tol > 0.0) || !std::isfinite(tol)) {
    throw InvalidArgument("quadrature tolerance must be positive, got " + std::to_string(tol));
  }
}

void check_semi_infinite(double zero_exponent, double decay_scale) {
  if (!(zero_exponent > -1.0) || !std::isfinite(zero_exponent)) {
    throw InvalidArgument("integrand exponent at 0 must exceed -1, got " +
                          std::to_string(zero_exponent));
  }
  if (!(decay_scale > 0.0) || !std::isfinite(decay_scale)) {
    throw InvalidArgument("decay scale must be positive, got " + std::to_string(decay_scale));
  }
}

std::vector<Piece> interval_pieces(double a, double b, std::span<const double> breakpoints) {
  std::vector<double> cuts{a};
  for (double p : sorted_positive(breakpoints, a, b)) cuts.push_back(p);
  cuts.push_back(b);
  std::vector<Piece> pieces;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    pieces.push_back(linear_piece(cuts[i], cuts[i + 1], true, true));
  }
  return pieces;
}

CompositeRule collect(const std::vector<Piece>& pieces, int level) {
  CompositeRule rule;
  for (const Piece& piece : pieces) {
    visit_piece(piece, level, [&](double x, double w) {
      rule.nodes.push_back(x);
      rule.weights.push_back(w);
    });
  }
  return rule;
}

}  // namespace

QuadratureRule gauss_legendre(int n) {
  if (n < 1 || n > 512) {
    throw InvalidArgument("Gauss-Legendre order must lie in [1, 512], got " + std::to_string(n));
  }
  // P_n(x) and P_n'(x) by the three-term recurrence.
  auto legendre = [n](double x) {
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    return std::pair{p1, n * (x * p1 - p0) / (x * x - 1.0)};
  };

  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    for (int it = 0; it < 100; ++it) {
      const auto [p, dp] = legendre(x);
      const double dx = p / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    const double dp = legendre(x).second;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

ConvergenceReport integrate_semi_infinite(const Integrand& f, double zero_exponent,
                                          double decay_scale, double tol,
                                          std::span<const double> breakpoints) {
  check_tolerance(tol);
  check_semi_infinite(zero_exponent, decay_scale);

  const std::vector<Knot> knots = semi_infinite_knots(decay_scale, breakpoints);
  std::vector<Piece> pieces = pieces_from_knots(knots, zero_exponent);

  // March outward in steps of 8 decay scales until two successive segments are
  // negligible against everything accumulated so far.
  Accumulator running;
  for (const Piece& piece : pieces) evaluate_piece(piece, 0, f, running);
  const double step = 8.0 * decay_scale;
  double edge = knots.back().x;
  int quiet = 0;
  for (int segment = 0; segment < kMaxMarchSegments && quiet < 2; ++segment) {
    Piece piece = linear_piece(edge, edge + step, false, false);
    Accumulator local;
    evaluate_piece(piece, 0, f, local);
    running.add(local.value());
    quiet = (local.abs_sum <= kNegligible * running.abs_sum) ? quiet + 1 : 0;
    pieces.push_back(std::move(piece));
    edge += step;
  }
  pieces.push_back(tail_piece(edge, decay_scale));

  return run_levels(pieces, f, tol);
}

ConvergenceReport integrate_interval(const Integrand& f, double a, double b, double tol,
                                     std::span<const double> breakpoints) {
  check_tolerance(tol);
  if (!(b > a) || !std::isfinite(a) || !std::isfinite(b)) {
    throw InvalidArgument("integration interval must be finite with a < b");
  }
  return run_levels(interval_pieces(a, b, breakpoints), f, tol);
}

CompositeRule semi_infinite_rule(double zero_exponent, double decay_scale, double cutoff,
                                 std::span<const double> breakpoints, int level) {
  check_semi_infinite(zero_exponent, decay_scale);
  if (level < 0 || level > kMaxLevels) throw InvalidArgument("rule level out of range");
  std::vector<Knot> knots = semi_infinite_knots(decay_scale, breakpoints);
  std::vector<Piece> pieces = pieces_from_knots(knots, zero_exponent);
  double edge = knots.back().x;
  const double step = 8.0 * decay_scale;
  while (edge < cutoff) {
    pieces.push_back(linear_piece(edge, edge + step, false, false));
    edge += step;
  }
  pieces.push_back(tail_piece(edge, decay_scale));
  return collect(pieces, level);
}

CompositeRule interval_rule(double a, double b, std::span<const double> breakpoints, int level) {
  if (!(b > a)) throw InvalidArgument("integration interval must satisfy a < b");
  if (level < 0 || level > kMaxLevels) throw InvalidArgument("rule level out of range");
  return collect(interval_pieces(a, b, breakpoints), level);
}

}  // namespace kgc
