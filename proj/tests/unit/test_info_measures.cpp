#include <cmath>
#include <numbers>
#include <tuple>
#include <utility>

#include <doctest.h>

#include "kgcoulomb/errors.hpp"
#include "kgcoulomb/info_measures.hpp"
#include "kgcoulomb/schrodinger.hpp"
#include "oracles.hpp"

using namespace kgc;
using namespace kgc::testing;

TEST_CASE("radial Shannon entropy of the hydrogenic ground state") {
  const double s1 = shannon_radial(sch_density(make_system(1, 1), make_state(1, 0, 0)), 1e-12);
  CHECK(std::abs(s1 - (3.0 - std::log(4.0))) < 1e-10);
  // kappa^3 D(kappa r) lowers the entropy by 3 ln kappa
  const double s2 = shannon_radial(sch_density(make_system(2, 1), make_state(1, 0, 0)), 1e-12);
  CHECK(std::abs(s2 - (s1 - 3 * std::log(2.0))) < 1e-8);
  const SystemSpec pion = make_system(68, kPionMass);
  const double kappa = pion.mass() * 68;
  CHECK(std::abs(shannon_radial(sch_density(pion, make_state(1, 0, 0))) -
                 (3 - std::log(4.0) - 3 * std::log(kappa))) < 1e-8);
}

TEST_CASE("scaling law holds for excited and relativistic states") {
  for (auto [n, l] : {std::pair{2, 1}, {3, 0}, {4, 2}}) {
    const QuantumState q = make_state(n, l, 0);
    const double a = shannon_radial(sch_density(make_system(3, 1), q), 1e-11);
    const double b = shannon_radial(sch_density(make_system(6, 1), q), 1e-11);
    CHECK(std::abs(b - (a - 3 * std::log(2.0))) < 1e-8);
    // KG depends on Z alpha only through gamma; scaling the mass is exact
    const double c = shannon_radial(kg_density(make_system(40, 1), q), 1e-11);
    const double d = shannon_radial(kg_density(make_system(40, 2), q), 1e-11);
    CHECK(std::abs(d - (c - 3 * std::log(2.0))) < 1e-8);
  }
}

TEST_CASE("KG ground-state entropy is finite across substitution powers") {
  const RadialDensity d = kg_density(make_system(68, kPionMass), make_state(1, 0, 0));
  const auto integrand = [&](double r) {
    const double v = d.value(r);
    return v > 0.0 ? -v * std::log(v) * r * r : 0.0;
  };
  // exponent hints 0.123 and -0.5 select substitution powers 2 and 4
  const auto p2 = integrate_semi_infinite(integrand, d.zero_exponent() + 2, d.decay_scale(), 1e-10);
  const auto p4 = integrate_semi_infinite(integrand, -0.5, d.decay_scale(), 1e-10);
  CHECK(std::isfinite(p2.value));
  CHECK(std::abs(p2.value - p4.value) < 1e-7 * std::abs(p2.value));
  CHECK(std::abs(shannon_radial(d) - p2.value) < 1e-7 * std::abs(p2.value));
  const auto report = shannon_radial_report(d);
  CHECK(report.converged);
  CHECK(report.estimated_error <= report.tolerance);
}

TEST_CASE("angular Shannon entropy") {
  CHECK(shannon_angular(0, 0) == doctest::Approx(std::log(4 * std::numbers::pi)).epsilon(1e-15));
  CHECK(std::abs(shannon_angular(1, 0, 1e-12) - 2.0990786249678478) < 1e-10);

  // 1e6-point trapezoid on -2 pi \int A ln A sin(theta) for A = 3 cos^2 / 4 pi
  const int steps = 1000000;
  const double h = std::numbers::pi / steps;
  double sum = 0.0;
  for (int i = 1; i < steps; ++i) {
    const double t = i * h;
    const double a = 3 * std::cos(t) * std::cos(t) / (4 * std::numbers::pi);
    if (a > 0) sum += a * std::log(a) * std::sin(t);
  }
  CHECK(std::abs(shannon_angular(1, 0) + 2 * std::numbers::pi * sum * h) < 1e-8);

  for (int l = 1; l <= 5; ++l) {
    for (int m = 1; m <= l; ++m) CHECK(shannon_angular(l, m) == shannon_angular(l, -m));
  }
  // the uniform distribution maximizes the entropy on the sphere
  for (int l = 1; l <= 6; ++l) CHECK(shannon_angular(l, 0) < std::log(4 * std::numbers::pi));
  CHECK_THROWS_AS(shannon_angular(1, 2), InvalidArgument);
}

TEST_CASE("Shannon report fields") {
  const SystemSpec s = make_system(68, kPionMass);
  for (Theory t : {Theory::klein_gordon, Theory::schrodinger}) {
    const MeasureReport r = shannon_report(s, make_state(3, 1, 1), t);
    CHECK(r.theory == t);
    CHECK(r.shannon_total == doctest::Approx(r.shannon_radial + r.shannon_angular).epsilon(1e-15));
    CHECK(r.entropic_power ==
          doctest::Approx(std::exp(2 * r.shannon_total / 3) / (2 * std::numbers::pi * std::numbers::e)));
    CHECK(r.entropic_power > 0.0);
    CHECK_FALSE(r.fisher.has_value());
    CHECK(r.diagnostics.converged);
  }
  CHECK(entropic_power(0.0) == doctest::Approx(1 / (2 * std::numbers::pi * std::numbers::e)));

  const QuantumState g = make_state(1, 0, 0);
  CHECK(shannon_report(s, g, Theory::klein_gordon).entropic_power <
        shannon_report(s, g, Theory::schrodinger).entropic_power);

  double first_ratio = 0.0, first_power = 0.0;
  for (int m = 0; m <= 2; ++m) {
    const QuantumState q = make_state(3, 2, m);
    const double kg = shannon_report(s, q, Theory::klein_gordon).entropic_power;
    const double sch = shannon_report(s, q, Theory::schrodinger).entropic_power;
    if (m == 0) {
      first_ratio = kg / sch;
      first_power = kg;
    } else {
      CHECK(std::abs(kg / sch - first_ratio) < 1e-9);
      CHECK(rel_diff(kg, first_power) > 1e-3);
    }
  }
}

TEST_CASE("Shannon entropy matches direct double quadrature") {
  const SystemSpec s = make_system(68, kPionMass);
  for (auto [n, l, m] : {std::tuple{1, 0, 0}, {2, 1, 1}, {3, 2, 0}, {4, 1, 1}, {4, 3, 3}}) {
    const QuantumState q = make_state(n, l, m);
    for (Theory t : {Theory::klein_gordon, Theory::schrodinger}) {
      const RadialDensity d = radial_density(s, q, t);
      const double direct = shannon_2d(d, angular_density(l, m), 1);
      CHECK(std::abs(shannon_report(s, q, t).shannon_total - direct) < 1e-7);
    }
  }
}

TEST_CASE("angular Fisher factor") {
  for (int l = 0; l <= 6; ++l) {
    for (int m = -l; m <= l; ++m) {
      const double expected = 4.0 * l * (l + 1) - 2.0 * std::abs(m) * (2 * l + 1);
      CHECK(fisher_angular(l, m) == doctest::Approx(expected).epsilon(1e-9).scale(1.0));
    }
  }
}

TEST_CASE("Schroedinger Fisher information closed form") {
  for (double Z : {1.0, 68.0}) {
    const SystemSpec s = make_system(Z, kPionMass);
    for (int n = 1; n <= 5; ++n) {
      for (int l = 0; l < n; ++l) {
        for (int m = -l; m <= l; ++m) {
          const double expected = 4 * s.mass() * s.mass() * Z * Z * (n - std::abs(m)) / (n * n * n);
          CHECK(rel_diff(fisher(s, make_state(n, l, m), Theory::schrodinger), expected) < 1e-7);
        }
      }
    }
  }
}

TEST_CASE("KG Fisher information") {
  const SystemSpec s = make_system(68, kPionMass);
  for (int n = 1; n <= 6; ++n) {
    try {
      fisher(s, make_state(n, 0, 0), Theory::klein_gordon);
      FAIL("S-state Fisher information should be undefined");
    } catch (const FisherUndefined& e) {
      CHECK(e.kind() == ErrorKind::fisher_undefined);
    }
    CHECK_FALSE(measure_report(s, make_state(n, 0, 0), Theory::klein_gordon).fisher.has_value());
    CHECK(measure_report(s, make_state(n, 0, 0), Theory::schrodinger).fisher.has_value());
  }
  CHECK_THROWS_AS(fisher(make_system(0.5, 1), make_state(2, 0, 0), Theory::klein_gordon),
                  FisherUndefined);
  for (int n = 2; n <= 6; ++n) {
    for (int l = 1; l < n; ++l) {
      for (int m = 0; m <= l; ++m) {
        const QuantumState q = make_state(n, l, m);
        const double kg = fisher(s, q, Theory::klein_gordon);
        const double sch = fisher(s, q, Theory::schrodinger);
        CHECK(kg > 0.0);
        CHECK(sch / kg < 1.0);
      }
    }
  }
}

TEST_CASE("Fisher decomposition matches the direct gradient integral") {
  const SystemSpec s = make_system(68, kPionMass);
  for (auto [n, l, m] : {std::tuple{2, 1, 0}, {2, 1, 1}, {3, 2, 1}, {4, 1, 0}, {4, 3, 2}, {3, 0, 0}}) {
    const QuantumState q = make_state(n, l, m);
    for (Theory t : {Theory::klein_gordon, Theory::schrodinger}) {
      if (t == Theory::klein_gordon && l == 0) continue;
      const double direct = fisher_2d(radial_density(s, q, t), angular_density(l, m), 1);
      CHECK(rel_diff(fisher(s, q, t), direct) < 1e-6);
    }
  }
}

TEST_CASE("measure reports carry finite values and diagnostics") {
  const SystemSpec s = make_system(68, kPionMass);
  for (const QuantumState& q : states_up_to(4)) {
    for (Theory t : {Theory::klein_gordon, Theory::schrodinger}) {
      const MeasureReport r = measure_report(s, q, t);
      CHECK(std::isfinite(r.shannon_total));
      CHECK(std::isfinite(r.entropic_power));
      if (r.fisher) CHECK(std::isfinite(*r.fisher));
      CHECK(r.diagnostics.converged);
      CHECK(r.diagnostics.max_levels >= 2);
      CHECK(r.diagnostics.max_estimated_error >= 0.0);
    }
  }
}
