#include <cmath>

#include <doctest.h>

#include "kgcoulomb/constants.hpp"
#include "kgcoulomb/quadrature.hpp"
#include "kgcoulomb/schrodinger.hpp"
#include "oracles.hpp"

using namespace kgc;
using namespace kgc::testing;

TEST_CASE("hydrogenic ground state density") {
  for (double Z : {1.0, 68.0}) {
    const SystemSpec s = make_system(Z, kPionMass);
    const RadialDensity d = sch_density(s, make_state(1, 0, 0));
    const double kappa = s.mass() * Z;
    CHECK(d.theory() == Theory::schrodinger);
    CHECK(d.zero_exponent() == 0.0);
    CHECK(d.decay_scale() == doctest::Approx(1 / kappa));
    for (double x : {0.01, 0.5, 1.0, 4.0, 20.0}) {
      const double r = x / kappa;
      CHECK(d.value(r) == doctest::Approx(4 * kappa * kappa * kappa * std::exp(-2 * kappa * r)).epsilon(1e-13));
    }
  }
}

TEST_CASE("Schroedinger densities are normalized with n-l-1 nodes") {
  const SystemSpec s = make_system(20, kPionMass);
  for (const QuantumState& q : states_up_to(8)) {
    const RadialDensity d = sch_density(s, q);
    const auto r = integrate_semi_infinite([&](double x) { return d.value(x) * x * x; },
                                           d.zero_exponent() + 2, d.decay_scale(), 1e-10, d.nodes());
    CAPTURE(q.n());
    CAPTURE(q.l());
    CHECK(r.converged);
    CHECK(std::abs(r.value - 1.0) < 1e-10);
    CHECK(d.zero_exponent() == 2.0 * q.l());
    CHECK(d.nodes().size() == static_cast<std::size_t>(q.n() - q.l() - 1));
    for (double node : d.nodes()) CHECK(d.value(node) < 1e-12 * d.value(node * 1.3 + d.decay_scale()));
  }
}

TEST_CASE("Schroedinger energies") {
  CHECK(sch_energy(make_system(1, 1), make_state(1, 0, 0)) == doctest::Approx(-0.5));
  CHECK(sch_energy(make_system(1, 1), make_state(3, 2, 1)) == doctest::Approx(-1.0 / 18));
  CHECK(sch_energy(make_system(68, kPionMass), make_state(1, 0, 0)) ==
        doctest::Approx(-kPionMass * 68 * 68 / 2.0).epsilon(1e-15));

  // KG binding energy minus |E| is a relative (Z alpha)^2 correction
  const SystemSpec weak = make_system(0.1, kPionMass);
  for (const QuantumState& q : states_up_to(4)) {
    const double e = std::abs(sch_energy(weak, q));
    const double diff = kg_params(weak, q).binding_energy - e;
    const double g2 = weak.gamma() * weak.gamma();
    CHECK(diff > 0.0);
    CHECK(diff < 5.0 * g2 * e);
    CHECK(diff > 0.01 * g2 * e);
  }
}

TEST_CASE("Schroedinger moments against textbook formulas") {
  const SystemSpec s = make_system(68, kPionMass);
  for (const QuantumState& q : states_up_to(8)) {
    CHECK(sch_radial_moment(s, q, 0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(rel_diff(sch_radial_moment(s, q, 1), textbook_r_mean(s.mass(), 68, q.n(), q.l())) < 1e-12);
    CHECK(rel_diff(sch_radial_moment(s, q, 2), textbook_r2(s.mass(), 68, q.n(), q.l())) < 1e-12);
  }
}
