#include <cmath>
#include <string>

#include <doctest.h>

#include "kgcoulomb/constants.hpp"
#include "kgcoulomb/errors.hpp"
#include "oracles.hpp"

using namespace kgc;
using kgc::testing::rel_diff;

TEST_CASE("make_system validates and derives c") {
  const SystemSpec pion = make_system(68, kPionMass);
  CHECK(pion.Z() == 68.0);
  CHECK(pion.mass() == kPionMass);
  CHECK(pion.alpha() == kDefaultFineStructure);
  CHECK(pion.c() == doctest::Approx(137.035999084).epsilon(1e-11));
  CHECK(pion.rest_energy() == doctest::Approx(kPionMass * pion.c() * pion.c()).epsilon(1e-15));

  const SystemSpec hydrogen = make_system(1, 1);
  CHECK(hydrogen.gamma() == kDefaultFineStructure);

  CHECK_THROWS_AS(make_system(0, 1), InvalidArgument);
  CHECK_THROWS_AS(make_system(-2, 1), InvalidArgument);
  CHECK_THROWS_AS(make_system(1, 0), InvalidArgument);
  CHECK_THROWS_AS(make_system(1, 1, 0.0), InvalidArgument);
  CHECK_THROWS_AS(make_system(1, 1, 1.0), InvalidArgument);
  CHECK_THROWS_AS(make_system(std::nan(""), 1), InvalidArgument);
  CHECK_NOTHROW(make_system(0.37, 1));
}

TEST_CASE("make_state reports the violated constraint") {
  CHECK(make_state(1, 0, 0).is_circular());
  const QuantumState p4 = make_state(4, 1, 0);
  CHECK(p4.n() == 4);
  CHECK(p4.l() == 1);
  CHECK_FALSE(p4.is_circular());

  auto constraint = [](int n, int l, int m) {
    try {
      make_state(n, l, m);
    } catch (const InvalidQuantumNumbers& e) {
      CHECK(e.kind() == ErrorKind::invalid_quantum_numbers);
      return e.constraint();
    }
    return std::string("none");
  };
  CHECK(constraint(2, 2, 0) == "l <= n-1");
  CHECK(constraint(0, 0, 0) == "n >= 1");
  CHECK(constraint(3, -1, 0) == "l >= 0");
  CHECK(constraint(3, 1, 2) == "|m| <= l");
  CHECK(constraint(3, 1, -2) == "|m| <= l");
  CHECK(constraint(3, 2, -2) == "none");
}

TEST_CASE("kg_params for the pionic ground state") {
  const KgParams p = kg_params(make_system(68, kPionMass), make_state(1, 0, 0));
  CHECK(p.gamma == doctest::Approx(0.496219974712).epsilon(1e-11));
  // sqrt(1/4 - gamma^2) - 1/2 in 50-digit arithmetic
  CHECK(std::abs(p.l_prime - (-0.43863440136)) < 1e-10);
  CHECK(p.effective_n == doctest::Approx(1.0 + p.l_prime).epsilon(1e-15));
  CHECK(p.epsilon > 0.0);
  CHECK(p.epsilon < make_system(68, kPionMass).rest_energy());
  CHECK(p.beta > 0.0);
  CHECK(p.norm_sq > 0.0);
}

TEST_CASE("kg_params rejects supercritical coupling") {
  CHECK_THROWS_AS(kg_params(make_system(137.2, 1), make_state(1, 0, 0)), SupercriticalCharge);
  CHECK_THROWS_AS(kg_params(make_system(137.2, kPionMass), make_state(2, 0, 0)),
                  SupercriticalCharge);
  // Z alpha = 1/2 exactly is the critical point itself
  const double critical = 0.5 / kDefaultFineStructure;
  CHECK_THROWS_AS(kg_params(make_system(critical, 1), make_state(1, 0, 0)), SupercriticalCharge);
  CHECK_NOTHROW(kg_params(make_system(critical * (1 - 1e-6), 1), make_state(1, 0, 0)));
  // P states stay subcritical up to Z alpha = 3/2
  CHECK_NOTHROW(kg_params(make_system(137.2, 1), make_state(2, 1, 0)));
}

TEST_CASE("kg_params internal consistency") {
  for (double Z : {0.01, 1.0, 20.0, 68.0, 100.0}) {
    const SystemSpec s = make_system(Z, kPionMass);
    for (int n = 1; n <= 8; ++n) {
      for (int l = 0; l < n; ++l) {
        if (s.gamma() >= l + 0.5) continue;
        const KgParams p = kg_params(s, make_state(n, l, 0));
        CAPTURE(Z);
        CAPTURE(n);
        CAPTURE(l);
        CHECK(rel_diff(coulomb_lambda(s, p.epsilon, p.beta), p.lambda) < 1e-12);
        CHECK(rel_diff(p.lambda, n - l + p.l_prime) < 1e-14);
        CHECK(rel_diff(p.epsilon / p.beta, 0.5 * s.c() * p.effective_n / p.gamma) < 1e-12);
        CHECK(p.l_prime > -0.5);
        CHECK(p.l_prime <= l);
        const double sq = std::sqrt((l + 0.5) * (l + 0.5) - p.gamma * p.gamma) - 0.5;
        CHECK(std::abs(p.l_prime - sq) < 1e-12);
        const double mc2 = s.rest_energy();
        // the direct differences cancel catastrophically as gamma -> 0
        const double cancellation = 1e-15 * mc2 / p.binding_energy + 1e-14;
        CHECK(rel_diff(p.binding_energy, mc2 - p.epsilon) < cancellation);
        CHECK(rel_diff(p.beta, 2.0 * std::sqrt(mc2 * mc2 - p.epsilon * p.epsilon) / s.c()) <
              cancellation);
      }
    }
  }
}

TEST_CASE("epsilon increases with n at fixed l") {
  const SystemSpec s = make_system(68, kPionMass);
  for (int l = 0; l <= 3; ++l) {
    double previous = 0.0;
    for (int n = l + 1; n <= 12; ++n) {
      const double eps = kg_params(s, make_state(n, l, 0)).epsilon;
      CHECK(eps > previous);
      previous = eps;
    }
  }
}

TEST_CASE("weak coupling reduces to the Bohr levels") {
  const QuantumState st = make_state(3, 1, 0);
  auto deviation = [&](double Z) {
    const SystemSpec s = make_system(Z, kPionMass);
    const double bohr = s.mass() * Z * Z / 18.0;
    return kg_params(s, st).binding_energy / bohr - 1.0;
  };
  // leading correction is O((Z alpha)^2): quarter it by halving Z
  const double d1 = deviation(0.2), d2 = deviation(0.1);
  CHECK(std::abs(d1) < 1e-5);
  CHECK(d1 / d2 == doctest::Approx(4.0).epsilon(1e-3));

  double previous = -1.0;
  for (double Z : {60.0, 30.0, 10.0, 1.0, 1e-2, 1e-4}) {
    const KgParams p = kg_params(make_system(Z, 1), st);
    CHECK(p.l_prime > previous);
    previous = p.l_prime;
  }
  const KgParams tiny = kg_params(make_system(1e-6, 1), st);
  CHECK(std::abs(tiny.l_prime - 1.0) < 1e-15);
  CHECK(tiny.epsilon / make_system(1e-6, 1).rest_energy() == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("orbital letters") {
  CHECK(std::string(orbital_letter(0)) == "S");
  CHECK(std::string(orbital_letter(1)) == "P");
  CHECK(std::string(orbital_letter(2)) == "D");
  CHECK(std::string(orbital_letter(3)) == "F");
}
