#pragma once

// Physical scales, quantum-number validation and the derived relativistic
// parameters of a Klein-Gordon particle bound by a point Coulomb charge.
//
// Units are atomic (hbar = m_e = e = 1), so the speed of light is 1/alpha and
// the rest energy of a particle of mass m is m c^2.  The nucleus is infinitely
// heavy.

namespace kgc {

inline constexpr double kDefaultFineStructure = 7.2973525693e-3;  // CODATA 2018
inline constexpr double kPionMass = 273.132054;                   // pi- mass, a.u.
inline constexpr double kCriticalTolerance = 1e-9;

class SystemSpec {
 public:
  double Z() const noexcept { return Z_; }
  double mass() const noexcept { return mass_; }
  double alpha() const noexcept { return alpha_; }

  double c() const noexcept { return 1.0 / alpha_; }
  double rest_energy() const noexcept { return mass_ / (alpha_ * alpha_); }
  // Coulomb coupling Z*alpha.
  double gamma() const noexcept { return Z_ * alpha_; }

  friend bool operator==(const SystemSpec&, const SystemSpec&) = default;

 private:
  friend SystemSpec make_system(double Z, double mass, double alpha);
  SystemSpec(double Z, double mass, double alpha) : Z_(Z), mass_(mass), alpha_(alpha) {}

  double Z_;
  double mass_;
  double alpha_;
};

class QuantumState {
 public:
  int n() const noexcept { return n_; }
  int l() const noexcept { return l_; }
  int m() const noexcept { return m_; }

  bool is_circular() const noexcept { return l_ == n_ - 1; }

  friend bool operator==(const QuantumState&, const QuantumState&) = default;

 private:
  friend QuantumState make_state(int n, int l, int m);
  QuantumState(int n, int l, int m) : n_(n), l_(l), m_(m) {}

  int n_;
  int l_;
  int m_;
};

/// Derived quantities for one (system, state) pair.
struct KgParams {
  double gamma;           // Z alpha
  double l_prime;         // effective orbital number, -1/2 < l' <= l
  double effective_n;     // n - l + l'
  double epsilon;         // bound-state energy, 0 < epsilon < m c^2
  double binding_energy;  // m c^2 - epsilon, evaluated without cancellation
  double beta;            // inverse length scale of s = beta r
  double lambda;          // Coulomb parameter of the reduced radial equation
  double norm_sq;         // charge-normalization constant of u(s)
};

/// Throws InvalidArgument unless Z > 0, mass > 0 and 0 < alpha < 1.
SystemSpec make_system(double Z, double mass, double alpha = kDefaultFineStructure);

/// Throws InvalidQuantumNumbers naming the first violated constraint.
QuantumState make_state(int n, int l, int m);

/// Throws SupercriticalCharge when Z alpha >= l + 1/2 - kCriticalTolerance.
KgParams kg_params(const SystemSpec& system, const QuantumState& state);

/// lambda evaluated directly from its definition 2 epsilon Z e^2 / (hbar c)^2 beta.
double coulomb_lambda(const SystemSpec& system, double epsilon, double beta);

const char* orbital_letter(int l);

}  // namespace kgc
