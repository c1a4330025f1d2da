#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kgcoulomb/constants.hpp"
#include "kgcoulomb/info_measures.hpp"
#include "kgcoulomb/moments.hpp"

namespace kgc {

enum class Measure { centroid, variance, shannon_power, fisher };

std::string_view measure_name(Measure measure);
Measure parse_measure(std::string_view name);  // throws InvalidArgument
std::vector<Measure> parse_measure_list(std::string_view comma_list);

/// One (state, measure) comparison.  ratio is KG/Schroedinger except for Fisher,
/// where it is Schroedinger/KG.  Missing values are the undefined KG Fisher of
/// S states and rows whose evaluation failed (converged == false).
struct ScanRecord {
  Measure measure = Measure::centroid;
  double Z = 0.0;
  double mass = 0.0;
  int n = 1, l = 0, m = 0;
  std::optional<double> value_kg;
  std::optional<double> value_sch;
  std::optional<double> ratio;
  bool converged = true;

  friend bool operator==(const ScanRecord&, const ScanRecord&) = default;
};

enum class Axis { n, l, Z, m };
enum class Family { circular, sstate, fixed };

Axis parse_axis(std::string_view name);
Family parse_family(std::string_view name);

/// Inclusive arithmetic progression "first:last:step".
struct Range {
  double first = 1.0;
  double last = 1.0;
  double step = 1.0;

  std::vector<double> values() const;
};
Range parse_range(std::string_view text);

struct Tolerances {
  double shannon = kShannonTolerance;
  double fisher = kFisherTolerance;
};

struct ScanConfig {
  Axis axis = Axis::n;
  Family family = Family::fixed;
  Range range;
  double Z = 68.0;
  double mass = kPionMass;
  double alpha = kDefaultFineStructure;
  int n = 1, l = 0, m = 0;
  // Explicit states for Z scans, e.g. parsed from "1S,2S,2P".
  std::vector<QuantumState> states;
  std::vector<Measure> measures{Measure::centroid, Measure::variance, Measure::shannon_power,
                                Measure::fisher};
  Tolerances tol;
  unsigned threads = 0;  // 0: hardware concurrency
};

/// Parses spectroscopic labels such as "1S", "4P", "3D" (m = 0).
std::vector<QuantumState> parse_state_list(std::string_view comma_list);

struct GridPoint {
  double Z;
  QuantumState state;
};

/// Grid in deterministic order.  Throws InvalidArgument / InvalidQuantumNumbers
/// when the axis, family and range do not describe valid states.
std::vector<GridPoint> scan_grid(const ScanConfig& config);

struct ScanOutput {
  std::vector<ScanRecord> records;
  std::vector<std::string> messages;  // per-row errors, in grid order
};

/// Evaluates every grid point (concurrently) and returns the records in grid
/// order, one per point per measure.  Per-point failures become rows with
/// converged == false and a message; the scan itself does not throw for them.
ScanOutput run_scan(const ScanConfig& config);

/// Records for a single state; failures are reported through `messages`.
std::vector<ScanRecord> evaluate_state(const SystemSpec& system, const QuantumState& state,
                                       std::span<const Measure> measures, const Tolerances& tol,
                                       std::vector<std::string>& messages);

/// Everything known about one state in both theories.  Throws on any error in
/// either theory except the undefined KG Fisher information.
struct StateReport {
  SystemSpec system;
  QuantumState state;
  KgParams kg;
  double sch_energy;
  MomentsResult kg_moments;
  MomentsResult sch_moments;
  MeasureReport kg_measures;
  MeasureReport sch_measures;
  std::vector<ScanRecord> records;
};
StateReport state_report(const SystemSpec& system, const QuantumState& state,
                         const Tolerances& tol = {});

MomentsResult sch_heisenberg(const SystemSpec& system, const QuantumState& state);

struct ProfileRow {
  double r;
  double d_kg;
  double d_sch;
};
/// D_kg and D_sch on `points` radii between r_min and r_max, log or linear spaced.
std::vector<ProfileRow> density_profile(const SystemSpec& system, const QuantumState& state,
                                        double r_min, double r_max, int points, bool log_spaced);
/// Default radial window: 1e-4/(mass Z) .. (2n^2 + 20n)/(mass Z).
std::pair<double, double> default_profile_window(const SystemSpec& system,
                                                 const QuantumState& state);

// Output formats.  Numbers use the shortest round-trip decimal representation.
std::string format_number(double value);
void write_csv(std::ostream& out, std::span<const ScanRecord> records);
std::vector<ScanRecord> read_csv(std::istream& in);
void write_jsonl(std::ostream& out, std::span<const ScanRecord> records);
std::vector<ScanRecord> read_jsonl(std::istream& in);
void write_profile_csv(std::ostream& out, std::span<const ProfileRow> rows);

inline constexpr std::string_view kCsvHeader =
    "measure,Z,mass,n,l,m,value_kg,value_sch,ratio,converged";

}  // namespace kgc
