#include "kgcoulomb/scan.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "kgcoulomb/errors.hpp"
#include "kgcoulomb/schrodinger.hpp"

namespace kgc {
namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

double parse_double(std::string_view text, std::string_view what) {
  const std::string t = trim(text);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (ec != std::errc{} || ptr != t.data() + t.size() || t.empty() || !std::isfinite(value)) {
    throw InvalidArgument("cannot parse " + std::string(what) + " from '" + t + "'");
  }
  return value;
}

int parse_int(std::string_view text, std::string_view what) {
  const std::string t = trim(text);
  int value = 0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (ec != std::errc{} || ptr != t.data() + t.size() || t.empty()) {
    throw InvalidArgument("cannot parse " + std::string(what) + " from '" + t + "'");
  }
  return value;
}

std::optional<double> finite_or_empty(double v) {
  return std::isfinite(v) ? std::optional<double>(v) : std::nullopt;
}

std::string describe(double Z, const QuantumState& s) {
  return "Z=" + format_number(Z) + " n=" + std::to_string(s.n()) + " l=" + std::to_string(s.l()) +
         " m=" + std::to_string(s.m());
}

// Values of one measure in both theories.
struct Pair {
  std::optional<double> kg;
  std::optional<double> sch;
  bool converged = true;
};

}  // namespace

std::string_view measure_name(Measure measure) {
  switch (measure) {
    case Measure::centroid: return "centroid";
    case Measure::variance: return "variance";
    case Measure::shannon_power: return "shannon_power";
    case Measure::fisher: return "fisher";
  }
  return "unknown";
}

Measure parse_measure(std::string_view name) {
  const std::string t = trim(name);
  for (Measure m : {Measure::centroid, Measure::variance, Measure::shannon_power, Measure::fisher}) {
    if (t == measure_name(m)) return m;
  }
  throw InvalidArgument("unknown measure '" + t +
                        "' (expected centroid, variance, shannon_power or fisher)");
}

std::vector<Measure> parse_measure_list(std::string_view comma_list) {
  std::vector<Measure> out;
  for (const auto& item : split(comma_list, ',')) {
    if (!item.empty()) out.push_back(parse_measure(item));
  }
  if (out.empty()) throw InvalidArgument("measure list is empty");
  return out;
}

Axis parse_axis(std::string_view name) {
  const std::string t = trim(name);
  if (t == "n") return Axis::n;
  if (t == "l") return Axis::l;
  if (t == "Z") return Axis::Z;
  if (t == "m") return Axis::m;
  throw InvalidArgument("unknown scan axis '" + t + "' (expected n, l, Z or m)");
}

Family parse_family(std::string_view name) {
  const std::string t = trim(name);
  if (t == "circular") return Family::circular;
  if (t == "sstate") return Family::sstate;
  if (t == "fixed") return Family::fixed;
  throw InvalidArgument("unknown family '" + t + "' (expected circular, sstate or fixed)");
}

Range parse_range(std::string_view text) {
  const auto parts = split(text, ':');
  if (parts.size() < 2 || parts.size() > 3) {
    throw InvalidArgument("range must look like first:last[:step], got '" + std::string(text) + "'");
  }
  Range r;
  r.first = parse_double(parts[0], "range start");
  r.last = parse_double(parts[1], "range end");
  r.step = parts.size() == 3 ? parse_double(parts[2], "range step") : 1.0;
  if (!(r.step > 0.0)) throw InvalidArgument("range step must be positive");
  if (r.last < r.first) throw InvalidArgument("range end precedes its start");
  return r;
}

std::vector<double> Range::values() const {
  std::vector<double> out;
  const double slack = 1e-9 * step;
  for (long i = 0;; ++i) {
    const double v = first + static_cast<double>(i) * step;
    if (v > last + slack) break;
    out.push_back(v);
    if (out.size() > 100000) throw InvalidArgument("range has too many points");
  }
  return out;
}

std::vector<QuantumState> parse_state_list(std::string_view comma_list) {
  static constexpr std::string_view kLetters = "SPDFGHIKLMNOQRTU";
  std::vector<QuantumState> out;
  for (const auto& item : split(comma_list, ',')) {
    if (item.empty()) continue;
    const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(item.back())));
    const auto l = kLetters.find(letter);
    if (l == std::string_view::npos || item.size() < 2) {
      throw InvalidArgument("cannot parse state label '" + item + "' (expected e.g. 2P)");
    }
    const int n = parse_int(std::string_view(item).substr(0, item.size() - 1), "principal number");
    out.push_back(make_state(n, static_cast<int>(l), 0));
  }
  if (out.empty()) throw InvalidArgument("state list is empty");
  return out;
}

std::vector<GridPoint> scan_grid(const ScanConfig& config) {
  auto as_int = [](double v, const char* what) {
    if (std::abs(v - std::round(v)) > 1e-9) {
      throw InvalidArgument(std::string(what) + " scan needs integer range values");
    }
    return static_cast<int>(std::lround(v));
  };
  auto family_state = [&](int n) {
    switch (config.family) {
      case Family::circular: return make_state(n, n - 1, std::clamp(config.m, -(n - 1), n - 1));
      case Family::sstate: return make_state(n, 0, 0);
      case Family::fixed: break;
    }
    return make_state(n, config.l, config.m);
  };

  std::vector<GridPoint> grid;
  const auto values = config.range.values();
  switch (config.axis) {
    case Axis::n:
      for (double v : values) grid.push_back({config.Z, family_state(as_int(v, "n"))});
      break;
    case Axis::l:
      for (double v : values) grid.push_back({config.Z, make_state(config.n, as_int(v, "l"), config.m)});
      break;
    case Axis::m:
      for (double v : values) grid.push_back({config.Z, make_state(config.n, config.l, as_int(v, "m"))});
      break;
    case Axis::Z: {
      const std::vector<QuantumState> states =
          config.states.empty() ? std::vector<QuantumState>{family_state(config.n)} : config.states;
      for (double Z : values) {
        if (!(Z > 0.0)) throw InvalidArgument("Z scan values must be positive");
        for (const auto& s : states) grid.push_back({Z, s});
      }
      break;
    }
  }
  return grid;
}

MomentsResult sch_heisenberg(const SystemSpec& system, const QuantumState& state) {
  MomentsResult result;
  for (int k = 0; k <= 2; ++k) result.moments[k] = sch_radial_moment(system, state, k);
  result.r_mean = result.moments[1];
  result.r2 = result.moments[2];
  result.sigma2 = result.r2 - result.r_mean * result.r_mean;
  return result;
}

std::vector<ScanRecord> evaluate_state(const SystemSpec& system, const QuantumState& state,
                                       std::span<const Measure> measures, const Tolerances& tol,
                                       std::vector<std::string>& messages) {
  const std::string where = describe(system.Z(), state);
  auto note = [&](const std::string& theory, const std::exception& e) {
    messages.push_back(where + " [" + theory + "]: " + e.what());
  };

  bool kg_valid = true;
  try {
    (void)kg_params(system, state);
  } catch (const SupercriticalCharge& e) {
    kg_valid = false;
    note("klein-gordon", e);
  }

  std::vector<ScanRecord> records;
  for (Measure measure : measures) {
    Pair pair;
    if (!kg_valid) pair.converged = false;
    auto guarded = [&](Theory theory, auto&& compute) -> std::optional<double> {
      if (theory == Theory::klein_gordon && !kg_valid) return std::nullopt;
      try {
        const auto v = finite_or_empty(compute(theory));
        if (!v) {
          pair.converged = false;
          messages.push_back(where + " [" + theory_name(theory) + "]: non-finite " +
                             std::string(measure_name(measure)));
        }
        return v;
      } catch (const FisherUndefined&) {
        return std::nullopt;
      } catch (const Error& e) {
        pair.converged = false;
        note(theory_name(theory), e);
        return std::nullopt;
      }
    };

    auto compute = [&](Theory theory) -> double {
      const bool kg = theory == Theory::klein_gordon;
      switch (measure) {
        case Measure::centroid:
          return kg ? radial_moment(system, state, 1) : sch_radial_moment(system, state, 1);
        case Measure::variance: {
          const MomentsResult mr = kg ? heisenberg(system, state) : sch_heisenberg(system, state);
          return mr.sigma2;
        }
        case Measure::shannon_power:
          return shannon_report(system, state, theory, tol.shannon).entropic_power;
        case Measure::fisher:
          return fisher(system, state, theory, tol.fisher);
      }
      return 0.0;
    };

    pair.kg = guarded(Theory::klein_gordon, compute);
    pair.sch = guarded(Theory::schrodinger, compute);

    ScanRecord rec;
    rec.measure = measure;
    rec.Z = system.Z();
    rec.mass = system.mass();
    rec.n = state.n();
    rec.l = state.l();
    rec.m = state.m();
    rec.value_kg = pair.kg;
    rec.value_sch = pair.sch;
    rec.converged = pair.converged;
    if (pair.kg && pair.sch) {
      const double r = measure == Measure::fisher ? *pair.sch / *pair.kg : *pair.kg / *pair.sch;
      rec.ratio = finite_or_empty(r);
    }
    records.push_back(rec);
  }
  return records;
}

ScanOutput run_scan(const ScanConfig& config) {
  if (config.measures.empty()) throw InvalidArgument("no measures requested");
  const std::vector<GridPoint> grid = scan_grid(config);
  // Validates mass and alpha once, before any work is scheduled.
  (void)make_system(config.Z > 0 ? config.Z : 1.0, config.mass, config.alpha);

  struct Slot {
    std::vector<ScanRecord> records;
    std::vector<std::string> messages;
  };
  std::vector<Slot> slots(grid.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < grid.size(); i = next++) {
      const SystemSpec system = make_system(grid[i].Z, config.mass, config.alpha);
      slots[i].records =
          evaluate_state(system, grid[i].state, config.measures, config.tol, slots[i].messages);
    }
  };

  unsigned threads = config.threads ? config.threads : std::thread::hardware_concurrency();
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(grid.size())));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }

  ScanOutput out;
  for (auto& slot : slots) {
    out.records.insert(out.records.end(), slot.records.begin(), slot.records.end());
    out.messages.insert(out.messages.end(), slot.messages.begin(), slot.messages.end());
  }
  return out;
}

StateReport state_report(const SystemSpec& system, const QuantumState& state,
                         const Tolerances& tol) {
  const KgParams kg = kg_params(system, state);
  MeasureReport kg_measures =
      measure_report(system, state, Theory::klein_gordon, tol.shannon, tol.fisher);
  MeasureReport sch_measures =
      measure_report(system, state, Theory::schrodinger, tol.shannon, tol.fisher);
  StateReport report{system,
                     state,
                     kg,
                     sch_energy(system, state),
                     heisenberg(system, state),
                     sch_heisenberg(system, state),
                     kg_measures,
                     sch_measures,
                     {}};

  auto add = [&](Measure measure, std::optional<double> kg_value, std::optional<double> sch_value,
                 bool converged) {
    ScanRecord rec{measure, system.Z(), system.mass(), state.n(), state.l(), state.m(),
                   kg_value,  sch_value,  std::nullopt, converged};
    if (kg_value && sch_value) {
      rec.ratio = measure == Measure::fisher ? *sch_value / *kg_value : *kg_value / *sch_value;
    }
    report.records.push_back(rec);
  };
  add(Measure::centroid, report.kg_moments.r_mean, report.sch_moments.r_mean, true);
  add(Measure::variance, report.kg_moments.sigma2, report.sch_moments.sigma2, true);
  add(Measure::shannon_power, kg_measures.entropic_power, sch_measures.entropic_power,
      kg_measures.diagnostics.converged && sch_measures.diagnostics.converged);
  add(Measure::fisher, kg_measures.fisher, sch_measures.fisher,
      kg_measures.diagnostics.converged && sch_measures.diagnostics.converged);
  return report;
}

std::pair<double, double> default_profile_window(const SystemSpec& system,
                                                 const QuantumState& state) {
  const double unit = 1.0 / (system.mass() * system.Z());
  const double n = state.n();
  return {1e-4 * unit, (2.0 * n * n + 20.0 * n) * unit};
}

std::vector<ProfileRow> density_profile(const SystemSpec& system, const QuantumState& state,
                                        double r_min, double r_max, int points, bool log_spaced) {
  if (points < 2) throw InvalidArgument("profile needs at least 2 points");
  if (!(r_min > 0.0) || !(r_max > r_min)) {
    throw InvalidArgument("profile window must satisfy 0 < r_min < r_max");
  }
  const RadialDensity kg = kg_density(system, state);
  const RadialDensity sch = sch_density(system, state);
  std::vector<ProfileRow> rows;
  rows.reserve(points);
  for (int i = 0; i < points; ++i) {
    const double f = static_cast<double>(i) / (points - 1);
    double r = log_spaced ? r_min * std::pow(r_max / r_min, f) : r_min + f * (r_max - r_min);
    if (i == points - 1) r = r_max;
    rows.push_back({r, kg.value(r), sch.value(r)});
  }
  return rows;
}

std::string format_number(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

namespace {

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string optional_number(const std::optional<double>& v) {
  return v ? format_number(*v) : std::string();
}

// RFC-4180 record splitting; quoted fields may contain separators and quotes.
std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else if (c != '\r') {
      field += c;
    }
  }
  fields.push_back(std::move(field));
  return fields;
}

std::optional<double> parse_optional(const std::string& s) {
  if (trim(s).empty()) return std::nullopt;
  return parse_double(s, "value");
}

bool parse_bool(const std::string& s) {
  const std::string t = trim(s);
  if (t == "true") return true;
  if (t == "false") return false;
  throw InvalidArgument("cannot parse boolean from '" + t + "'");
}

}  // namespace

void write_csv(std::ostream& out, std::span<const ScanRecord> records) {
  out << kCsvHeader << '\n';
  for (const ScanRecord& r : records) {
    out << csv_field(measure_name(r.measure)) << ',' << format_number(r.Z) << ','
        << format_number(r.mass) << ',' << r.n << ',' << r.l << ',' << r.m << ','
        << optional_number(r.value_kg) << ',' << optional_number(r.value_sch) << ','
        << optional_number(r.ratio) << ',' << (r.converged ? "true" : "false") << '\n';
  }
}

std::vector<ScanRecord> read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || trim(line) != kCsvHeader) {
    throw InvalidArgument("CSV header does not match the scan record schema");
  }
  std::vector<ScanRecord> records;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    const auto f = split_csv_line(line);
    if (f.size() != 10) throw InvalidArgument("CSV row has " + std::to_string(f.size()) + " fields");
    ScanRecord r;
    r.measure = parse_measure(f[0]);
    r.Z = parse_double(f[1], "Z");
    r.mass = parse_double(f[2], "mass");
    r.n = parse_int(f[3], "n");
    r.l = parse_int(f[4], "l");
    r.m = parse_int(f[5], "m");
    r.value_kg = parse_optional(f[6]);
    r.value_sch = parse_optional(f[7]);
    r.ratio = parse_optional(f[8]);
    r.converged = parse_bool(f[9]);
    records.push_back(r);
  }
  return records;
}

void write_jsonl(std::ostream& out, std::span<const ScanRecord> records) {
  auto opt = [](const std::optional<double>& v) {
    return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
  };
  for (const ScanRecord& r : records) {
    nlohmann::ordered_json j;
    j["measure"] = measure_name(r.measure);
    j["Z"] = r.Z;
    j["mass"] = r.mass;
    j["n"] = r.n;
    j["l"] = r.l;
    j["m"] = r.m;
    j["value_kg"] = opt(r.value_kg);
    j["value_sch"] = opt(r.value_sch);
    j["ratio"] = opt(r.ratio);
    j["converged"] = r.converged;
    out << j.dump() << '\n';
  }
}

std::vector<ScanRecord> read_jsonl(std::istream& in) {
  auto opt = [](const nlohmann::json& v) -> std::optional<double> {
    if (v.is_null()) return std::nullopt;
    return v.get<double>();
  };
  std::vector<ScanRecord> records;
  std::string line;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    try {
      const auto j = nlohmann::json::parse(line);
      ScanRecord r;
      r.measure = parse_measure(j.at("measure").get<std::string>());
      r.Z = j.at("Z").get<double>();
      r.mass = j.at("mass").get<double>();
      r.n = j.at("n").get<int>();
      r.l = j.at("l").get<int>();
      r.m = j.at("m").get<int>();
      r.value_kg = opt(j.at("value_kg"));
      r.value_sch = opt(j.at("value_sch"));
      r.ratio = opt(j.at("ratio"));
      r.converged = j.at("converged").get<bool>();
      records.push_back(r);
    } catch (const nlohmann::json::exception& e) {
      throw InvalidArgument(std::string("malformed JSON record: ") + e.what());
    }
  }
  return records;
}

void write_profile_csv(std::ostream& out, std::span<const ProfileRow> rows) {
  out << "r,D_kg,D_sch\n";
  for (const ProfileRow& row : rows) {
    out << format_number(row.r) << ',' << format_number(row.d_kg) << ',' << format_number(row.d_sch)
        << '\n';
  }
}

}  // namespace kgc
