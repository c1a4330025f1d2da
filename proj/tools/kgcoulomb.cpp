// kgcoulomb: Klein-Gordon vs Schroedinger charge-spreading measures for
// hydrogen-like (default: pionic) atoms.
//
//   kgcoulomb state   --Z 68 --n 4 --l 1 --m 0
//   kgcoulomb scan    --axis n --family circular --range 1:10 --measures centroid,variance
//   kgcoulomb profile --Z 68 --n 1 --l 0 --points 500
//
// Exit codes: 0 success, 2 invalid arguments, 3 supercritical charge,
// 4 integration failure.

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "kgcoulomb/errors.hpp"
#include "kgcoulomb/scan.hpp"

namespace {

constexpr int kExitInvalid = 2;
constexpr int kExitSupercritical = 3;
constexpr int kExitIntegration = 4;

struct Options {
  double Z = 68.0;
  double mass = kgc::kPionMass;
  double alpha = kgc::kDefaultFineStructure;
  int n = 1, l = 0, m = 0;
  std::string axis = "n";
  std::string range = "1:10:1";
  std::string family = "fixed";
  std::string states;
  std::string measures = "centroid,variance,shannon_power,fisher";
  std::optional<double> tol;
  std::string format;
  std::string out;
  unsigned threads = 0;
  int points = 500;
  std::optional<double> r_min, r_max;
  std::string spacing = "log";
};

kgc::Tolerances tolerances(const Options& o) {
  kgc::Tolerances t;
  if (o.tol) {
    if (!(*o.tol > 0.0)) throw kgc::InvalidArgument("--tol must be positive");
    t.shannon = t.fisher = *o.tol;
  }
  return t;
}

std::string num(double v) { return kgc::format_number(v); }
std::string num(const std::optional<double>& v) { return v ? num(*v) : "undefined"; }

void write_state_text(std::ostream& os, const kgc::StateReport& r) {
  const auto& s = r.system;
  const auto& q = r.state;
  os << "system  Z=" << num(s.Z()) << " mass=" << num(s.mass()) << " alpha=" << num(s.alpha())
     << " c=" << num(s.c()) << '\n';
  os << "state   n=" << q.n() << " l=" << q.l() << " m=" << q.m() << " (" << q.n()
     << kgc::orbital_letter(q.l()) << ")\n\n";
  os << "klein-gordon parameters\n";
  const std::pair<const char*, double> params[] = {
      {"gamma", r.kg.gamma},       {"l_prime", r.kg.l_prime},
      {"epsilon", r.kg.epsilon},   {"binding_energy", r.kg.binding_energy},
      {"beta", r.kg.beta},         {"lambda", r.kg.lambda},
      {"norm_sq", r.kg.norm_sq}};
  for (const auto& [name, value] : params) {
    os << "  " << std::left << std::setw(16) << name << num(value) << '\n';
  }
  os << "schrodinger energy  " << num(r.sch_energy) << "\n\n";

  auto row = [&os](const char* name, const std::string& kg, const std::string& sch,
                   const std::string& ratio) {
    os << "  " << std::left << std::setw(16) << name << std::setw(26) << kg << std::setw(26) << sch
       << ratio << '\n';
  };
  os << "  " << std::left << std::setw(16) << "quantity" << std::setw(26) << "klein-gordon"
     << std::setw(26) << "schrodinger" << "ratio\n";
  row("<r>", num(r.kg_moments.r_mean), num(r.sch_moments.r_mean),
      num(r.kg_moments.r_mean / r.sch_moments.r_mean));
  row("<r^2>", num(r.kg_moments.r2), num(r.sch_moments.r2), num(r.kg_moments.r2 / r.sch_moments.r2));
  row("sigma^2", num(r.kg_moments.sigma2), num(r.sch_moments.sigma2),
      num(r.kg_moments.sigma2 / r.sch_moments.sigma2));
  row("S_radial", num(r.kg_measures.shannon_radial), num(r.sch_measures.shannon_radial), "");
  row("S_angular", num(r.kg_measures.shannon_angular), num(r.sch_measures.shannon_angular), "");
  row("S_total", num(r.kg_measures.shannon_total), num(r.sch_measures.shannon_total), "");
  row("N (power)", num(r.kg_measures.entropic_power), num(r.sch_measures.entropic_power),
      num(r.kg_measures.entropic_power / r.sch_measures.entropic_power));
  const auto& fr = r.records.back();
  row("I (Fisher)", num(r.kg_measures.fisher), num(r.sch_measures.fisher),
      fr.ratio ? num(*fr.ratio) + " (sch/kg)" : "undefined");
}

void write_state_json(std::ostream& os, const kgc::StateReport& r) {
  auto opt = [](const std::optional<double>& v) {
    return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
  };
  auto measures = [&](const kgc::MeasureReport& m) {
    nlohmann::ordered_json j;
    j["shannon_radial"] = m.shannon_radial;
    j["shannon_angular"] = m.shannon_angular;
    j["shannon_total"] = m.shannon_total;
    j["entropic_power"] = m.entropic_power;
    j["fisher"] = opt(m.fisher);
    j["converged"] = m.diagnostics.converged;
    j["max_estimated_error"] = m.diagnostics.max_estimated_error;
    return j;
  };
  auto moments = [](const kgc::MomentsResult& m) {
    nlohmann::ordered_json j;
    j["r_mean"] = m.r_mean;
    j["r2"] = m.r2;
    j["sigma2"] = m.sigma2;
    return j;
  };
  nlohmann::ordered_json j;
  j["Z"] = r.system.Z();
  j["mass"] = r.system.mass();
  j["alpha"] = r.system.alpha();
  j["n"] = r.state.n();
  j["l"] = r.state.l();
  j["m"] = r.state.m();
  j["kg_params"] = {{"gamma", r.kg.gamma},     {"l_prime", r.kg.l_prime},
                    {"epsilon", r.kg.epsilon}, {"binding_energy", r.kg.binding_energy},
                    {"beta", r.kg.beta},       {"lambda", r.kg.lambda},
                    {"norm_sq", r.kg.norm_sq}};
  j["sch_energy"] = r.sch_energy;
  j["moments"] = {{"klein_gordon", moments(r.kg_moments)}, {"schrodinger", moments(r.sch_moments)}};
  j["measures"] = {{"klein_gordon", measures(r.kg_measures)},
                   {"schrodinger", measures(r.sch_measures)}};
  nlohmann::ordered_json ratios;
  for (const auto& rec : r.records) ratios[std::string(kgc::measure_name(rec.measure))] = opt(rec.ratio);
  j["ratios"] = ratios;
  os << j.dump(2) << '\n';
}

template <typename Writer>
void emit(const Options& o, Writer&& write) {
  if (o.out.empty()) {
    write(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream file(o.out, std::ios::binary);
  if (!file) throw kgc::InvalidArgument("cannot open output file '" + o.out + "'");
  write(file);
}

int run_state(const Options& o) {
  const auto system = kgc::make_system(o.Z, o.mass, o.alpha);
  const auto state = kgc::make_state(o.n, o.l, o.m);
  const auto report = kgc::state_report(system, state, tolerances(o));
  const std::string format = o.format.empty() ? "text" : o.format;
  emit(o, [&](std::ostream& os) {
    if (format == "text") {
      write_state_text(os, report);
    } else if (format == "json") {
      write_state_json(os, report);
    } else if (format == "csv") {
      kgc::write_csv(os, report.records);
    } else {
      throw kgc::InvalidArgument("unknown format '" + format + "' (expected text, json or csv)");
    }
  });
  return 0;
}

int run_scan(const Options& o) {
  kgc::ScanConfig config;
  config.axis = kgc::parse_axis(o.axis);
  config.family = kgc::parse_family(o.family);
  config.range = kgc::parse_range(o.range);
  config.Z = o.Z;
  config.mass = o.mass;
  config.alpha = o.alpha;
  config.n = o.n;
  config.l = o.l;
  config.m = o.m;
  if (!o.states.empty()) config.states = kgc::parse_state_list(o.states);
  config.measures = kgc::parse_measure_list(o.measures);
  config.tol = tolerances(o);
  config.threads = o.threads;
  const std::string format = o.format.empty() ? "csv" : o.format;
  if (format != "csv" && format != "json") {
    throw kgc::InvalidArgument("unknown format '" + format + "' (expected csv or json)");
  }

  const kgc::ScanOutput result = kgc::run_scan(config);
  for (const auto& message : result.messages) std::cerr << "kgcoulomb: " << message << '\n';
  emit(o, [&](std::ostream& os) {
    if (format == "csv") {
      kgc::write_csv(os, result.records);
    } else {
      kgc::write_jsonl(os, result.records);
    }
  });
  return 0;
}

int run_profile(const Options& o) {
  const auto system = kgc::make_system(o.Z, o.mass, o.alpha);
  const auto state = kgc::make_state(o.n, o.l, o.m);
  auto [lo, hi] = kgc::default_profile_window(system, state);
  if (o.r_min) lo = *o.r_min;
  if (o.r_max) hi = *o.r_max;
  if (o.spacing != "log" && o.spacing != "linear") {
    throw kgc::InvalidArgument("--spacing must be log or linear");
  }
  const std::string format = o.format.empty() ? "csv" : o.format;
  const auto rows = kgc::density_profile(system, state, lo, hi, o.points, o.spacing == "log");
  emit(o, [&](std::ostream& os) {
    if (format == "csv") {
      kgc::write_profile_csv(os, rows);
    } else if (format == "json") {
      for (const auto& row : rows) {
        nlohmann::ordered_json j;
        j["r"] = row.r;
        j["D_kg"] = row.d_kg;
        j["D_sch"] = row.d_sch;
        os << j.dump() << '\n';
      }
    } else {
      throw kgc::InvalidArgument("unknown format '" + format + "' (expected csv or json)");
    }
  });
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Klein-Gordon and Schroedinger charge spreading of hydrogen-like bound states"};
  app.set_config("--config", "", "key=value configuration file (flags take precedence)");
  app.require_subcommand(1);

  Options o;
  app.add_option("--Z", o.Z, "Nuclear charge")->capture_default_str();
  app.add_option("--mass", o.mass, "Particle mass in electron masses")->capture_default_str();
  app.add_option("--alpha", o.alpha, "Fine-structure constant")->capture_default_str();
  app.add_option("--n", o.n, "Principal quantum number")->capture_default_str();
  app.add_option("--l", o.l, "Orbital quantum number")->capture_default_str();
  app.add_option("--m", o.m, "Magnetic quantum number")->capture_default_str();
  app.add_option("--axis", o.axis, "Scan axis: n, l, Z or m")->capture_default_str();
  app.add_option("--range", o.range, "Scan range first:last[:step]")->capture_default_str();
  app.add_option("--family", o.family, "State family for n scans: circular, sstate, fixed")
      ->capture_default_str();
  app.add_option("--states", o.states, "State labels for Z scans, e.g. 1S,2S,2P");
  app.add_option("--measures", o.measures, "Comma list: centroid,variance,shannon_power,fisher")
      ->capture_default_str();
  app.add_option("--tol", o.tol, "Relative quadrature tolerance for Shannon and Fisher");
  app.add_option("--format", o.format, "Output format: csv or json (state also: text)");
  app.add_option("--out", o.out, "Output file (default: stdout)");
  app.add_option("--threads", o.threads, "Worker threads for scans (0: all cores)");
  app.add_option("--points", o.points, "Profile grid size")->capture_default_str();
  app.add_option("--rmin", o.r_min, "Profile lower radius (a.u.)");
  app.add_option("--rmax", o.r_max, "Profile upper radius (a.u.)");
  app.add_option("--spacing", o.spacing, "Profile spacing: log or linear")->capture_default_str();

  auto* state_cmd = app.add_subcommand("state", "Full report for one state in both theories");
  auto* scan_cmd = app.add_subcommand("scan", "Ratio scans over n, l, Z or m");
  auto* profile_cmd = app.add_subcommand("profile", "Radial charge densities for plotting");
  for (auto* sub : {state_cmd, scan_cmd, profile_cmd}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInvalid;
  }

  try {
    if (state_cmd->parsed()) return run_state(o);
    if (scan_cmd->parsed()) return run_scan(o);
    return run_profile(o);
  } catch (const kgc::Error& e) {
    std::cerr << "kgcoulomb: " << e.what() << '\n';
    switch (e.kind()) {
      case kgc::ErrorKind::supercritical_charge: return kExitSupercritical;
      case kgc::ErrorKind::integrand_failure:
      case kgc::ErrorKind::integration_failure: return kExitIntegration;
      default: return kExitInvalid;
    }
  }
}
