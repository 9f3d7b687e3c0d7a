// Copyright 2026 The bellcat Authors
// SPDX-License-Identifier: Apache-2.0

#include "bellcat/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "bellcat/error.hpp"

namespace bellcat::cli {

namespace {

constexpr const char* kVersion = "bellcat 1.0.0";
constexpr std::array<const char*, 4> kDirNames{"a", "b", "c", "d"};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Provenance parse_provider(const std::string& s) {
  if (s == "lc") return Provenance::lc_only;
  if (s == "full") return Provenance::full;
  if (s == "sampled") return Provenance::sampled;
  throw ParseError("unknown provider '" + s + "' (expected lc, full or sampled)");
}

CorrelationMode parse_mode(const std::string& s) {
  if (s == "raw") return CorrelationMode::raw;
  if (s == "postselected") return CorrelationMode::postselected;
  throw ParseError("unknown mode '" + s + "' (expected raw or postselected)");
}

InequalityKind parse_kind_or_throw(const std::string& s) {
  if (auto k = parse_kind(s)) return *k;
  throw ParseError("unknown inequality kind '" + s + "'");
}

Sign parse_sign(const std::string& s) {
  if (s == "+" || s == "plus") return Sign::plus;
  if (s == "-" || s == "minus") return Sign::minus;
  throw ParseError("unknown sign '" + s + "' (expected + or -)");
}

OutputFormat parse_format(const std::string& s) {
  if (s == "json") return OutputFormat::json;
  if (s == "csv") return OutputFormat::csv;
  throw ParseError("unknown output format '" + s + "'");
}

std::array<double, 2> parse_angle_pair(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) throw ParseError("direction '" + s + "' must be written theta,phi");
  try {
    std::size_t used_t = 0;
    std::size_t used_p = 0;
    const std::string ts = s.substr(0, comma);
    const std::string ps = s.substr(comma + 1);
    const double t = std::stod(ts, &used_t);
    const double p = std::stod(ps, &used_p);
    if (used_t != ts.size() || used_p != ps.size()) throw std::invalid_argument(s);
    return {t, p};
  } catch (const std::logic_error&) {
    throw ParseError("direction '" + s + "' is not a pair of numbers");
  }
}

template <class T>
T json_value(const json& j, const char* key, const char* ctx) {
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ParseError(std::string(ctx) + "." + key + ": " + e.what());
  }
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open output file '" + path + "'");
  f << content;
  if (!f) throw IoError("failed writing output file '" + path + "'");
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

/// Values given on the command line; unset optionals leave the config alone.
struct Flags {
  std::string config_path;
  std::optional<int> two_s;
  std::optional<double> alpha, gamma1, gamma2;
  std::optional<std::string> provider, mode, kind, sign, format;
  std::optional<std::uint64_t> samples, seed;
  std::array<std::optional<std::string>, 4> dirs;
  bool degrees = false, rotation = false, photon = false;
  std::optional<int> resolution, starts, max_iter;
  std::optional<double> tol;
  std::optional<std::string> output;
};

void add_options(CLI::App& sub, Flags& f) {
  sub.add_option("--config", f.config_path, "JSON scenario file; flags override it");
  sub.add_option("--two-s", f.two_s, "Twice the spin quantum number");
  sub.add_option("--alpha", f.alpha, "Cat mixing angle (c1 = cos alpha e^{i gamma1})");
  sub.add_option("--gamma1", f.gamma1, "Phase of c1");
  sub.add_option("--gamma2", f.gamma2, "Phase of c2");
  sub.add_option("--provider", f.provider, "lc | full | sampled");
  sub.add_option("--samples", f.samples, "Draws per correlation for sampled runs");
  sub.add_option("--seed", f.seed, "RNG seed (required for randomized commands)");
  sub.add_option("--mode", f.mode, "raw | postselected");
  sub.add_option("--kind", f.kind, "bell | chsh | wigner | quadratic");
  for (int i = 0; i < 4; ++i) {
    sub.add_option(std::string("--") + kDirNames[i], f.dirs[i], std::string("Direction ") + kDirNames[i] + " as theta,phi");
  }
  sub.add_flag("--degrees", f.degrees, "Interpret angles in degrees");
  sub.add_option("--sign", f.sign, "Coherent-state sign, + or -");
  sub.add_flag("--rotation", f.rotation, "Build the coherent state by rotating |+-s>");
  sub.add_flag("--photon", f.photon, "Report the spin-1 photon-pair estimators");
  sub.add_option("--resolution", f.resolution, "Grid steps per angle");
  sub.add_option("--starts", f.starts, "Random multistart count");
  sub.add_option("--max-iter", f.max_iter, "Simplex iteration limit");
  sub.add_option("--tol", f.tol, "Simplex value-spread tolerance");
  sub.add_option("--output", f.output, "Output path");
  sub.add_option("--format", f.format, "json | csv");
}

ScenarioConfig load_config(const Flags& f) {
  ScenarioConfig cfg;
  if (!f.config_path.empty()) {
    std::ifstream in(f.config_path);
    if (!in) throw ParseError("cannot read config file '" + f.config_path + "'");
    json doc;
    try {
      doc = json::parse(in);
    } catch (const json::parse_error& e) {
      throw ParseError(std::string("config file is not valid JSON: ") + e.what());
    }
    cfg = parse_config(doc, cfg);
  }
  if (f.two_s) {
    if (*f.two_s < 1) throw ParseError("--two-s must be >= 1");
    cfg.state.spin = SpinQuantum(*f.two_s);
  }
  if (f.alpha) cfg.state.coeffs.alpha = *f.alpha;
  if (f.gamma1) cfg.state.coeffs.gamma1 = *f.gamma1;
  if (f.gamma2) cfg.state.coeffs.gamma2 = *f.gamma2;
  if (f.provider) cfg.provider = parse_provider(*f.provider);
  if (f.samples) cfg.samples = *f.samples;
  if (f.seed) cfg.seed = *f.seed;
  if (f.mode) cfg.mode = parse_mode(*f.mode);
  if (f.kind) cfg.kind = parse_kind_or_throw(*f.kind);
  for (int i = 0; i < 4; ++i) {
    if (f.dirs[i]) cfg.angles[i] = parse_angle_pair(*f.dirs[i]);
  }
  if (f.degrees) cfg.degrees = true;
  if (f.sign) cfg.sign = parse_sign(*f.sign);
  if (f.rotation) cfg.rotation = true;
  if (f.photon) cfg.photon = true;
  if (f.resolution) cfg.resolution = *f.resolution;
  if (f.starts) cfg.starts = *f.starts;
  if (f.max_iter) cfg.max_iter = *f.max_iter;
  if (f.tol) cfg.tol = *f.tol;
  if (f.output) cfg.output_path = *f.output;
  if (f.format) cfg.format = parse_format(*f.format);
  if (cfg.samples == 0) throw ParseError("samples must be at least 1");
  return cfg;
}

int given_directions(const ScenarioConfig& cfg) {
  return static_cast<int>(std::count_if(cfg.angles.begin(), cfg.angles.end(), [](const auto& a) { return a.has_value(); }));
}

std::uint64_t require_seed(const ScenarioConfig& cfg, const char* what) {
  if (!cfg.seed) throw ParseError(std::string(what) + " is randomized and needs an explicit --seed");
  return *cfg.seed;
}

CorrelationProvider make_provider(const ScenarioConfig& cfg) {
  switch (cfg.provider) {
    case Provenance::lc_only:
      return lc_provider(cfg.state, cfg.mode);
    case Provenance::full:
      return full_provider(cfg.state, cfg.mode);
    case Provenance::sampled:
      return sampled_provider(cfg.state, cfg.samples, require_seed(cfg, "the sampled provider"), cfg.mode);
  }
  return full_provider(cfg.state, cfg.mode);
}

InequalityKind require_kind(const ScenarioConfig& cfg) {
  if (!cfg.kind) throw ParseError("--kind is required");
  return *cfg.kind;
}

void emit(const ScenarioConfig& cfg, const std::string& content, std::ostream& out) {
  out << content;
  if (!cfg.output_path.empty()) write_file(cfg.output_path, content);
}

int cmd_correlate(const ScenarioConfig& cfg, std::ostream& out) {
  const auto dirs = cfg.directions();
  if (given_directions(cfg) != 2 || dirs.size() != 2) {
    throw ParseError("correlate needs exactly one (a, b) pair");
  }
  emit(cfg, dump(to_json(correlation(cfg.state, dirs[0], dirs[1], cfg.mode))), out);
  return kExitOk;
}

int cmd_check(const ScenarioConfig& cfg, std::ostream& out) {
  const InequalityKind kind = require_kind(cfg);
  const auto dirs = cfg.directions();
  if (static_cast<int>(dirs.size()) != directions_for(kind) || given_directions(cfg) != directions_for(kind)) {
    throw ParseError(std::string(to_string(kind)) + " needs directions a.." + kDirNames[directions_for(kind) - 1]);
  }
  const InequalityReport report = evaluate(kind, make_provider(cfg), dirs);
  if (cfg.format == OutputFormat::csv) {
    emit(cfg, report_csv_header(kind) + "\n" + report_csv_row(report) + "\n", out);
  } else {
    emit(cfg, dump(to_json(report)), out);
  }
  return report.violated ? kExitViolated : kExitOk;
}

int cmd_sweep(const ScenarioConfig& cfg, std::ostream& out) {
  const InequalityKind kind = require_kind(cfg);
  if (cfg.resolution < 2) throw ParseError("sweep needs --resolution >= 2");
  const CorrelationProvider provider = make_provider(cfg);
  if (cfg.output_path.empty()) {
    out << grid_csv_header(kind) << "\n";
    const OptimizationResult r = grid_sweep(provider, kind, cfg.resolution, [&](std::span<const double> x, double v) {
      out << grid_csv_row(kind, x, v) << "\n";
    });
    (void)r;
    return kExitOk;
  }
  if (cfg.format == OutputFormat::json) {
    const OptimizationResult r = grid_sweep(provider, kind, cfg.resolution);
    const std::string doc = dump(to_json(r, kind));
    write_file(cfg.output_path, doc);
    out << doc;
    return kExitOk;
  }
  std::ofstream f(cfg.output_path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open output file '" + cfg.output_path + "'");
  f << grid_csv_header(kind) << "\n";
  const OptimizationResult r = grid_sweep(provider, kind, cfg.resolution, [&](std::span<const double> x, double v) {
    f << grid_csv_row(kind, x, v) << "\n";
  });
  f.close();
  if (!f) throw IoError("failed writing output file '" + cfg.output_path + "'");
  out << dump(to_json(r, kind));
  return kExitOk;
}

int cmd_optimize(const ScenarioConfig& cfg, std::ostream& out) {
  const InequalityKind kind = require_kind(cfg);
  OptimizeSettings settings;
  settings.resolution = cfg.resolution;
  settings.starts = cfg.starts;
  settings.refine.max_iter = cfg.max_iter;
  settings.refine.tol = cfg.tol;
  if (settings.starts > 0) settings.seed = require_seed(cfg, "optimize with random starts");
  emit(cfg, dump(to_json(optimize(make_provider(cfg), kind, settings), kind)), out);
  return kExitOk;
}

int cmd_sample(const ScenarioConfig& cfg, std::ostream& out) {
  const auto dirs = cfg.directions();
  if (given_directions(cfg) != 2 || dirs.size() != 2) throw ParseError("sample needs exactly one (a, b) pair");
  const std::uint64_t seed = require_seed(cfg, "sample");
  if (cfg.photon) {
    emit(cfg, dump(to_json(photon_emulation(cfg.state, dirs[0], dirs[1], cfg.samples, seed))), out);
    return kExitOk;
  }
  const SampleStats stats = sample_outcomes(cfg.state, dirs[0], dirs[1], cfg.samples, seed,
                                            cfg.mode == CorrelationMode::postselected);
  if (cfg.format == OutputFormat::csv) {
    emit(cfg, sample_csv_header() + "\n" + sample_csv_row(dirs[0], dirs[1], stats) + "\n", out);
  } else {
    emit(cfg, dump(to_json(stats)), out);
  }
  return kExitOk;
}

int cmd_coherent(const ScenarioConfig& cfg, std::ostream& out) {
  const auto dirs = cfg.directions();
  if (dirs.size() != 1 || given_directions(cfg) != 1) throw ParseError("coherent needs exactly one direction --a");
  const DickeKet k = cfg.rotation ? coherent_state_by_rotation(cfg.state.spin, dirs[0], cfg.sign)
                                  : coherent_state(cfg.state.spin, dirs[0], cfg.sign);
  emit(cfg, dump(to_json(k)), out);
  return kExitOk;
}

}  // namespace

std::vector<Direction> ScenarioConfig::directions() const {
  const double scale = degrees ? kPi / 180.0 : 1.0;
  std::vector<Direction> out;
  for (const auto& a : angles) {
    if (!a) break;
    out.emplace_back((*a)[0] * scale, (*a)[1] * scale);
  }
  return out;
}

ScenarioConfig parse_config(const json& doc, ScenarioConfig cfg) {
  require_keys(doc, {"state", "provider", "samples", "seed", "mode", "kind", "angles", "degrees", "sign", "rotation",
                     "photon", "sweep", "optimize", "output"},
               "config");
  if (doc.contains("state")) cfg.state = cat_state_from_json(doc.at("state"));
  if (doc.contains("provider")) cfg.provider = parse_provider(json_value<std::string>(doc, "provider", "config"));
  if (doc.contains("samples")) cfg.samples = json_value<std::uint64_t>(doc, "samples", "config");
  if (doc.contains("seed")) cfg.seed = json_value<std::uint64_t>(doc, "seed", "config");
  if (doc.contains("mode")) cfg.mode = parse_mode(json_value<std::string>(doc, "mode", "config"));
  if (doc.contains("kind")) cfg.kind = parse_kind_or_throw(json_value<std::string>(doc, "kind", "config"));
  if (doc.contains("angles")) {
    const json& a = doc.at("angles");
    require_keys(a, {"a", "b", "c", "d"}, "config.angles");
    for (int i = 0; i < 4; ++i) {
      if (a.contains(kDirNames[i])) cfg.angles[i] = json_value<std::array<double, 2>>(a, kDirNames[i], "config.angles");
    }
  }
  if (doc.contains("degrees")) cfg.degrees = json_value<bool>(doc, "degrees", "config");
  if (doc.contains("sign")) cfg.sign = parse_sign(json_value<std::string>(doc, "sign", "config"));
  if (doc.contains("rotation")) cfg.rotation = json_value<bool>(doc, "rotation", "config");
  if (doc.contains("photon")) cfg.photon = json_value<bool>(doc, "photon", "config");
  if (doc.contains("sweep")) {
    const json& s = doc.at("sweep");
    require_keys(s, {"resolution"}, "config.sweep");
    if (s.contains("resolution")) cfg.resolution = json_value<int>(s, "resolution", "config.sweep");
  }
  if (doc.contains("optimize")) {
    const json& o = doc.at("optimize");
    require_keys(o, {"resolution", "starts", "max_iter", "tol"}, "config.optimize");
    if (o.contains("resolution")) cfg.resolution = json_value<int>(o, "resolution", "config.optimize");
    if (o.contains("starts")) cfg.starts = json_value<int>(o, "starts", "config.optimize");
    if (o.contains("max_iter")) cfg.max_iter = json_value<int>(o, "max_iter", "config.optimize");
    if (o.contains("tol")) cfg.tol = json_value<double>(o, "tol", "config.optimize");
  }
  if (doc.contains("output")) {
    const json& o = doc.at("output");
    require_keys(o, {"path", "format"}, "config.output");
    if (o.contains("path")) cfg.output_path = json_value<std::string>(o, "path", "config.output");
    if (o.contains("format")) cfg.format = parse_format(json_value<std::string>(o, "format", "config.output"));
  }
  return cfg;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bell-inequality laboratory for spin-s cat states", "bellcat"};
  app.require_subcommand(1);
  Flags flags;
  struct Command {
    const char* name;
    const char* help;
    int (*fn)(const ScenarioConfig&, std::ostream&);
  };
  const std::array<Command, 6> commands{{
      {"correlate", "Correlation breakdown for one (a, b) pair", cmd_correlate},
      {"check", "Evaluate one inequality; exit 10 if violated", cmd_check},
      {"sweep", "Exhaustive angle grid, one CSV row per point", cmd_sweep},
      {"optimize", "Grid + simplex search for the extremal value", cmd_optimize},
      {"sample", "Finite-sample measurement record", cmd_sample},
      {"coherent", "Print a spin coherent state in the Dicke basis", cmd_coherent},
  }};
  std::vector<CLI::App*> subs;
  for (const Command& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    add_options(*sub, flags);
    subs.push_back(sub);
  }
  CLI::App* version = app.add_subcommand("version", "Print the version");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  }

  if (version->parsed()) {
    out << kVersion << "\n";
    return kExitOk;
  }
  try {
    for (std::size_t i = 0; i < commands.size(); ++i) {
      if (subs[i]->parsed()) return commands[i].fn(load_config(flags), out);
    }
    err << "error: no subcommand\n";
    return kExitParse;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }
}

}  // namespace bellcat::cli
