// Copyright 2026 The bellcat Authors
// SPDX-License-Identifier: Apache-2.0

#include "bellcat/io.hpp"

#include <algorithm>
#include <array>
#include <charconv>

namespace bellcat {

namespace {

constexpr std::array<const char*, kCategoryCount> kCategoryNames{"++", "+-", "-+", "--", "inconclusive"};
constexpr std::array<const char*, 4> kDirectionNames{"a", "b", "c", "d"};

template <class T>
T get_required(const json& j, const char* key, std::string_view context) {
  if (!j.contains(key)) throw ParseError(std::string(context) + ": missing key '" + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ParseError(std::string(context) + ": bad value for '" + key + "': " + e.what());
  }
}

template <class T>
T get_or(const json& j, const char* key, T fallback, std::string_view context) {
  return j.contains(key) ? get_required<T>(j, key, context) : fallback;
}

json config_json(const std::vector<Direction>& cfg) {
  json arr = json::array();
  for (const Direction& d : cfg) arr.push_back(to_json(d));
  return arr;
}

std::vector<Direction> config_from_json(const json& j, std::string_view context) {
  if (!j.is_array()) throw ParseError(std::string(context) + ": expected an array of directions");
  std::vector<Direction> out;
  for (const json& e : j) out.push_back(direction_from_json(e));
  return out;
}

CorrelationMode mode_from_string(const std::string& s) {
  if (s == "raw") return CorrelationMode::raw;
  if (s == "postselected") return CorrelationMode::postselected;
  throw ParseError("unknown correlation mode '" + s + "'");
}

}  // namespace

void require_keys(const json& j, std::initializer_list<std::string_view> allowed, std::string_view context) {
  if (!j.is_object()) throw ParseError(std::string(context) + ": expected a JSON object");
  for (const auto& item : j.items()) {
    if (std::find(allowed.begin(), allowed.end(), item.key()) == allowed.end()) {
      throw ParseError(std::string(context) + ": unknown key '" + item.key() + "'");
    }
  }
}

json to_json(const Direction& d) { return {{"theta", d.theta()}, {"phi", d.phi()}}; }

json to_json(const CatState& st) {
  return {{"two_s", st.spin.two_s()},
          {"alpha", st.coeffs.alpha},
          {"gamma1", st.coeffs.gamma1},
          {"gamma2", st.coeffs.gamma2}};
}

json to_json(const DickeKet& k) {
  json two_m = json::array();
  json amps = json::array();
  for (Eigen::Index i = 0; i < k.amps.size(); ++i) {
    two_m.push_back(k.spin.two_s() - 2 * static_cast<int>(i));
    amps.push_back({k.amps(i).real(), k.amps(i).imag()});
  }
  return {{"two_s", k.spin.two_s()}, {"two_m", two_m}, {"amplitudes", amps}};
}

json to_json(const CorrelationBreakdown& c) {
  return {{"p_total", c.p_total},
          {"p_lc", c.p_lc},
          {"p_nlc", c.p_nlc},
          {"postselect_weight", c.postselect_weight},
          {"mode", std::string(to_string(c.mode))},
          {"rho_lc", c.elements.lc},
          {"rho_nlc", c.elements.nlc}};
}

json to_json(const InequalityReport& r) {
  return {{"kind", std::string(to_string(r.kind))},
          {"lhs", r.lhs},
          {"rhs", r.rhs},
          {"margin", r.margin},
          {"violated", r.violated},
          {"config", config_json(r.config)}};
}

json to_json(const OptimizationResult& r, InequalityKind kind) {
  json j{{"kind", std::string(to_string(kind))},
         {"best_config", config_json(r.best_config)},
         {"best_value", r.best_value},
         {"evaluations", r.evaluations},
         {"converged", r.converged}};
  if (!r.trace.empty()) j["trace"] = r.trace;
  return j;
}

json to_json(const SampleStats& s) {
  json counts = json::object();
  for (int i = 0; i < kCategoryCount; ++i) counts[kCategoryNames[i]] = s.counts[i];
  return {{"n_total", s.n_total},   {"counts", counts}, {"estimate", s.estimate},
          {"stderr", s.std_error}, {"seed", s.seed},   {"postselect", s.postselect}};
}

json to_json(const PhotonEmulation& p) {
  return {{"p_joint", p.p_joint}, {"p_ab", p.p_ab}, {"marginals", p.marginals}, {"stats", to_json(p.stats)}};
}

Direction direction_from_json(const json& j) {
  if (j.is_array()) {
    if (j.size() != 2) throw ParseError("direction: expected [theta, phi]");
    try {
      return {j[0].get<double>(), j[1].get<double>()};
    } catch (const json::exception& e) {
      throw ParseError(std::string("direction: ") + e.what());
    }
  }
  require_keys(j, {"theta", "phi"}, "direction");
  return {get_required<double>(j, "theta", "direction"), get_required<double>(j, "phi", "direction")};
}

CatState cat_state_from_json(const json& j) {
  require_keys(j, {"two_s", "alpha", "gamma1", "gamma2"}, "state");
  const int two_s = get_required<int>(j, "two_s", "state");
  if (two_s < 1) throw ParseError("state: two_s must be >= 1");
  const CatState base = singlet(SpinQuantum(two_s));
  return {base.spin,
          {get_or(j, "alpha", base.coeffs.alpha, "state"), get_or(j, "gamma1", base.coeffs.gamma1, "state"),
           get_or(j, "gamma2", base.coeffs.gamma2, "state")}};
}

DickeKet dicke_ket_from_json(const json& j) {
  require_keys(j, {"two_s", "two_m", "amplitudes"}, "ket");
  const int two_s = get_required<int>(j, "two_s", "ket");
  if (two_s < 1) throw ParseError("ket: two_s must be >= 1");
  const auto amps = get_required<std::vector<std::array<double, 2>>>(j, "amplitudes", "ket");
  if (static_cast<int>(amps.size()) != two_s + 1) throw ParseError("ket: amplitude count must be 2s + 1");
  KetVector v(two_s + 1);
  for (int i = 0; i <= two_s; ++i) v(i) = cplx(amps[i][0], amps[i][1]);
  return {SpinQuantum(two_s), v};
}

CorrelationBreakdown correlation_from_json(const json& j) {
  constexpr std::string_view ctx = "correlation";
  require_keys(j, {"p_total", "p_lc", "p_nlc", "postselect_weight", "mode", "rho_lc", "rho_nlc"}, ctx);
  CorrelationBreakdown c;
  c.p_total = get_required<double>(j, "p_total", ctx);
  c.p_lc = get_required<double>(j, "p_lc", ctx);
  c.p_nlc = get_required<double>(j, "p_nlc", ctx);
  c.postselect_weight = get_required<double>(j, "postselect_weight", ctx);
  c.mode = mode_from_string(get_required<std::string>(j, "mode", ctx));
  c.elements.lc = get_or(j, "rho_lc", c.elements.lc, ctx);
  c.elements.nlc = get_or(j, "rho_nlc", c.elements.nlc, ctx);
  return c;
}

InequalityReport report_from_json(const json& j) {
  constexpr std::string_view ctx = "report";
  require_keys(j, {"kind", "lhs", "rhs", "margin", "violated", "config"}, ctx);
  const auto kind = parse_kind(get_required<std::string>(j, "kind", ctx));
  if (!kind) throw ParseError("report: unknown kind");
  InequalityReport r;
  r.kind = *kind;
  r.lhs = get_required<double>(j, "lhs", ctx);
  r.rhs = get_required<double>(j, "rhs", ctx);
  r.margin = get_required<double>(j, "margin", ctx);
  r.violated = get_required<bool>(j, "violated", ctx);
  r.config = config_from_json(j.at("config"), ctx);
  return r;
}

OptimizationResult optimization_from_json(const json& j) {
  constexpr std::string_view ctx = "optimization";
  require_keys(j, {"kind", "best_config", "best_value", "evaluations", "converged", "trace"}, ctx);
  OptimizationResult r;
  if (!j.contains("best_config")) throw ParseError("optimization: missing key 'best_config'");
  r.best_config = config_from_json(j.at("best_config"), ctx);
  r.best_value = get_required<double>(j, "best_value", ctx);
  r.evaluations = get_required<std::uint64_t>(j, "evaluations", ctx);
  r.converged = get_required<bool>(j, "converged", ctx);
  r.trace = get_or(j, "trace", r.trace, ctx);
  return r;
}

SampleStats sample_stats_from_json(const json& j) {
  constexpr std::string_view ctx = "sample";
  require_keys(j, {"n_total", "counts", "estimate", "stderr", "seed", "postselect"}, ctx);
  SampleStats s;
  s.n_total = get_required<std::uint64_t>(j, "n_total", ctx);
  const json& counts = j.at("counts");
  require_keys(counts, {"++", "+-", "-+", "--", "inconclusive"}, "sample.counts");
  for (int i = 0; i < kCategoryCount; ++i) s.counts[i] = get_required<std::uint64_t>(counts, kCategoryNames[i], ctx);
  s.estimate = get_required<double>(j, "estimate", ctx);
  s.std_error = get_required<double>(j, "stderr", ctx);
  s.seed = get_required<std::uint64_t>(j, "seed", ctx);
  s.postselect = get_or(j, "postselect", false, ctx);
  return s;
}

std::string format_number(double x) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return {buf.data(), res.ptr};
}

namespace {

std::string angle_columns(int ndir) {
  std::string out;
  for (int i = 0; i < ndir; ++i) {
    out += std::string(",theta_") + kDirectionNames[i] + ",phi_" + kDirectionNames[i];
  }
  return out;
}

}  // namespace

std::string report_csv_header(InequalityKind kind) {
  return "kind" + angle_columns(directions_for(kind)) + ",lhs,rhs,margin,violated";
}

std::string report_csv_row(const InequalityReport& r) {
  std::string out(to_string(r.kind));
  for (const Direction& d : r.config) out += "," + format_number(d.theta()) + "," + format_number(d.phi());
  out += "," + format_number(r.lhs) + "," + format_number(r.rhs) + "," + format_number(r.margin) + "," +
         (r.violated ? "1" : "0");
  return out;
}

std::string grid_csv_header(InequalityKind kind) { return "kind" + angle_columns(directions_for(kind)) + ",value"; }

std::string grid_csv_row(InequalityKind kind, std::span<const double> angles, double value) {
  std::string out(to_string(kind));
  for (double x : angles) out += "," + format_number(x);
  out += "," + format_number(value);
  return out;
}

std::string sample_csv_header() {
  return "theta_a,phi_a,theta_b,phi_b,n,n_pp,n_pm,n_mp,n_mm,n_inconclusive,estimate,stderr,seed";
}

std::string sample_csv_row(const Direction& a, const Direction& b, const SampleStats& s) {
  std::string out = format_number(a.theta()) + "," + format_number(a.phi()) + "," + format_number(b.theta()) + "," +
                    format_number(b.phi()) + "," + std::to_string(s.n_total);
  for (auto c : s.counts) out += "," + std::to_string(c);
  out += "," + format_number(s.estimate) + "," + format_number(s.std_error) + "," + std::to_string(s.seed);
  return out;
}

}  // namespace bellcat
