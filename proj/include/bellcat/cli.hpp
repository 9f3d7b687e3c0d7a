// Copyright 2026 The bellcat Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file cli.hpp
 * @brief Scenario configuration and the `bellcat` command-line front end.
 *
 * Exit codes: 0 ok (no violation), 10 inequality violated, 2 parse/config
 * error, 3 numeric-domain error, 4 output I/O error.
 */

#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "bellcat/io.hpp"

namespace bellcat::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 2;
inline constexpr int kExitDomain = 3;
inline constexpr int kExitIo = 4;
inline constexpr int kExitViolated = 10;

enum class OutputFormat { json, csv };

/// Everything a subcommand needs. Defaults: singlet 2s = 1, full provider, raw
/// mode, JSON output, radians.
struct ScenarioConfig {
  CatState state = singlet(SpinQuantum(1));
  Provenance provider = Provenance::full;
  std::uint64_t samples = 100000;
  std::optional<std::uint64_t> seed;
  CorrelationMode mode = CorrelationMode::raw;
  std::optional<InequalityKind> kind;
  /// Directions a, b, c, d as given (radians or degrees, see `degrees`).
  std::array<std::optional<std::array<double, 2>>, 4> angles;
  bool degrees = false;
  Sign sign = Sign::plus;
  bool rotation = false;
  bool photon = false;
  int resolution = 0;
  int starts = 20;
  int max_iter = 2000;
  double tol = 1e-12;
  std::string output_path;
  OutputFormat format = OutputFormat::json;

  /// The given directions in radians, in a, b, c, d order, stopping at the first gap.
  [[nodiscard]] std::vector<Direction> directions() const;
};

/// Parse a scenario document. Unknown keys anywhere are rejected with ParseError.
///
/// {
///   "state":    {"two_s": 1, "alpha": -0.785, "gamma1": 0, "gamma2": 0},
///   "provider": "lc" | "full" | "sampled", "samples": 100000, "seed": 7,
///   "mode":     "raw" | "postselected",
///   "kind":     "bell" | "chsh" | "wigner" | "quadratic",
///   "angles":   {"a": [theta, phi], "b": [...], "c": [...], "d": [...]},
///   "degrees":  false, "sign": "+" | "-", "rotation": false, "photon": false,
///   "sweep":    {"resolution": 5},
///   "optimize": {"resolution": 0, "starts": 20, "max_iter": 2000, "tol": 1e-12},
///   "output":   {"path": "out.csv", "format": "csv" | "json"}
/// }
[[nodiscard]] ScenarioConfig parse_config(const json& doc, ScenarioConfig base = {});

/// Entry point shared by the executable and the tests. args excludes argv[0].
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bellcat::cli
