// Copyright 2026 The bellcat Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file io.hpp
 * @brief JSON and CSV forms of the library's value types.
 *
 * Readers throw ParseError on malformed input or unknown keys. CSV numbers are
 * written with std::to_chars (shortest round-trip form, '.' decimal separator).
 */

#pragma once

#include <span>
#include <stdexcept>
#include <string>

#include "json.hpp"

#include "bellcat/montecarlo.hpp"
#include "bellcat/optimize.hpp"

namespace bellcat {

using json = nlohmann::json;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json to_json(const Direction& d);
json to_json(const CatState& st);
json to_json(const DickeKet& k);
json to_json(const CorrelationBreakdown& c);
json to_json(const InequalityReport& r);
json to_json(const OptimizationResult& r, InequalityKind kind);
json to_json(const SampleStats& s);
json to_json(const PhotonEmulation& p);

Direction direction_from_json(const json& j);
CatState cat_state_from_json(const json& j);
DickeKet dicke_ket_from_json(const json& j);
CorrelationBreakdown correlation_from_json(const json& j);
InequalityReport report_from_json(const json& j);
OptimizationResult optimization_from_json(const json& j);
SampleStats sample_stats_from_json(const json& j);

/// Throws ParseError if `j` is not an object or has a key outside `allowed`.
void require_keys(const json& j, std::initializer_list<std::string_view> allowed, std::string_view context);

std::string format_number(double x);

/// kind,theta_a,phi_a,...,lhs,rhs,margin,violated
std::string report_csv_header(InequalityKind kind);
std::string report_csv_row(const InequalityReport& r);

/// kind,theta_a,phi_a,...,value
std::string grid_csv_header(InequalityKind kind);
std::string grid_csv_row(InequalityKind kind, std::span<const double> angles, double value);

/// theta_a,phi_a,theta_b,phi_b,n,n_pp,n_pm,n_mp,n_mm,n_inconclusive,estimate,stderr,seed
std::string sample_csv_header();
std::string sample_csv_row(const Direction& a, const Direction& b, const SampleStats& s);

}  // namespace bellcat
