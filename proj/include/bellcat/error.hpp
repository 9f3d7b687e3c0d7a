// Copyright 2026 The bellcat Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace bellcat {

enum class Errc {
  invalid_argument,
  incompatible_spins,
  degenerate_triangle,
  internal_consistency,
  degenerate_postselection,
  grid_too_large,
  negative_probability,
  zero_conclusive,
  unsupported_scenario,
};

/// Numeric-domain failure raised by the library. The CLI maps every Error to
/// exit code 3.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  [[nodiscard]] Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace bellcat
