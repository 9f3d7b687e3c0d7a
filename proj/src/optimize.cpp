// Copyright 2026 The bellcat Authors
// SPDX-License-Identifier: Apache-2.0

#include "bellcat/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <limits>
#include <string>
#include <thread>

#include "bellcat/error.hpp"
#include "bellcat/montecarlo.hpp"

namespace bellcat {

namespace {

constexpr std::uint64_t kBlock = 1 << 15;

AngleConfig to_config(std::span<const double> x) {
  AngleConfig cfg;
  cfg.reserve(x.size() / 2);
  for (std::size_t i = 0; i + 1 < x.size(); i += 2) cfg.emplace_back(x[i], x[i + 1]);
  return cfg;
}

std::vector<double> to_params(const AngleConfig& cfg) {
  std::vector<double> x;
  x.reserve(2 * cfg.size());
  for (const Direction& d : cfg) {
    x.push_back(d.theta());
    x.push_back(d.phi());
  }
  return x;
}

double evaluate_objective(const CorrelationProvider& p, InequalityKind kind, std::span<const double> x) {
  const AngleConfig cfg = to_config(x);
  return objective(evaluate(kind, p, cfg));
}

struct GridSpec {
  int resolution;
  int dims;

  void decode(std::uint64_t index, std::span<double> out) const {
    for (int j = dims - 1; j >= 0; --j) {
      const auto digit = static_cast<int>(index % resolution);
      index /= resolution;
      out[j] = (j % 2 == 0) ? digit * kPi / (resolution - 1) : digit * kTwoPi / resolution;
    }
  }
};

}  // namespace

OptimizationResult grid_sweep(const CorrelationProvider& provider, InequalityKind kind, int resolution,
                              const RowSink& sink, unsigned threads) {
  if (resolution < 2) throw Error(Errc::invalid_argument, "grid resolution must be at least 2");
  const int dims = 2 * directions_for(kind);
  if (std::pow(static_cast<double>(resolution), dims) > kMaxGridPoints) {
    throw Error(Errc::grid_too_large, "grid of " + std::to_string(resolution) + "^" + std::to_string(dims) +
                                          " points exceeds the 1e8 limit");
  }
  std::uint64_t total = 1;
  for (int i = 0; i < dims; ++i) total *= static_cast<std::uint64_t>(resolution);

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  const GridSpec grid{resolution, dims};

  OptimizationResult result;
  std::uint64_t best_index = 0;
  double best_value = -std::numeric_limits<double>::infinity();
  std::vector<double> values(kBlock);

  for (std::uint64_t start = 0; start < total; start += kBlock) {
    const std::uint64_t count = std::min(kBlock, total - start);
    auto work = [&](std::uint64_t lo, std::uint64_t hi) {
      std::vector<double> angles(dims);
      for (std::uint64_t i = lo; i < hi; ++i) {
        grid.decode(start + i, angles);
        values[i] = evaluate_objective(provider, kind, angles);
      }
    };
    const unsigned used = static_cast<unsigned>(std::min<std::uint64_t>(threads, count));
    if (used <= 1) {
      work(0, count);
    } else {
      std::vector<std::thread> pool;
      const std::uint64_t chunk = (count + used - 1) / used;
      for (unsigned t = 0; t < used; ++t) {
        const std::uint64_t lo = t * chunk;
        const std::uint64_t hi = std::min(count, lo + chunk);
        if (lo < hi) pool.emplace_back(work, lo, hi);
      }
      for (auto& th : pool) th.join();
    }
    std::vector<double> angles(dims);
    for (std::uint64_t i = 0; i < count; ++i) {
      if (sink) {
        grid.decode(start + i, angles);
        sink(angles, values[i]);
      }
      if (values[i] > best_value) {
        best_value = values[i];
        best_index = start + i;
      }
    }
  }

  std::vector<double> best(dims);
  grid.decode(best_index, best);
  result.best_config = to_config(best);
  result.best_value = best_value;
  result.evaluations = total;
  result.converged = true;
  return result;
}

OptimizationResult refine(const CorrelationProvider& provider, InequalityKind kind, const AngleConfig& start,
                          const RefineOptions& opts) {
  constexpr double kReflect = 1.0;
  constexpr double kExpand = 2.0;
  constexpr double kContract = 0.5;
  constexpr double kShrink = 0.5;

  if (static_cast<int>(start.size()) != directions_for(kind)) {
    throw Error(Errc::invalid_argument, "start configuration has the wrong number of directions");
  }
  const std::vector<double> x0 = to_params(start);
  const std::size_t n = x0.size();

  OptimizationResult result;
  // Minimize f = -objective.
  auto f = [&](const std::vector<double>& x) {
    ++result.evaluations;
    return -evaluate_objective(provider, kind, x);
  };

  std::vector<std::vector<double>> pts(n + 1, x0);
  std::vector<double> fv(n + 1);
  for (std::size_t i = 0; i < n; ++i) pts[i + 1][i] += opts.initial_step;
  for (std::size_t i = 0; i <= n; ++i) fv[i] = f(pts[i]);

  std::vector<std::size_t> order(n + 1);
  std::vector<double> centroid(n), trial(n), trial2(n);
  auto along = [&](const std::vector<double>& from, const std::vector<double>& to, double t,
                   std::vector<double>& out) {
    for (std::size_t k = 0; k < n; ++k) out[k] = from[k] + t * (to[k] - from[k]);
  };

  int iter = 0;
  for (; iter < opts.max_iter; ++iter) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) { return fv[l] < fv[r]; });
    const std::size_t best = order.front();
    const std::size_t worst = order.back();
    const std::size_t second_worst = order[n - 1];
    if (opts.record_trace) result.trace.emplace_back(iter, -fv[best]);
    if (fv[worst] - fv[best] < opts.tol) {
      result.converged = true;
      break;
    }

    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t i = 0; i <= n; ++i) {
      if (i == worst) continue;
      for (std::size_t k = 0; k < n; ++k) centroid[k] += pts[i][k];
    }
    for (double& c : centroid) c /= static_cast<double>(n);

    along(centroid, pts[worst], -kReflect, trial);
    const double fr = f(trial);
    if (fr < fv[best]) {
      along(centroid, trial, kExpand, trial2);
      const double fe = f(trial2);
      if (fe < fr) {
        pts[worst] = trial2;
        fv[worst] = fe;
      } else {
        pts[worst] = trial;
        fv[worst] = fr;
      }
      continue;
    }
    if (fr < fv[second_worst]) {
      pts[worst] = trial;
      fv[worst] = fr;
      continue;
    }
    bool accepted = false;
    if (fr < fv[worst]) {
      along(centroid, trial, kContract, trial2);
      const double fc = f(trial2);
      if (fc <= fr) {
        pts[worst] = trial2;
        fv[worst] = fc;
        accepted = true;
      }
    } else {
      along(centroid, pts[worst], kContract, trial2);
      const double fc = f(trial2);
      if (fc < fv[worst]) {
        pts[worst] = trial2;
        fv[worst] = fc;
        accepted = true;
      }
    }
    if (!accepted) {
      for (std::size_t i = 0; i <= n; ++i) {
        if (i == best) continue;
        along(pts[best], pts[i], kShrink, pts[i]);
        fv[i] = f(pts[i]);
      }
    }
  }

  const auto best_it = std::min_element(fv.begin(), fv.end());
  const auto best = static_cast<std::size_t>(best_it - fv.begin());
  result.best_config = to_config(pts[best]);
  result.best_value = -fv[best];
  if (opts.record_trace) result.trace.emplace_back(iter, result.best_value);
  return result;
}

OptimizationResult multistart(const CorrelationProvider& provider, InequalityKind kind, int starts,
                              std::uint64_t seed, const RefineOptions& opts) {
  if (starts < 1) throw Error(Errc::invalid_argument, "multistart needs at least one start");
  std::mt19937_64 rng(seed);
  OptimizationResult best;
  best.best_value = -std::numeric_limits<double>::infinity();
  std::uint64_t evaluations = 0;
  const int ndir = directions_for(kind);
  for (int s = 0; s < starts; ++s) {
    AngleConfig cfg;
    for (int d = 0; d < ndir; ++d) {
      const double theta = kPi * to_unit_interval(rng());
      const double phi = kTwoPi * to_unit_interval(rng());
      cfg.emplace_back(theta, phi);
    }
    OptimizationResult r = refine(provider, kind, cfg, opts);
    evaluations += r.evaluations;
    if (r.best_value > best.best_value) best = std::move(r);
  }
  best.evaluations = evaluations;
  return best;
}

OptimizationResult optimize(const CorrelationProvider& provider, InequalityKind kind,
                            const OptimizeSettings& settings) {
  OptimizationResult best;
  best.best_value = -std::numeric_limits<double>::infinity();
  std::uint64_t evaluations = 0;
  if (settings.resolution > 0) {
    const OptimizationResult grid = grid_sweep(provider, kind, settings.resolution);
    evaluations += grid.evaluations;
    OptimizationResult r = refine(provider, kind, grid.best_config, settings.refine);
    evaluations += r.evaluations;
    best = std::move(r);
  }
  if (settings.starts > 0) {
    OptimizationResult r = multistart(provider, kind, settings.starts, settings.seed, settings.refine);
    evaluations += r.evaluations;
    if (r.best_value > best.best_value) best = std::move(r);
  }
  if (settings.resolution <= 0 && settings.starts <= 0) {
    throw Error(Errc::invalid_argument, "optimize needs a grid resolution or at least one start");
  }
  best.evaluations = evaluations;
  return best;
}

}  // namespace bellcat
