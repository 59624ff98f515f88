#pragma once

// Hand-rolled random generators for property tests.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "actcode/action.hpp"
#include "actcode/descriptor.hpp"

namespace actcode::gen {

using Engine = std::mt19937_64;

inline std::size_t uniform_size(Engine& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline double uniform(Engine& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

/// Random joint-angle matrix: per-joint offsets, amplitudes and smooth
/// components plus noise, so that variances are well separated.
inline ActionMatrix action(Engine& rng, std::size_t joints, std::size_t frames, double frame_rate = 120.0) {
  Eigen::MatrixXd x(static_cast<Eigen::Index>(frames), static_cast<Eigen::Index>(joints));
  for (std::size_t j = 0; j < joints; ++j) {
    const double offset = uniform(rng, -60, 60);
    const double amp = uniform(rng, 0.5, 40);
    const double freq = uniform(rng, 0.2, 3.0);
    const double phase = uniform(rng, 0, 6.283);
    for (std::size_t t = 0; t < frames; ++t) {
      const double time = static_cast<double>(t) / frame_rate;
      x(static_cast<Eigen::Index>(t), static_cast<Eigen::Index>(j)) =
          offset + amp * std::sin(6.283185307179586 * freq * time + phase) + uniform(rng, -1, 1) * amp * 0.2;
    }
  }
  return ActionMatrix(std::move(x), frame_rate, {"c", "s", "a"});
}

inline ActionMatrix small_action(Engine& rng) {
  return action(rng, uniform_size(rng, 1, 6), uniform_size(rng, 2, 30), uniform(rng, 10, 200));
}

/// True when the top-jm ranking cannot flip under rounding-level perturbations.
inline bool well_separated(const std::vector<double>& variances, std::size_t jm, double rel_gap = 1e-9) {
  std::vector<double> s = variances;
  std::sort(s.begin(), s.end(), std::greater<>());
  if (s.front() <= 1e-6) return false;
  for (std::size_t k = 0; k + 1 < s.size() && k < jm; ++k) {
    if (s[k] - s[k + 1] <= rel_gap * s[k]) return false;
  }
  return true;
}

/// Random valid descriptor over `joints` joints with jm MIJ.
inline CodeDescriptor descriptor(Engine& rng, std::size_t joints, std::size_t jm) {
  CodeDescriptor d;
  std::vector<JointIndex> pool(joints);
  std::iota(pool.begin(), pool.end(), JointIndex{0});
  std::shuffle(pool.begin(), pool.end(), rng);
  d.mij.assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(jm));
  auto normalized = [&](bool positive) {
    std::vector<double> v(jm);
    double s = 0;
    for (double& x : v) {
      x = positive ? uniform(rng, 0.01, 1) : uniform(rng, -1, 1);
      s += std::abs(x);
    }
    for (double& x : v) x /= s;
    return v;
  };
  d.var_norm = normalized(true);
  std::sort(d.var_norm.begin(), d.var_norm.end(), std::greater<>());
  d.vmax_norm = normalized(false);
  d.vmin_norm = normalized(false);
  d.corr.resize(pair_count(jm));
  for (double& c : d.corr) c = uniform(rng, -1, 1);
  return d;
}

}  // namespace actcode::gen
