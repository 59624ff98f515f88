#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "actcode/action.hpp"

namespace actcode {

/// Variances sorted in descending order together with the joints they
/// belong to. Ties keep the lower joint index first.
struct MijRanking {
  std::vector<double> sorted_variances;
  std::vector<JointIndex> sorted_indices;
};

/// Top-jm slice of a ranking plus the variances normalized to unit sum.
struct MijSelection {
  MijRanking ranking;
  std::vector<double> var_norm;
};

/// Coordination-based action descriptor.
///
/// All per-joint vectors are in MIJ rank order (highest variance first).
/// `corr` holds the strict upper triangle of the MIJ correlation matrix in
/// row-major order: (0,1), (0,2), ..., (0,jm-1), (1,2), ..., (jm-2,jm-1),
/// where positions refer to slots of `mij`.
struct CodeDescriptor {
  std::vector<JointIndex> mij;
  std::vector<double> var_norm;
  std::vector<double> vmax_norm;
  std::vector<double> vmin_norm;
  std::vector<double> corr;

  std::size_t jm() const noexcept { return mij.size(); }

  /// Correlation between MIJ slots p and q (p != q); 1 on the diagonal.
  double correlation(std::size_t p, std::size_t q) const;

  friend bool operator==(const CodeDescriptor&, const CodeDescriptor&) = default;
};

/// N_C = jm (jm + 7) / 2.
constexpr std::size_t stacked_size(std::size_t jm) noexcept { return jm * (jm + 7) / 2; }

constexpr std::size_t pair_count(std::size_t jm) noexcept { return jm * (jm - 1) / 2; }

/// Index of slot pair (p, q), p < q, in the row-major strict upper triangle.
constexpr std::size_t pair_index(std::size_t p, std::size_t q, std::size_t jm) noexcept {
  return p * jm - p * (p + 1) / 2 + (q - p - 1);
}

/// Population variance (divide by T) of every joint column.
std::vector<double> joint_variances(const ActionMatrix& action);

/// Full descending sort of a variance vector with stable tie-break.
MijRanking sort_variances(std::span<const double> variances);

/// Selects the jm most informative joints and normalizes their variances.
/// Throws std::invalid_argument when jm is outside [1, J] and
/// DegenerateActionError when every variance is zero.
MijSelection rank_mij(std::span<const double> variances, std::size_t jm);

/// Angular velocities (deg/s): central differences on interior frames,
/// one-sided differences at both ends, scaled by the frame rate.
Eigen::MatrixXd joint_velocities(const Eigen::MatrixXd& angles, double frame_rate);
Eigen::MatrixXd joint_velocities(const ActionMatrix& action);

struct ExtremeVelocities {
  std::vector<double> vmax_norm;
  std::vector<double> vmin_norm;
};

/// Per-column max and min over time, each divided by the sum of absolute
/// values of its own entries. An all-zero vector stays all-zero.
ExtremeVelocities extreme_velocities(const Eigen::MatrixXd& mij_velocities);

/// Pearson correlation for every unordered MIJ pair, in canonical order.
/// Pairs where either column's variance is below 1e-12 get 0.
std::vector<double> pairwise_correlation(const ActionMatrix& action, std::span<const JointIndex> mij);

CodeDescriptor compute_descriptor(const ActionMatrix& action, std::size_t jm);

/// var_norm | vmax_norm | vmin_norm | corr | mij (indices as doubles).
std::vector<double> stack_descriptor(const CodeDescriptor& d);

/// Inverse of stack_descriptor. Throws std::invalid_argument when the length
/// is not of the form jm (jm + 7) / 2 or the mij slots are not indices.
CodeDescriptor unstack_descriptor(std::span<const double> flat);

/// Heap bytes held by the descriptor's vectors (sizes, not capacities).
std::size_t descriptor_bytes(const CodeDescriptor& d) noexcept;

}  // namespace actcode
