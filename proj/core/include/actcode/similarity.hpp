#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "actcode/descriptor.hpp"

namespace actcode {

enum class MetricKind { Csm, Euclidean, Manhattan };

/// Which stacked slices a baseline distance looks at.
enum class FeatureSet { VarianceOnly, VariancePlusVelocity, Full };

struct MetricSpec {
  MetricKind kind = MetricKind::Csm;
  FeatureSet features = FeatureSet::Full;

  /// CSM is a similarity (larger wins); the baselines are distances.
  bool higher_is_better() const noexcept { return kind == MetricKind::Csm; }

  /// Throws std::invalid_argument for CSM over anything but Full.
  void validate() const;

  friend bool operator==(const MetricSpec&, const MetricSpec&) = default;
};

std::string_view to_string(MetricKind kind) noexcept;
std::string_view to_string(FeatureSet features) noexcept;
/// Accepts csm | euclidean | manhattan.
MetricKind parse_metric_kind(std::string_view text);
/// Accepts var | var-vel | full.
FeatureSet parse_feature_set(std::string_view text);

struct JointPair {
  JointIndex i;
  JointIndex j;
  friend bool operator==(const JointPair&, const JointPair&) = default;
};

/// Unordered pairs of joints selected as MIJ by both descriptors, with
/// i < j, sorted lexicographically by joint index.
std::vector<JointPair> common_pairs(const CodeDescriptor& a, const CodeDescriptor& b);

/// w_ij = 1 - 0.5 |c_a - c_b|.
inline double correlation_weight(double ca, double cb) noexcept { return 1.0 - 0.5 * std::abs(ca - cb); }

/// Correlation-based similarity. One term per unordered common MIJ pair:
///
///   w_ij * [ (s_i^a + s_j^a + s_i^b + s_j^b)
///          + (vmax_i^a + vmax_j^a + vmax_i^b + vmax_j^b)
///          + (vmin_i^a + vmin_j^a + vmin_i^b + vmin_j^b) ]
///
/// with signed velocities. Exactly symmetric in its arguments. Throws
/// std::invalid_argument when the descriptors have different jm.
double csm(const CodeDescriptor& a, const CodeDescriptor& b);

/// L1 or L2 distance over the feature slices selected by spec, aligned by
/// MIJ rank position. The mij slots are never part of the distance.
double baseline_distance(const CodeDescriptor& a, const CodeDescriptor& b, const MetricSpec& spec);

/// csm or baseline_distance depending on spec.kind.
double score(const CodeDescriptor& a, const CodeDescriptor& b, const MetricSpec& spec);

/// Dense |queries| x |references| matrix of score(). Rows are evaluated
/// concurrently on up to `threads` workers (0 = hardware default); the
/// result does not depend on the thread count.
Eigen::MatrixXd similarity_matrix(std::span<const CodeDescriptor> queries, std::span<const CodeDescriptor> references,
                                  const MetricSpec& spec, std::size_t threads = 1);

}  // namespace actcode
