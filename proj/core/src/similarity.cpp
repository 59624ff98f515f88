#include "actcode/similarity.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "actcode/parallel.hpp"

namespace actcode {

namespace {

struct CommonJoint {
  JointIndex joint;
  std::size_t slot_a;
  std::size_t slot_b;
};

std::vector<std::pair<JointIndex, std::size_t>> slots_by_joint(const CodeDescriptor& d) {
  std::vector<std::pair<JointIndex, std::size_t>> out;
  out.reserve(d.jm());
  for (std::size_t p = 0; p < d.jm(); ++p) out.emplace_back(d.mij[p], p);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CommonJoint> common_joints(const CodeDescriptor& a, const CodeDescriptor& b) {
  const auto sa = slots_by_joint(a);
  const auto sb = slots_by_joint(b);
  std::vector<CommonJoint> out;
  auto ia = sa.begin();
  auto ib = sb.begin();
  while (ia != sa.end() && ib != sb.end()) {
    if (ia->first < ib->first) {
      ++ia;
    } else if (ib->first < ia->first) {
      ++ib;
    } else {
      out.push_back({ia->first, ia->second, ib->second});
      ++ia;
      ++ib;
    }
  }
  return out;
}

void require_same_jm(const CodeDescriptor& a, const CodeDescriptor& b) {
  if (a.jm() != b.jm()) {
    throw std::invalid_argument("descriptors built with different jm (" + std::to_string(a.jm()) + " vs " +
                                std::to_string(b.jm()) + ")");
  }
}

// Joint-pair contribution of one descriptor: variances, then max, then min velocities.
double pair_mass(const CodeDescriptor& d, std::size_t p, std::size_t q) {
  return (d.var_norm[p] + d.var_norm[q]) + (d.vmax_norm[p] + d.vmax_norm[q]) + (d.vmin_norm[p] + d.vmin_norm[q]);
}

template <typename Accumulate>
void for_each_feature(const CodeDescriptor& a, const CodeDescriptor& b, FeatureSet features, Accumulate&& acc) {
  auto slice = [&](const std::vector<double>& x, const std::vector<double>& y) {
    for (std::size_t k = 0; k < x.size(); ++k) acc(x[k] - y[k]);
  };
  slice(a.var_norm, b.var_norm);
  if (features == FeatureSet::VarianceOnly) return;
  slice(a.vmax_norm, b.vmax_norm);
  slice(a.vmin_norm, b.vmin_norm);
  if (features == FeatureSet::VariancePlusVelocity) return;
  slice(a.corr, b.corr);
}

}  // namespace

void MetricSpec::validate() const {
  if (kind == MetricKind::Csm && features != FeatureSet::Full) {
    throw std::invalid_argument("CSM requires the full feature set");
  }
}

std::string_view to_string(MetricKind kind) noexcept {
  switch (kind) {
    case MetricKind::Csm: return "csm";
    case MetricKind::Euclidean: return "euclidean";
    case MetricKind::Manhattan: return "manhattan";
  }
  return "?";
}

std::string_view to_string(FeatureSet features) noexcept {
  switch (features) {
    case FeatureSet::VarianceOnly: return "var";
    case FeatureSet::VariancePlusVelocity: return "var-vel";
    case FeatureSet::Full: return "full";
  }
  return "?";
}

MetricKind parse_metric_kind(std::string_view text) {
  if (text == "csm") return MetricKind::Csm;
  if (text == "euclidean") return MetricKind::Euclidean;
  if (text == "manhattan") return MetricKind::Manhattan;
  throw std::invalid_argument("unknown metric '" + std::string(text) + "' (expected csm|euclidean|manhattan)");
}

FeatureSet parse_feature_set(std::string_view text) {
  if (text == "var") return FeatureSet::VarianceOnly;
  if (text == "var-vel") return FeatureSet::VariancePlusVelocity;
  if (text == "full") return FeatureSet::Full;
  throw std::invalid_argument("unknown feature set '" + std::string(text) + "' (expected var|var-vel|full)");
}

std::vector<JointPair> common_pairs(const CodeDescriptor& a, const CodeDescriptor& b) {
  const auto common = common_joints(a, b);
  std::vector<JointPair> pairs;
  pairs.reserve(pair_count(common.size()));
  for (std::size_t u = 0; u + 1 < common.size(); ++u) {
    for (std::size_t v = u + 1; v < common.size(); ++v) pairs.push_back({common[u].joint, common[v].joint});
  }
  return pairs;
}

double csm(const CodeDescriptor& a, const CodeDescriptor& b) {
  require_same_jm(a, b);
  const auto common = common_joints(a, b);
  double total = 0.0;
  for (std::size_t u = 0; u + 1 < common.size(); ++u) {
    for (std::size_t v = u + 1; v < common.size(); ++v) {
      const auto& x = common[u];
      const auto& y = common[v];
      const double w = correlation_weight(a.correlation(x.slot_a, y.slot_a), b.correlation(x.slot_b, y.slot_b));
      total += w * (pair_mass(a, x.slot_a, y.slot_a) + pair_mass(b, x.slot_b, y.slot_b));
    }
  }
  return total;
}

double baseline_distance(const CodeDescriptor& a, const CodeDescriptor& b, const MetricSpec& spec) {
  require_same_jm(a, b);
  switch (spec.kind) {
    case MetricKind::Manhattan: {
      double sum = 0.0;
      for_each_feature(a, b, spec.features, [&](double diff) { sum += std::abs(diff); });
      return sum;
    }
    case MetricKind::Euclidean: {
      double sum = 0.0;
      for_each_feature(a, b, spec.features, [&](double diff) { sum += diff * diff; });
      return std::sqrt(sum);
    }
    case MetricKind::Csm: break;
  }
  throw std::invalid_argument("baseline_distance needs a euclidean or manhattan metric");
}

double score(const CodeDescriptor& a, const CodeDescriptor& b, const MetricSpec& spec) {
  return spec.kind == MetricKind::Csm ? csm(a, b) : baseline_distance(a, b, spec);
}

Eigen::MatrixXd similarity_matrix(std::span<const CodeDescriptor> queries, std::span<const CodeDescriptor> references,
                                  const MetricSpec& spec, std::size_t threads) {
  spec.validate();
  const auto rows = static_cast<Eigen::Index>(queries.size());
  const auto cols = static_cast<Eigen::Index>(references.size());
  Eigen::MatrixXd out(rows, cols);
  if (rows == 0 || cols == 0) return out;
  parallel_for(queries.size(), threads, [&](std::size_t q) {
    for (std::size_t r = 0; r < references.size(); ++r) {
      out(static_cast<Eigen::Index>(q), static_cast<Eigen::Index>(r)) = score(queries[q], references[r], spec);
    }
  });
  return out;
}

}  // namespace actcode
