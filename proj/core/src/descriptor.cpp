#include "actcode/descriptor.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <tuple>

#include "actcode/error.hpp"

namespace actcode {

namespace {

constexpr double kMinCorrelationVariance = 1e-12;

// Normalizes by the sum of absolute values; an all-zero input is returned as is.
std::vector<double> l1_normalized(std::vector<double> values) {
  double denom = 0.0;
  for (double v : values) denom += std::abs(v);
  if (denom == 0.0) return values;
  for (double& v : values) v /= denom;
  return values;
}

Eigen::MatrixXd select_columns(const Eigen::MatrixXd& m, std::span<const JointIndex> columns) {
  Eigen::MatrixXd out(m.rows(), static_cast<Eigen::Index>(columns.size()));
  for (std::size_t p = 0; p < columns.size(); ++p) {
    out.col(static_cast<Eigen::Index>(p)) = m.col(static_cast<Eigen::Index>(columns[p]));
  }
  return out;
}

// Largest and smallest velocity of one column, using the same stencil as
// joint_velocities but without materialising the velocity matrix.
std::pair<double, double> velocity_extremes(const Eigen::Ref<const Eigen::VectorXd>& a, double frame_rate) {
  const Eigen::Index n = a.size();
  const double first = (a(1) - a(0)) * frame_rate;
  const double last = (a(n - 1) - a(n - 2)) * frame_rate;
  double hi = std::max(first, last);
  double lo = std::min(first, last);
  const double half_rate = 0.5 * frame_rate;
  for (Eigen::Index t = 1; t + 1 < n; ++t) {
    const double v = (a(t + 1) - a(t - 1)) * half_rate;
    hi = std::max(hi, v);
    lo = std::min(lo, v);
  }
  return {hi, lo};
}

}  // namespace

double CodeDescriptor::correlation(std::size_t p, std::size_t q) const {
  if (p == q) return 1.0;
  if (p > q) std::swap(p, q);
  return corr.at(pair_index(p, q, jm()));
}

std::vector<double> joint_variances(const ActionMatrix& action) {
  const auto& x = action.samples();
  const double frames = static_cast<double>(x.rows());
  std::vector<double> out(static_cast<std::size_t>(x.cols()));
  for (Eigen::Index j = 0; j < x.cols(); ++j) {
    const double mean = x.col(j).sum() / frames;
    out[static_cast<std::size_t>(j)] = (x.col(j).array() - mean).square().sum() / frames;
  }
  return out;
}

MijRanking sort_variances(std::span<const double> variances) {
  MijRanking r;
  r.sorted_indices.resize(variances.size());
  std::iota(r.sorted_indices.begin(), r.sorted_indices.end(), JointIndex{0});
  std::stable_sort(r.sorted_indices.begin(), r.sorted_indices.end(),
                   [&](JointIndex a, JointIndex b) { return variances[a] > variances[b]; });
  r.sorted_variances.reserve(variances.size());
  for (JointIndex j : r.sorted_indices) r.sorted_variances.push_back(variances[j]);
  return r;
}

MijSelection rank_mij(std::span<const double> variances, std::size_t jm) {
  if (jm < 1 || jm > variances.size()) {
    throw std::invalid_argument("jm must be in [1, " + std::to_string(variances.size()) + "], got " +
                                std::to_string(jm));
  }
  for (double v : variances) {
    if (!(v >= 0.0) || !std::isfinite(v)) throw std::invalid_argument("variances must be finite and non-negative");
  }
  MijSelection sel;
  sel.ranking = sort_variances(variances);
  if (sel.ranking.sorted_variances.front() == 0.0) throw DegenerateActionError();

  sel.ranking.sorted_variances.resize(jm);
  sel.ranking.sorted_indices.resize(jm);
  const double total = std::accumulate(sel.ranking.sorted_variances.begin(), sel.ranking.sorted_variances.end(), 0.0);
  sel.var_norm.reserve(jm);
  for (double v : sel.ranking.sorted_variances) sel.var_norm.push_back(v / total);
  return sel;
}

Eigen::MatrixXd joint_velocities(const Eigen::MatrixXd& angles, double frame_rate) {
  const Eigen::Index frames = angles.rows();
  if (frames < 2) throw std::invalid_argument("velocities need at least 2 frames");
  Eigen::MatrixXd v(frames, angles.cols());
  v.row(0) = (angles.row(1) - angles.row(0)) * frame_rate;
  v.row(frames - 1) = (angles.row(frames - 1) - angles.row(frames - 2)) * frame_rate;
  if (frames > 2) {
    v.middleRows(1, frames - 2) =
        (angles.bottomRows(frames - 2) - angles.topRows(frames - 2)) * (0.5 * frame_rate);
  }
  return v;
}

Eigen::MatrixXd joint_velocities(const ActionMatrix& action) {
  return joint_velocities(action.samples(), action.frame_rate());
}

ExtremeVelocities extreme_velocities(const Eigen::MatrixXd& mij_velocities) {
  std::vector<double> vmax(static_cast<std::size_t>(mij_velocities.cols()));
  std::vector<double> vmin(vmax.size());
  for (Eigen::Index p = 0; p < mij_velocities.cols(); ++p) {
    vmax[static_cast<std::size_t>(p)] = mij_velocities.col(p).maxCoeff();
    vmin[static_cast<std::size_t>(p)] = mij_velocities.col(p).minCoeff();
  }
  return {l1_normalized(std::move(vmax)), l1_normalized(std::move(vmin))};
}

std::vector<double> pairwise_correlation(const ActionMatrix& action, std::span<const JointIndex> mij) {
  const std::size_t jm = mij.size();
  for (JointIndex j : mij) {
    if (j >= action.joints()) throw std::invalid_argument("MIJ index " + std::to_string(j) + " out of range");
  }
  Eigen::MatrixXd centered = select_columns(action.samples(), mij);
  const double frames = static_cast<double>(centered.rows());
  centered.rowwise() -= centered.colwise().mean();
  const Eigen::MatrixXd gram = (centered.transpose() * centered) / frames;

  std::vector<double> corr;
  corr.reserve(pair_count(jm));
  for (std::size_t p = 0; p + 1 < jm; ++p) {
    const auto pi = static_cast<Eigen::Index>(p);
    for (std::size_t q = p + 1; q < jm; ++q) {
      const auto qi = static_cast<Eigen::Index>(q);
      const double vp = gram(pi, pi);
      const double vq = gram(qi, qi);
      if (vp < kMinCorrelationVariance || vq < kMinCorrelationVariance) {
        corr.push_back(0.0);
        continue;
      }
      corr.push_back(std::clamp(gram(pi, qi) / (std::sqrt(vp) * std::sqrt(vq)), -1.0, 1.0));
    }
  }
  return corr;
}

CodeDescriptor compute_descriptor(const ActionMatrix& action, std::size_t jm) {
  const auto variances = joint_variances(action);
  MijSelection sel = rank_mij(variances, jm);

  CodeDescriptor d;
  d.mij = std::move(sel.ranking.sorted_indices);
  d.var_norm = std::move(sel.var_norm);

  std::vector<double> vmax(jm);
  std::vector<double> vmin(jm);
  for (std::size_t p = 0; p < jm; ++p) {
    std::tie(vmax[p], vmin[p]) =
        velocity_extremes(action.samples().col(static_cast<Eigen::Index>(d.mij[p])), action.frame_rate());
  }
  d.vmax_norm = l1_normalized(std::move(vmax));
  d.vmin_norm = l1_normalized(std::move(vmin));

  d.corr = pairwise_correlation(action, d.mij);
  return d;
}

std::vector<double> stack_descriptor(const CodeDescriptor& d) {
  std::vector<double> flat;
  flat.reserve(stacked_size(d.jm()));
  flat.insert(flat.end(), d.var_norm.begin(), d.var_norm.end());
  flat.insert(flat.end(), d.vmax_norm.begin(), d.vmax_norm.end());
  flat.insert(flat.end(), d.vmin_norm.begin(), d.vmin_norm.end());
  flat.insert(flat.end(), d.corr.begin(), d.corr.end());
  for (JointIndex j : d.mij) flat.push_back(static_cast<double>(j));
  return flat;
}

CodeDescriptor unstack_descriptor(std::span<const double> flat) {
  // Solve jm^2 + 7 jm - 2 N = 0 for the positive root.
  const double n = static_cast<double>(flat.size());
  const auto jm = static_cast<std::size_t>(std::llround((-7.0 + std::sqrt(49.0 + 8.0 * n)) / 2.0));
  if (jm == 0 || stacked_size(jm) != flat.size()) {
    throw std::invalid_argument("length " + std::to_string(flat.size()) + " is not a stacked descriptor size");
  }
  CodeDescriptor d;
  auto it = flat.begin();
  auto take = [&](std::size_t count) {
    std::vector<double> out(it, it + static_cast<std::ptrdiff_t>(count));
    it += static_cast<std::ptrdiff_t>(count);
    return out;
  };
  d.var_norm = take(jm);
  d.vmax_norm = take(jm);
  d.vmin_norm = take(jm);
  d.corr = take(pair_count(jm));
  for (double v : take(jm)) {
    if (!(v >= 0.0) || v != std::floor(v)) throw std::invalid_argument("mij slot is not a joint index");
    d.mij.push_back(static_cast<JointIndex>(v));
  }
  return d;
}

std::size_t descriptor_bytes(const CodeDescriptor& d) noexcept {
  return d.mij.size() * sizeof(JointIndex) +
         (d.var_norm.size() + d.vmax_norm.size() + d.vmin_norm.size() + d.corr.size()) * sizeof(double);
}

}  // namespace actcode
