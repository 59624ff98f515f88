#pragma once

#include <cstddef>
#include <string>

#include <Eigen/Core>

namespace actcode {

using JointIndex = std::size_t;

struct ActionMeta {
  std::string class_label;
  std::string subject_id;
  std::string action_id;
};

/// One recorded action: T frames x J joint angles (degrees) sampled at
/// frame_rate Hz. Column j is the trajectory of joint j.
///
/// Construction validates T >= 2, J >= 1, frame_rate > 0 and that every
/// sample is finite; the object is immutable afterwards.
class ActionMatrix {
 public:
  ActionMatrix(Eigen::MatrixXd samples, double frame_rate, ActionMeta meta = {});

  const Eigen::MatrixXd& samples() const noexcept { return samples_; }
  std::size_t frames() const noexcept { return static_cast<std::size_t>(samples_.rows()); }
  std::size_t joints() const noexcept { return static_cast<std::size_t>(samples_.cols()); }
  double frame_rate() const noexcept { return frame_rate_; }

  const ActionMeta& meta() const noexcept { return meta_; }
  const std::string& class_label() const noexcept { return meta_.class_label; }
  const std::string& subject_id() const noexcept { return meta_.subject_id; }
  const std::string& action_id() const noexcept { return meta_.action_id; }

  /// Same metadata and frame rate, new samples (re-validated).
  ActionMatrix with_samples(Eigen::MatrixXd samples) const;

  friend bool operator==(const ActionMatrix& a, const ActionMatrix& b);

 private:
  Eigen::MatrixXd samples_;
  double frame_rate_;
  ActionMeta meta_;
};

}  // namespace actcode
