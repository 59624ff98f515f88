#include "actcode/action.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace actcode {

ActionMatrix::ActionMatrix(Eigen::MatrixXd samples, double frame_rate, ActionMeta meta)
    : samples_(std::move(samples)), frame_rate_(frame_rate), meta_(std::move(meta)) {
  if (samples_.rows() < 2) {
    throw std::invalid_argument("action '" + meta_.action_id + "': need at least 2 frames, got " +
                                std::to_string(samples_.rows()));
  }
  if (samples_.cols() < 1) {
    throw std::invalid_argument("action '" + meta_.action_id + "': need at least 1 joint");
  }
  if (!(frame_rate_ > 0.0) || !std::isfinite(frame_rate_)) {
    throw std::invalid_argument("action '" + meta_.action_id + "': frame rate must be positive");
  }
  if (!samples_.allFinite()) {
    throw std::invalid_argument("action '" + meta_.action_id + "': samples contain NaN or infinity");
  }
}

ActionMatrix ActionMatrix::with_samples(Eigen::MatrixXd samples) const {
  return ActionMatrix(std::move(samples), frame_rate_, meta_);
}

bool operator==(const ActionMatrix& a, const ActionMatrix& b) {
  return a.frame_rate_ == b.frame_rate_ && a.meta_.class_label == b.meta_.class_label &&
         a.meta_.subject_id == b.meta_.subject_id && a.meta_.action_id == b.meta_.action_id &&
         a.samples_.rows() == b.samples_.rows() && a.samples_.cols() == b.samples_.cols() &&
         a.samples_ == b.samples_;
}

}  // namespace actcode
