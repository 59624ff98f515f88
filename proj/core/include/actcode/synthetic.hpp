#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "actcode/action.hpp"
#include "actcode/dataset.hpp"

namespace actcode {

struct SyntheticConfig {
  std::size_t classes = 8;
  std::size_t per_class = 10;  // repetitions per (class, subject)
  std::size_t subjects = 4;
  std::size_t joints = 20;
  std::size_t frames = 240;
  double frame_rate = 120.0;
  std::uint64_t seed = 1;

  /// Peak amplitude of the strongest active joint, degrees.
  double amplitude_deg = 30.0;
  /// Active joints per class; 0 picks max(2, joints / 4).
  std::size_t active_joints = 0;
  /// Give every class its own non-overlapping set of active joints.
  bool disjoint_classes = false;
  /// Consecutive classes sharing one active-joint set and amplitude profile;
  /// members of a family differ only in which joints move in opposition (and
  /// in frequency), so variances alone cannot tell them apart. Ignored (1)
  /// when disjoint_classes is set.
  std::size_t family_size = 2;
  /// Std-dev of the white noise carried by every joint, degrees.
  double noise_deg = 0.5;
  /// Relative amplitude jitter between subjects.
  double subject_amplitude_jitter = 0.1;
  /// Phase jitter between subjects, radians.
  double subject_phase_jitter = 0.3;
};

struct ActiveJoint {
  JointIndex joint;
  double weight;      // relative amplitude in (0, 1]
  int sign;           // +1 or -1; pairs with equal signs move in phase
  double phase;       // small per-joint offset from the class phase, radians
  double harmonic;    // relative amplitude of the second harmonic
  double harmonic_phase;
};

struct ClassTemplate {
  std::vector<ActiveJoint> active;
  double frequency_hz;
};

struct SyntheticDataset {
  std::vector<ClassTemplate> templates;
  std::vector<ActionMatrix> actions;
  DatasetManifest manifest;  // paths follow write_dataset's layout
};

/// Coordinated-motion generator. Each class owns a set of active joints
/// driven by one sinusoid (plus a weak second harmonic); a joint's sign
/// decides whether it moves in phase or in opposition with the others.
/// Subjects perturb amplitudes and phase smoothly, repetitions add small
/// jitter, and every joint carries low-amplitude white noise.
///
/// Actions are ordered class-major, then subject, then repetition. The
/// output is a pure function of the config.
SyntheticDataset generate_synthetic(const SyntheticConfig& config);

}  // namespace actcode
