#include "actcode/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "rng.hpp"

namespace actcode {

namespace {

constexpr std::uint64_t kTemplateStream = 0;
constexpr std::uint64_t kSubjectStream = 1 << 20;
constexpr std::uint64_t kActionStream = 1 << 21;

std::string two_digit(std::size_t v) {
  std::string s = std::to_string(v);
  return s.size() < 2 ? "0" + s : s;
}

struct SubjectStyle {
  std::vector<double> amplitude;  // per joint
  double phase;
  double frequency_scale;
};

}  // namespace

SyntheticDataset generate_synthetic(const SyntheticConfig& cfg) {
  if (cfg.classes < 1 || cfg.per_class < 1 || cfg.subjects < 1) {
    throw std::invalid_argument("synthetic: classes, per_class and subjects must be >= 1");
  }
  if (cfg.joints < 4) throw std::invalid_argument("synthetic: need at least 4 joints");
  if (cfg.frames < 2) throw std::invalid_argument("synthetic: need at least 2 frames");
  if (!(cfg.frame_rate > 0.0)) throw std::invalid_argument("synthetic: frame rate must be positive");
  if (!(cfg.amplitude_deg > 0.0) || cfg.noise_deg < 0.0) {
    throw std::invalid_argument("synthetic: amplitude must be positive and noise non-negative");
  }

  const std::size_t active = cfg.active_joints ? cfg.active_joints : std::max<std::size_t>(2, cfg.joints / 4);
  if (active < 2 || active > cfg.joints) throw std::invalid_argument("synthetic: active joints must be in [2, J]");
  if (cfg.disjoint_classes && cfg.classes * active > cfg.joints) {
    throw std::invalid_argument("synthetic: disjoint classes need classes * active_joints <= joints");
  }

  auto rng = detail::make_engine(cfg.seed, kTemplateStream);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto uniform = [&](auto& engine, double lo, double hi) { return lo + (hi - lo) * unit(engine); };

  std::vector<double> rest(cfg.joints);
  for (double& r : rest) r = uniform(rng, -40.0, 40.0);

  std::vector<JointIndex> pool(cfg.joints);
  std::iota(pool.begin(), pool.end(), JointIndex{0});
  if (cfg.disjoint_classes) std::shuffle(pool.begin(), pool.end(), rng);

  const std::size_t family = cfg.disjoint_classes ? 1 : std::max<std::size_t>(1, cfg.family_size);

  SyntheticDataset out;
  out.templates.reserve(cfg.classes);
  for (std::size_t c = 0; c < cfg.classes; ++c) {
    ClassTemplate t;
    t.frequency_hz = uniform(rng, 0.6, 1.4);
    if (c % family != 0) {
      // Same joints and amplitudes as the family head, different opposition pattern.
      t.active = out.templates[c - c % family].active;
      std::vector<std::size_t> order(t.active.size());
      std::iota(order.begin(), order.end(), std::size_t{0});
      std::shuffle(order.begin(), order.end(), rng);
      const auto flips = 1 + static_cast<std::size_t>(unit(rng) * static_cast<double>(t.active.size() - 1));
      for (std::size_t k = 0; k < std::min(flips, t.active.size() - 1); ++k) t.active[order[k]].sign *= -1;
      out.templates.push_back(std::move(t));
      continue;
    }
    std::vector<JointIndex> chosen;
    if (cfg.disjoint_classes) {
      chosen.assign(pool.begin() + static_cast<std::ptrdiff_t>(c * active),
                    pool.begin() + static_cast<std::ptrdiff_t>((c + 1) * active));
    } else {
      std::shuffle(pool.begin(), pool.end(), rng);
      chosen.assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(active));
    }
    for (std::size_t k = 0; k < chosen.size(); ++k) {
      ActiveJoint aj;
      aj.joint = chosen[k];
      aj.weight = k == 0 ? 1.0 : uniform(rng, 0.35, 0.95);
      aj.sign = unit(rng) < 0.5 ? -1 : 1;
      aj.phase = uniform(rng, -0.1, 0.1);
      aj.harmonic = uniform(rng, 0.0, 0.2);
      aj.harmonic_phase = uniform(rng, 0.0, 2.0 * std::numbers::pi);
      t.active.push_back(aj);
    }
    out.templates.push_back(std::move(t));
  }

  std::vector<SubjectStyle> styles;
  for (std::size_t s = 0; s < cfg.subjects; ++s) {
    auto srng = detail::make_engine(cfg.seed, kSubjectStream + s);
    SubjectStyle st;
    st.amplitude.resize(cfg.joints);
    for (double& a : st.amplitude) {
      a = 1.0 + uniform(srng, -cfg.subject_amplitude_jitter, cfg.subject_amplitude_jitter);
    }
    st.phase = uniform(srng, -cfg.subject_phase_jitter, cfg.subject_phase_jitter);
    st.frequency_scale = 1.0 + uniform(srng, -0.05, 0.05);
    styles.push_back(std::move(st));
  }

  const auto frames = static_cast<Eigen::Index>(cfg.frames);
  const auto joints = static_cast<Eigen::Index>(cfg.joints);
  std::size_t serial = 0;
  for (std::size_t c = 0; c < cfg.classes; ++c) {
    const ClassTemplate& t = out.templates[c];
    for (std::size_t s = 0; s < cfg.subjects; ++s) {
      const SubjectStyle& st = styles[s];
      for (std::size_t r = 0; r < cfg.per_class; ++r, ++serial) {
        auto arng = detail::make_engine(cfg.seed, kActionStream + serial);
        const double rep_phase = uniform(arng, -0.2, 0.2);
        const double rep_gain = 1.0 + uniform(arng, -0.05, 0.05);
        std::normal_distribution<double> noise(0.0, 1.0);

        Eigen::MatrixXd x(frames, joints);
        for (Eigen::Index f = 0; f < frames; ++f) {
          for (Eigen::Index j = 0; j < joints; ++j) x(f, j) = rest[static_cast<std::size_t>(j)] + cfg.noise_deg * noise(arng);
        }
        const double omega = 2.0 * std::numbers::pi * t.frequency_hz * st.frequency_scale;
        const double phase0 = st.phase + rep_phase;
        for (const ActiveJoint& aj : t.active) {
          const auto j = static_cast<Eigen::Index>(aj.joint);
          const double amp = cfg.amplitude_deg * aj.weight * st.amplitude[aj.joint] * rep_gain * aj.sign;
          for (Eigen::Index f = 0; f < frames; ++f) {
            const double time = static_cast<double>(f) / cfg.frame_rate;
            x(f, j) += amp * (std::sin(omega * time + phase0 + aj.phase) +
                              aj.harmonic * std::sin(2.0 * (omega * time + phase0) + aj.harmonic_phase));
          }
        }

        const std::string id = "c" + two_digit(c) + "_s" + two_digit(s) + "_r" + two_digit(r);
        ActionMeta meta{"class_" + two_digit(c), "subject_" + two_digit(s), id};
        out.manifest.entries.push_back(
            {"actions/" + id + ".csv", meta.class_label, meta.subject_id, id, cfg.frame_rate, AngleUnit::Degrees});
        out.actions.emplace_back(std::move(x), cfg.frame_rate, std::move(meta));
      }
    }
  }
  out.manifest.dataset_name = "synthetic-seed" + std::to_string(cfg.seed);
  return out;
}

}  // namespace actcode
