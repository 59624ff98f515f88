#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "actcode/action.hpp"
#include "actcode/descriptor.hpp"
#include "actcode/filter.hpp"
#include "actcode/similarity.hpp"

namespace actcode {

// ---------------------------------------------------------------------------
// Split protocols

struct Fold {
  std::vector<std::size_t> train;
  std::vector<std::size_t> test;
};

enum class SplitKind { StratifiedKFold, CrossSubject };

struct SplitPlan {
  SplitKind kind = SplitKind::StratifiedKFold;
  std::size_t k = 0;                        // StratifiedKFold
  std::uint64_t seed = 0;                   // StratifiedKFold
  std::vector<std::string> train_subjects;  // CrossSubject
  std::vector<Fold> folds;
  /// Non-fatal problems, e.g. a class with fewer items than folds.
  std::vector<std::string> warnings;
};

/// Shuffles each class with a seeded engine and deals its members round-robin
/// over k folds, continuing the rotation across classes so fold sizes stay
/// within one of each other. Requires 2 <= k <= labels.size().
SplitPlan stratified_kfold(std::span<const std::string> labels, std::size_t k, std::uint64_t seed);
SplitPlan stratified_kfold(std::span<const ActionMatrix> dataset, std::size_t k, std::uint64_t seed);

/// Single fold: actions of `train_subjects` train, everyone else tests.
/// Throws InputError for unknown subjects or an empty side.
SplitPlan cross_subject(std::span<const ActionMatrix> dataset, std::span<const std::string> train_subjects);

// ---------------------------------------------------------------------------
// Classification

struct LabeledDescriptor {
  CodeDescriptor descriptor;
  std::string label;
};

/// Index of the best training item (max CSM or min distance); ties go to
/// the lowest index. Throws std::invalid_argument on an empty training set.
std::size_t nearest_neighbor(const CodeDescriptor& query, std::span<const LabeledDescriptor> training,
                             const MetricSpec& spec);

std::string knn1_classify(const CodeDescriptor& query, std::span<const LabeledDescriptor> training,
                          const MetricSpec& spec);

// ---------------------------------------------------------------------------
// Metrics

struct MeanStd {
  double mean = 0.0;
  double std = 0.0;  // sample standard deviation; 0 for a single value
};

MeanStd mean_std(std::span<const double> values);

/// Rows are true classes, columns predicted classes, indexed like `classes`.
using ConfusionMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

struct ClassMetrics {
  double accuracy = 0.0;
  /// nullopt for classes with no test items.
  std::vector<std::optional<double>> precision;
  std::vector<std::optional<double>> recall;
  /// Unweighted mean over classes present in the test set.
  double macro_precision = 0.0;
  double macro_recall = 0.0;
};

/// Precision is TP / (TP + FP), 0 when a present class is never predicted;
/// recall is TP / (TP + FN).
ClassMetrics class_metrics(const ConfusionMatrix& confusion);

struct FoldReport {
  ConfusionMatrix confusion;
  ClassMetrics metrics;
  std::size_t test_count = 0;
  double descriptor_time_s = 0.0;
  double classify_time_s = 0.0;
};

struct EvalReport {
  std::vector<std::string> classes;  // sorted class labels
  std::size_t jm = 0;
  MetricSpec metric;
  SplitPlan plan;
  std::vector<FoldReport> folds;

  /// Sum of fold confusions and the metrics derived from it.
  ConfusionMatrix confusion;
  ClassMetrics pooled;

  MeanStd accuracy;
  MeanStd macro_precision;
  MeanStd macro_recall;
  MeanStd descriptor_time_s;
  MeanStd classify_time_s;
};

// ---------------------------------------------------------------------------
// Pipelines

/// Preprocessing and descriptor settings shared by all experiments.
struct PipelineConfig {
  std::size_t jm = 20;
  std::optional<FilterSpec> filter = FilterSpec{};
  /// Worker count for descriptor and 1-NN loops; 0 = hardware default.
  std::size_t threads = 1;
};

/// Optional filtering followed by compute_descriptor.
CodeDescriptor describe(const ActionMatrix& action, const PipelineConfig& config);

std::vector<CodeDescriptor> describe_all(std::span<const ActionMatrix> actions, const PipelineConfig& config);

/// Runs every fold of the plan: descriptors for all items are computed once
/// per fold (timed), then each test item is classified by 1-NN against the
/// fold's training items.
EvalReport evaluate(std::span<const ActionMatrix> dataset, const PipelineConfig& config, const MetricSpec& spec,
                    const SplitPlan& plan);

struct SweepRow {
  std::size_t jm;
  MetricSpec metric;
  MeanStd accuracy;
  std::size_t descriptor_len;
};

/// One evaluate() per (jm, spec), jm-major.
std::vector<SweepRow> mij_sweep(std::span<const ActionMatrix> dataset, std::span<const std::size_t> jm_values,
                                std::span<const MetricSpec> specs, const PipelineConfig& config,
                                const SplitPlan& plan);

// ---------------------------------------------------------------------------
// Noise robustness

/// Adds i.i.d. N(0, sigma_deg^2) to every sample. Operates on raw angles and
/// must therefore run before any filtering. sigma 0 returns an exact copy.
ActionMatrix inject_agwn(const ActionMatrix& action, double sigma_deg, std::uint64_t seed);

struct NoiseOptions {
  /// Also corrupt training items (default: only test items are noisy).
  bool corrupt_training = false;
};

struct NoiseRow {
  double sigma_deg;
  MeanStd accuracy;
};

/// Accuracy per noise level, rows sorted by sigma ascending. Item i is
/// corrupted with seed-derived noise independent of sigma, so the noise
/// realizations at different levels differ only by scale.
std::vector<NoiseRow> noise_sweep(std::span<const ActionMatrix> dataset, std::span<const double> sigmas,
                                  const PipelineConfig& config, const MetricSpec& spec, const SplitPlan& plan,
                                  std::uint64_t seed, const NoiseOptions& options = {});

}  // namespace actcode
