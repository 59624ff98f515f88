#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "actcode/eval.hpp"
#include "actcode/parallel.hpp"
#include "fold_runner.hpp"
#include "rng.hpp"

namespace actcode {

ActionMatrix inject_agwn(const ActionMatrix& action, double sigma_deg, std::uint64_t seed) {
  if (!(sigma_deg >= 0.0) || !std::isfinite(sigma_deg)) {
    throw std::invalid_argument("noise standard deviation must be finite and >= 0");
  }
  if (sigma_deg == 0.0) return action;
  auto engine = detail::make_engine(seed, 0);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXd x = action.samples();
  // Column-major walk: joint by joint, frame by frame.
  for (Eigen::Index j = 0; j < x.cols(); ++j) {
    for (Eigen::Index t = 0; t < x.rows(); ++t) x(t, j) += sigma_deg * gauss(engine);
  }
  return action.with_samples(std::move(x));
}

std::vector<NoiseRow> noise_sweep(std::span<const ActionMatrix> dataset, std::span<const double> sigmas,
                                  const PipelineConfig& config, const MetricSpec& spec, const SplitPlan& plan,
                                  std::uint64_t seed, const NoiseOptions& options) {
  if (dataset.empty()) throw std::invalid_argument("noise sweep needs a non-empty dataset");
  spec.validate();
  detail::check_plan(plan, dataset.size());
  for (double s : sigmas) {
    if (!(s >= 0.0) || !std::isfinite(s)) throw std::invalid_argument("noise levels must be finite and >= 0");
  }
  std::vector<double> levels(sigmas.begin(), sigmas.end());
  std::sort(levels.begin(), levels.end());

  const auto classes = detail::index_classes(dataset);
  const auto clean = describe_all(dataset, config);

  std::vector<NoiseRow> rows;
  rows.reserve(levels.size());
  for (double sigma : levels) {
    std::vector<CodeDescriptor> noisy(dataset.size());
    parallel_for(dataset.size(), config.threads, [&](std::size_t i) {
      noisy[i] = describe(inject_agwn(dataset[i], sigma, detail::mix_seed(seed, i)), config);
    });
    const auto& train_source = options.corrupt_training ? noisy : clean;
    std::vector<double> acc;
    for (const Fold& fold : plan.folds) {
      if (fold.test.empty()) continue;
      acc.push_back(detail::run_fold(train_source, noisy, classes, fold, spec, config.threads).metrics.accuracy);
    }
    rows.push_back({sigma, mean_std(acc)});
  }
  return rows;
}

}  // namespace actcode
