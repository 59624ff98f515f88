#include <chrono>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "actcode/eval.hpp"
#include "actcode/parallel.hpp"
#include "fold_runner.hpp"

namespace actcode {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

std::size_t nearest_neighbor(const CodeDescriptor& query, std::span<const LabeledDescriptor> training,
                             const MetricSpec& spec) {
  if (training.empty()) throw std::invalid_argument("1-NN needs a non-empty training set");
  spec.validate();
  std::size_t best = 0;
  double best_score = score(query, training[0].descriptor, spec);
  for (std::size_t i = 1; i < training.size(); ++i) {
    const double s = score(query, training[i].descriptor, spec);
    if (spec.higher_is_better() ? s > best_score : s < best_score) {
      best = i;
      best_score = s;
    }
  }
  return best;
}

std::string knn1_classify(const CodeDescriptor& query, std::span<const LabeledDescriptor> training,
                          const MetricSpec& spec) {
  return training[nearest_neighbor(query, training, spec)].label;
}

MeanStd mean_std(std::span<const double> values) {
  if (values.empty()) return {};
  const double n = static_cast<double>(values.size());
  const double mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
  if (values.size() == 1) return {mean, 0.0};
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  return {mean, std::sqrt(ss / (n - 1.0))};
}

ClassMetrics class_metrics(const ConfusionMatrix& confusion) {
  const auto classes = static_cast<std::size_t>(confusion.rows());
  ClassMetrics m;
  m.precision.resize(classes);
  m.recall.resize(classes);

  const std::int64_t total = confusion.sum();
  m.accuracy = total > 0 ? static_cast<double>(confusion.trace()) / static_cast<double>(total) : 0.0;

  double p_sum = 0.0;
  double r_sum = 0.0;
  std::size_t present = 0;
  for (std::size_t c = 0; c < classes; ++c) {
    const auto ci = static_cast<Eigen::Index>(c);
    const auto tp = static_cast<double>(confusion(ci, ci));
    const std::int64_t actual = confusion.row(ci).sum();
    const std::int64_t predicted = confusion.col(ci).sum();
    if (predicted > 0) m.precision[c] = tp / static_cast<double>(predicted);
    if (actual == 0) continue;
    m.recall[c] = tp / static_cast<double>(actual);
    if (!m.precision[c]) m.precision[c] = 0.0;
    p_sum += *m.precision[c];
    r_sum += *m.recall[c];
    ++present;
  }
  if (present > 0) {
    m.macro_precision = p_sum / static_cast<double>(present);
    m.macro_recall = r_sum / static_cast<double>(present);
  }
  return m;
}

CodeDescriptor describe(const ActionMatrix& action, const PipelineConfig& config) {
  if (config.filter) return compute_descriptor(butterworth_filter(action, *config.filter), config.jm);
  return compute_descriptor(action, config.jm);
}

std::vector<CodeDescriptor> describe_all(std::span<const ActionMatrix> actions, const PipelineConfig& config) {
  std::vector<CodeDescriptor> out(actions.size());
  parallel_for(actions.size(), config.threads, [&](std::size_t i) { out[i] = describe(actions[i], config); });
  return out;
}

namespace detail {

ClassIndex index_classes(std::span<const ActionMatrix> dataset) {
  ClassIndex ci;
  for (const auto& a : dataset) ci.index.emplace(a.class_label(), 0);
  for (auto& [label, idx] : ci.index) {
    idx = ci.classes.size();
    ci.classes.push_back(label);
  }
  ci.of_item.reserve(dataset.size());
  for (const auto& a : dataset) ci.of_item.push_back(ci.index.at(a.class_label()));
  return ci;
}

void check_plan(const SplitPlan& plan, std::size_t dataset_size) {
  if (plan.folds.empty()) throw std::invalid_argument("split plan has no folds");
  for (const Fold& f : plan.folds) {
    if (f.train.empty()) throw std::invalid_argument("split plan has a fold without training items");
    for (std::size_t i : f.train) {
      if (i >= dataset_size) throw std::invalid_argument("split plan references item outside the dataset");
    }
    for (std::size_t i : f.test) {
      if (i >= dataset_size) throw std::invalid_argument("split plan references item outside the dataset");
    }
  }
}

FoldReport run_fold(std::span<const CodeDescriptor> train_source, std::span<const CodeDescriptor> test_source,
                    const ClassIndex& classes, const Fold& fold, const MetricSpec& spec, std::size_t threads) {
  const auto start = Clock::now();
  std::vector<LabeledDescriptor> training;
  training.reserve(fold.train.size());
  for (std::size_t i : fold.train) training.push_back({train_source[i], classes.classes[classes.of_item[i]]});

  std::vector<std::size_t> predicted(fold.test.size());
  parallel_for(fold.test.size(), threads, [&](std::size_t t) {
    const std::size_t nn = nearest_neighbor(test_source[fold.test[t]], training, spec);
    predicted[t] = classes.of_item[fold.train[nn]];
  });

  FoldReport r;
  const auto c = static_cast<Eigen::Index>(classes.classes.size());
  r.confusion = ConfusionMatrix::Zero(c, c);
  for (std::size_t t = 0; t < fold.test.size(); ++t) {
    ++r.confusion(static_cast<Eigen::Index>(classes.of_item[fold.test[t]]), static_cast<Eigen::Index>(predicted[t]));
  }
  r.metrics = class_metrics(r.confusion);
  r.test_count = fold.test.size();
  r.classify_time_s = seconds_since(start);
  return r;
}

}  // namespace detail

namespace {

EvalReport summarize(std::vector<FoldReport> folds, const detail::ClassIndex& classes, std::size_t jm,
                     const MetricSpec& spec, const SplitPlan& plan) {
  EvalReport rep;
  rep.classes = classes.classes;
  rep.jm = jm;
  rep.metric = spec;
  rep.plan = plan;
  const auto c = static_cast<Eigen::Index>(classes.classes.size());
  rep.confusion = ConfusionMatrix::Zero(c, c);

  std::vector<double> acc, prec, rec, dt, ct;
  for (const FoldReport& f : folds) {
    rep.confusion += f.confusion;
    if (f.test_count == 0) continue;
    acc.push_back(f.metrics.accuracy);
    prec.push_back(f.metrics.macro_precision);
    rec.push_back(f.metrics.macro_recall);
    dt.push_back(f.descriptor_time_s);
    ct.push_back(f.classify_time_s);
  }
  rep.pooled = class_metrics(rep.confusion);
  rep.accuracy = mean_std(acc);
  rep.macro_precision = mean_std(prec);
  rep.macro_recall = mean_std(rec);
  rep.descriptor_time_s = mean_std(dt);
  rep.classify_time_s = mean_std(ct);
  rep.folds = std::move(folds);
  return rep;
}

}  // namespace

EvalReport evaluate(std::span<const ActionMatrix> dataset, const PipelineConfig& config, const MetricSpec& spec,
                    const SplitPlan& plan) {
  if (dataset.empty()) throw std::invalid_argument("evaluate needs a non-empty dataset");
  spec.validate();
  detail::check_plan(plan, dataset.size());
  const auto classes = detail::index_classes(dataset);

  std::vector<FoldReport> folds;
  folds.reserve(plan.folds.size());
  for (const Fold& fold : plan.folds) {
    const auto start = Clock::now();
    const auto descriptors = describe_all(dataset, config);
    const double descriptor_time = seconds_since(start);
    FoldReport r = detail::run_fold(descriptors, descriptors, classes, fold, spec, config.threads);
    r.descriptor_time_s = descriptor_time;
    folds.push_back(std::move(r));
  }
  return summarize(std::move(folds), classes, config.jm, spec, plan);
}

std::vector<SweepRow> mij_sweep(std::span<const ActionMatrix> dataset, std::span<const std::size_t> jm_values,
                                std::span<const MetricSpec> specs, const PipelineConfig& config,
                                const SplitPlan& plan) {
  std::vector<SweepRow> rows;
  for (std::size_t jm : jm_values) {
    if (!dataset.empty() && jm > dataset.front().joints()) {
      throw std::invalid_argument("sweep jm " + std::to_string(jm) + " exceeds joint count " +
                                  std::to_string(dataset.front().joints()));
    }
    PipelineConfig cfg = config;
    cfg.jm = jm;
    for (const MetricSpec& spec : specs) {
      const EvalReport rep = evaluate(dataset, cfg, spec, plan);
      rows.push_back({jm, spec, rep.accuracy, stacked_size(jm)});
    }
  }
  return rows;
}

}  // namespace actcode
