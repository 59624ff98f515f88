#include "actcode/eval.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "actcode/error.hpp"
#include "rng.hpp"

namespace actcode {

namespace {

void fill_train(Fold& fold, std::size_t n) {
  std::sort(fold.test.begin(), fold.test.end());
  fold.train.clear();
  auto it = fold.test.begin();
  for (std::size_t i = 0; i < n; ++i) {
    if (it != fold.test.end() && *it == i) {
      ++it;
    } else {
      fold.train.push_back(i);
    }
  }
}

}  // namespace

SplitPlan stratified_kfold(std::span<const std::string> labels, std::size_t k, std::uint64_t seed) {
  if (k < 2) throw std::invalid_argument("k-fold needs k >= 2");
  if (k > labels.size()) {
    throw std::invalid_argument("k-fold needs k <= dataset size (" + std::to_string(labels.size()) + "), got " +
                                std::to_string(k));
  }
  SplitPlan plan;
  plan.kind = SplitKind::StratifiedKFold;
  plan.k = k;
  plan.seed = seed;
  plan.folds.resize(k);

  std::map<std::string, std::vector<std::size_t>> by_class;
  for (std::size_t i = 0; i < labels.size(); ++i) by_class[labels[i]].push_back(i);

  auto engine = detail::make_engine(seed, 0);
  std::size_t next_fold = 0;
  for (auto& [label, members] : by_class) {
    if (members.size() < k) {
      plan.warnings.push_back("class \"" + label + "\" has " + std::to_string(members.size()) +
                              " items, fewer than " + std::to_string(k) + " folds; stratification is best-effort");
    }
    std::shuffle(members.begin(), members.end(), engine);
    for (std::size_t idx : members) {
      plan.folds[next_fold].test.push_back(idx);
      next_fold = (next_fold + 1) % k;
    }
  }
  for (Fold& f : plan.folds) fill_train(f, labels.size());
  return plan;
}

SplitPlan stratified_kfold(std::span<const ActionMatrix> dataset, std::size_t k, std::uint64_t seed) {
  std::vector<std::string> labels;
  labels.reserve(dataset.size());
  for (const auto& a : dataset) labels.push_back(a.class_label());
  return stratified_kfold(labels, k, seed);
}

SplitPlan cross_subject(std::span<const ActionMatrix> dataset, std::span<const std::string> train_subjects) {
  if (train_subjects.empty()) throw InputError("cross-subject split needs at least one training subject");
  std::set<std::string> known;
  for (const auto& a : dataset) known.insert(a.subject_id());
  const std::set<std::string> wanted(train_subjects.begin(), train_subjects.end());
  for (const auto& s : wanted) {
    if (!known.contains(s)) throw InputError("unknown subject \"" + s + "\"");
  }

  SplitPlan plan;
  plan.kind = SplitKind::CrossSubject;
  plan.train_subjects.assign(wanted.begin(), wanted.end());
  Fold fold;
  for (std::size_t i = 0; i < dataset.size(); ++i) {
    (wanted.contains(dataset[i].subject_id()) ? fold.train : fold.test).push_back(i);
  }
  if (fold.test.empty()) throw InputError("cross-subject split leaves no test items");
  if (fold.train.empty()) throw InputError("cross-subject split leaves no training items");
  plan.folds.push_back(std::move(fold));
  return plan;
}

}  // namespace actcode
