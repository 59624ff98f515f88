#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "actcode/eval.hpp"

namespace actcode::detail {

struct ClassIndex {
  std::vector<std::string> classes;
  std::map<std::string, std::size_t> index;
  std::vector<std::size_t> of_item;  // class index per dataset item
};

ClassIndex index_classes(std::span<const ActionMatrix> dataset);

/// 1-NN over one fold: training descriptors come from `train_source`, test
/// descriptors from `test_source`; both are indexed by dataset position.
FoldReport run_fold(std::span<const CodeDescriptor> train_source, std::span<const CodeDescriptor> test_source,
                    const ClassIndex& classes, const Fold& fold, const MetricSpec& spec, std::size_t threads);

void check_plan(const SplitPlan& plan, std::size_t dataset_size);

}  // namespace actcode::detail
