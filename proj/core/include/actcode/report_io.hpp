#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "actcode/descriptor.hpp"
#include "actcode/eval.hpp"

namespace actcode {

/// {"action_id", "jm", "mij", "var_norm", "vmax_norm", "vmin_norm", "corr"}
std::string descriptor_to_json(const CodeDescriptor& d, const std::string& action_id);

struct NamedDescriptor {
  std::string action_id;
  CodeDescriptor descriptor;
};

/// Parses descriptor_to_json output; throws InputError on schema violations.
NamedDescriptor descriptor_from_json(std::string_view text);

/// Eval report document; see docs/eval_report.schema.json.
std::string report_to_json(const EvalReport& report);

/// Header "true\predicted,<class>...", then one row per true class.
std::string confusion_to_csv(std::span<const std::string> classes, const ConfusionMatrix& confusion);

/// jm,metric,features,accuracy_mean,accuracy_std,descriptor_len
std::string sweep_to_csv(std::span<const SweepRow> rows);
std::string sweep_to_json(std::span<const SweepRow> rows);

/// sigma_deg,accuracy_mean,accuracy_std
std::string noise_to_csv(std::span<const NoiseRow> rows);
std::string noise_to_json(std::span<const NoiseRow> rows);

/// Shortest representation that parses back to the same double.
std::string format_number(double value);

}  // namespace actcode
