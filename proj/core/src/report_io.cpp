#include "actcode/report_io.hpp"

#include <charconv>

#include <json.hpp>

#include "actcode/error.hpp"

namespace actcode {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

ordered_json confusion_json(const ConfusionMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

ordered_json optional_list(const std::vector<std::optional<double>>& values) {
  ordered_json out = ordered_json::array();
  for (const auto& v : values) {
    if (v) {
      out.push_back(*v);
    } else {
      out.push_back(nullptr);
    }
  }
  return out;
}

ordered_json mean_std_json(const MeanStd& m) { return {{"mean", m.mean}, {"std", m.std}}; }

template <typename T>
std::vector<T> list_field(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_array()) throw InputError(std::string("descriptor: \"") + key + "\" must be an array");
  try {
    return doc[key].get<std::vector<T>>();
  } catch (const json::exception&) {
    throw InputError(std::string("descriptor: \"") + key + "\" has elements of the wrong type");
  }
}

}  // namespace

std::string format_number(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

std::string descriptor_to_json(const CodeDescriptor& d, const std::string& action_id) {
  ordered_json doc;
  doc["action_id"] = action_id;
  doc["jm"] = d.jm();
  doc["mij"] = d.mij;
  doc["var_norm"] = d.var_norm;
  doc["vmax_norm"] = d.vmax_norm;
  doc["vmin_norm"] = d.vmin_norm;
  doc["corr"] = d.corr;
  return doc.dump(2) + "\n";
}

NamedDescriptor descriptor_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("descriptor: invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("action_id") || !doc["action_id"].is_string() || !doc.contains("jm") ||
      !doc["jm"].is_number_unsigned()) {
    throw InputError("descriptor: needs string \"action_id\" and unsigned \"jm\"");
  }
  NamedDescriptor out;
  out.action_id = doc["action_id"].get<std::string>();
  const auto jm = doc["jm"].get<std::size_t>();
  CodeDescriptor& d = out.descriptor;
  d.mij = list_field<JointIndex>(doc, "mij");
  d.var_norm = list_field<double>(doc, "var_norm");
  d.vmax_norm = list_field<double>(doc, "vmax_norm");
  d.vmin_norm = list_field<double>(doc, "vmin_norm");
  d.corr = list_field<double>(doc, "corr");
  if (d.mij.size() != jm || d.var_norm.size() != jm || d.vmax_norm.size() != jm || d.vmin_norm.size() != jm ||
      d.corr.size() != pair_count(jm)) {
    throw InputError("descriptor: field lengths do not match jm = " + std::to_string(jm));
  }
  return out;
}

std::string report_to_json(const EvalReport& report) {
  ordered_json doc;
  doc["schema"] = "actcode.eval_report/1";
  doc["jm"] = report.jm;
  doc["metric"] = {{"kind", std::string(to_string(report.metric.kind))},
                   {"features", std::string(to_string(report.metric.features))}};

  ordered_json split;
  if (report.plan.kind == SplitKind::StratifiedKFold) {
    split["kind"] = "stratified_kfold";
    split["k"] = report.plan.k;
    split["seed"] = report.plan.seed;
  } else {
    split["kind"] = "cross_subject";
    split["train_subjects"] = report.plan.train_subjects;
  }
  split["warnings"] = report.plan.warnings;
  doc["split"] = std::move(split);

  doc["classes"] = report.classes;
  doc["accuracy"] = mean_std_json(report.accuracy);
  doc["macro_precision"] = mean_std_json(report.macro_precision);
  doc["macro_recall"] = mean_std_json(report.macro_recall);
  doc["descriptor_time_s"] = mean_std_json(report.descriptor_time_s);
  doc["classify_time_s"] = mean_std_json(report.classify_time_s);
  doc["pooled"] = {{"accuracy", report.pooled.accuracy},
                   {"macro_precision", report.pooled.macro_precision},
                   {"macro_recall", report.pooled.macro_recall},
                   {"precision_per_class", optional_list(report.pooled.precision)},
                   {"recall_per_class", optional_list(report.pooled.recall)}};
  doc["confusion"] = confusion_json(report.confusion);

  ordered_json folds = ordered_json::array();
  for (const FoldReport& f : report.folds) {
    folds.push_back({{"test_count", f.test_count},
                     {"accuracy", f.metrics.accuracy},
                     {"macro_precision", f.metrics.macro_precision},
                     {"macro_recall", f.metrics.macro_recall},
                     {"precision_per_class", optional_list(f.metrics.precision)},
                     {"recall_per_class", optional_list(f.metrics.recall)},
                     {"descriptor_time_s", f.descriptor_time_s},
                     {"classify_time_s", f.classify_time_s},
                     {"confusion", confusion_json(f.confusion)}});
  }
  doc["folds"] = std::move(folds);
  return doc.dump(2) + "\n";
}

std::string confusion_to_csv(std::span<const std::string> classes, const ConfusionMatrix& confusion) {
  std::string out = "true\\predicted";
  for (const auto& c : classes) out += "," + c;
  out += "\n";
  for (Eigen::Index r = 0; r < confusion.rows(); ++r) {
    out += classes[static_cast<std::size_t>(r)];
    for (Eigen::Index c = 0; c < confusion.cols(); ++c) out += "," + std::to_string(confusion(r, c));
    out += "\n";
  }
  return out;
}

std::string sweep_to_csv(std::span<const SweepRow> rows) {
  std::string out = "jm,metric,features,accuracy_mean,accuracy_std,descriptor_len\n";
  for (const SweepRow& r : rows) {
    out += std::to_string(r.jm) + "," + std::string(to_string(r.metric.kind)) + "," +
           std::string(to_string(r.metric.features)) + "," + format_number(r.accuracy.mean) + "," +
           format_number(r.accuracy.std) + "," + std::to_string(r.descriptor_len) + "\n";
  }
  return out;
}

std::string sweep_to_json(std::span<const SweepRow> rows) {
  ordered_json out = ordered_json::array();
  for (const SweepRow& r : rows) {
    out.push_back({{"jm", r.jm},
                   {"metric", std::string(to_string(r.metric.kind))},
                   {"features", std::string(to_string(r.metric.features))},
                   {"accuracy_mean", r.accuracy.mean},
                   {"accuracy_std", r.accuracy.std},
                   {"descriptor_len", r.descriptor_len}});
  }
  return out.dump(2) + "\n";
}

std::string noise_to_csv(std::span<const NoiseRow> rows) {
  std::string out = "sigma_deg,accuracy_mean,accuracy_std\n";
  for (const NoiseRow& r : rows) {
    out += format_number(r.sigma_deg) + "," + format_number(r.accuracy.mean) + "," + format_number(r.accuracy.std) + "\n";
  }
  return out;
}

std::string noise_to_json(std::span<const NoiseRow> rows) {
  ordered_json out = ordered_json::array();
  for (const NoiseRow& r : rows) {
    out.push_back({{"sigma_deg", r.sigma_deg}, {"accuracy_mean", r.accuracy.mean}, {"accuracy_std", r.accuracy.std}});
  }
  return out.dump(2) + "\n";
}

}  // namespace actcode
