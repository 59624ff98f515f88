#include "cli.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>

#include <CLI11.hpp>
#include <json.hpp>

#include "actcode/dataset.hpp"
#include "actcode/error.hpp"
#include "actcode/eval.hpp"
#include "actcode/report_io.hpp"
#include "actcode/synthetic.hpp"

namespace actcode::cli {

namespace fs = std::filesystem;

namespace {

struct PipelineOptions {
  std::string manifest;
  std::size_t jm = 20;
  double filter_cutoff = 10.0;
  int filter_order = 2;
  bool no_filter = false;
  std::string out;
  std::string format = "json";
};

struct MetricOptions {
  std::string metric = "csm";
  std::string features = "full";
};

struct PlanOptions {
  std::size_t folds = 10;
  std::uint64_t seed = 0;
  std::vector<std::string> train_subjects;
};

void add_pipeline(CLI::App* cmd, PipelineOptions& o, bool list_jm = false) {
  cmd->add_option("--manifest", o.manifest, "Dataset manifest (JSON)")->required();
  if (!list_jm) cmd->add_option("--jm", o.jm, "Number of most informative joints")->check(CLI::PositiveNumber);
  cmd->add_option("--filter-cutoff", o.filter_cutoff, "Low-pass cutoff in Hz")->check(CLI::PositiveNumber);
  cmd->add_option("--filter-order", o.filter_order, "Butterworth order")->check(CLI::PositiveNumber);
  cmd->add_flag("--no-filter", o.no_filter, "Skip low-pass filtering");
  cmd->add_option("--out", o.out, "Output path");
  cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
}

void add_metric(CLI::App* cmd, MetricOptions& o) {
  cmd->add_option("--metric", o.metric, "csm | euclidean | manhattan")
      ->check(CLI::IsMember({"csm", "euclidean", "manhattan"}));
  cmd->add_option("--features", o.features, "var | var-vel | full")->check(CLI::IsMember({"var", "var-vel", "full"}));
}

std::size_t threads_from_env(std::ostream& err) {
  const char* value = std::getenv("CODE_THREADS");
  if (value == nullptr || *value == '\0') return 0;
  try {
    const long n = std::stol(value);
    if (n > 0) return static_cast<std::size_t>(n);
  } catch (const std::exception&) {
  }
  err << "warning: ignoring invalid CODE_THREADS=\"" << value << "\"\n";
  return 0;
}

PipelineConfig pipeline_config(const PipelineOptions& o, std::size_t threads) {
  PipelineConfig cfg;
  cfg.jm = o.jm;
  cfg.threads = threads;
  if (o.no_filter) {
    cfg.filter.reset();
  } else {
    cfg.filter = FilterSpec{o.filter_cutoff, o.filter_order, true};
  }
  return cfg;
}

MetricSpec metric_spec(const MetricOptions& o) {
  MetricSpec spec{parse_metric_kind(o.metric), parse_feature_set(o.features)};
  spec.validate();
  return spec;
}

void write_text(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(path.parent_path(), ec);
    if (ec) throw InputError(path.parent_path().string() + ": " + ec.message());
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw InputError(path.string() + ": cannot open for writing");
  f << text;
  if (!f) throw InputError(path.string() + ": write failed");
}

// Writes to --out when given, stdout otherwise.
void emit(const std::string& out_path, const std::string& text, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
  } else {
    write_text(out_path, text);
  }
}

fs::path sibling(const fs::path& path, const std::string& suffix) {
  fs::path p = path;
  p.replace_extension();
  p += suffix;
  return p;
}

void print_warnings(const SplitPlan& plan, std::ostream& err) {
  for (const auto& w : plan.warnings) err << "warning: " << w << "\n";
}

std::string report_csv(const EvalReport& r) {
  std::string s = "metric,mean,std\n";
  auto row = [&](const char* name, const MeanStd& m) {
    s += std::string(name) + "," + format_number(m.mean) + "," + format_number(m.std) + "\n";
  };
  row("accuracy", r.accuracy);
  row("macro_precision", r.macro_precision);
  row("macro_recall", r.macro_recall);
  row("descriptor_time_s", r.descriptor_time_s);
  row("classify_time_s", r.classify_time_s);
  return s;
}

void emit_report(const EvalReport& report, const PipelineOptions& o, std::ostream& out) {
  emit(o.out, o.format == "csv" ? report_csv(report) : report_to_json(report), out);
  if (!o.out.empty()) write_text(sibling(o.out, ".confusion.csv"), confusion_to_csv(report.classes, report.confusion));
  out << "accuracy " << format_number(report.accuracy.mean) << " +- " << format_number(report.accuracy.std)
      << ", macro precision " << format_number(report.macro_precision.mean) << ", macro recall "
      << format_number(report.macro_recall.mean) << "\n";
}

SplitPlan build_plan(std::span<const ActionMatrix> dataset, const PlanOptions& p) {
  if (!p.train_subjects.empty()) return cross_subject(dataset, p.train_subjects);
  return stratified_kfold(dataset, p.folds, p.seed);
}

// ---------------------------------------------------------------------------

int cmd_describe(const PipelineOptions& o, std::size_t threads, std::ostream& out) {
  if (o.out.empty()) throw InputError("describe needs --out DIR");
  const auto manifest = read_manifest(o.manifest);
  const auto dataset = load_dataset(o.manifest);
  const PipelineConfig cfg = pipeline_config(o, threads);

  const auto start = std::chrono::steady_clock::now();
  const auto descriptors = describe_all(dataset, cfg);
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  const fs::path dir = o.out;
  nlohmann::ordered_json summary;
  summary["dataset_name"] = manifest.dataset_name;
  summary["jm"] = cfg.jm;
  summary["action_count"] = dataset.size();
  summary["stacked_length"] = stacked_size(cfg.jm);
  summary["filter"] = cfg.filter ? nlohmann::ordered_json{{"cutoff_hz", cfg.filter->cutoff_hz},
                                                          {"order", cfg.filter->order},
                                                          {"zero_phase", cfg.filter->zero_phase}}
                                 : nlohmann::ordered_json(nullptr);
  nlohmann::ordered_json actions = nlohmann::ordered_json::array();

  if (o.format == "csv") {
    std::string csv = "action_id,jm";
    for (std::size_t k = 0; k < stacked_size(cfg.jm); ++k) csv += ",s" + std::to_string(k);
    csv += "\n";
    for (std::size_t i = 0; i < dataset.size(); ++i) {
      csv += dataset[i].action_id() + "," + std::to_string(cfg.jm);
      for (double v : stack_descriptor(descriptors[i])) csv += "," + format_number(v);
      csv += "\n";
    }
    write_text(dir / "descriptors.csv", csv);
  }
  for (std::size_t i = 0; i < dataset.size(); ++i) {
    if (o.format == "json") {
      write_text(dir / (dataset[i].action_id() + ".json"), descriptor_to_json(descriptors[i], dataset[i].action_id()));
    }
    actions.push_back({{"action_id", dataset[i].action_id()}, {"stacked_length", stack_descriptor(descriptors[i]).size()}});
  }
  summary["actions"] = std::move(actions);
  write_text(dir / "summary.json", summary.dump(2) + "\n");

  out << "described " << dataset.size() << " actions (jm " << cfg.jm << ", stacked length " << stacked_size(cfg.jm)
      << ") in " << format_number(elapsed) << " s\n";
  return kOk;
}

int cmd_crossval(const PipelineOptions& o, const MetricOptions& m, const PlanOptions& p, std::size_t threads,
                 std::ostream& out, std::ostream& err) {
  const auto dataset = load_dataset(o.manifest);
  const SplitPlan plan = stratified_kfold(dataset, p.folds, p.seed);
  print_warnings(plan, err);
  emit_report(evaluate(dataset, pipeline_config(o, threads), metric_spec(m), plan), o, out);
  return kOk;
}

int cmd_cross_subject(const PipelineOptions& o, const MetricOptions& m, const PlanOptions& p, std::size_t threads,
                      std::ostream& out) {
  const auto dataset = load_dataset(o.manifest);
  const SplitPlan plan = cross_subject(dataset, p.train_subjects);
  emit_report(evaluate(dataset, pipeline_config(o, threads), metric_spec(m), plan), o, out);
  return kOk;
}

int cmd_sweep(const PipelineOptions& o, const std::vector<std::size_t>& jm_list,
              const std::vector<std::string>& metrics, const std::vector<std::string>& features, const PlanOptions& p,
              std::size_t threads, std::ostream& out, std::ostream& err) {
  std::vector<MetricSpec> specs;
  for (const auto& mk : metrics) {
    const MetricKind kind = parse_metric_kind(mk);
    if (kind == MetricKind::Csm) {
      specs.push_back({kind, FeatureSet::Full});
      continue;
    }
    for (const auto& f : features) specs.push_back({kind, parse_feature_set(f)});
  }
  const auto dataset = load_dataset(o.manifest);
  const SplitPlan plan = build_plan(dataset, p);
  print_warnings(plan, err);
  const auto rows = mij_sweep(dataset, jm_list, specs, pipeline_config(o, threads), plan);
  emit(o.out, o.format == "json" ? sweep_to_json(rows) : sweep_to_csv(rows), out);
  return kOk;
}

int cmd_noise(const PipelineOptions& o, const MetricOptions& m, const PlanOptions& p,
              const std::vector<double>& sigmas, bool corrupt_training, std::size_t threads, std::ostream& out,
              std::ostream& err) {
  const auto dataset = load_dataset(o.manifest);
  const SplitPlan plan = build_plan(dataset, p);
  print_warnings(plan, err);
  const auto rows = noise_sweep(dataset, sigmas, pipeline_config(o, threads), metric_spec(m), plan, p.seed,
                                NoiseOptions{corrupt_training});
  emit(o.out, o.format == "json" ? noise_to_json(rows) : noise_to_csv(rows), out);
  return kOk;
}

int cmd_gen_synth(const SyntheticConfig& cfg, const std::string& out_dir, std::ostream& out) {
  const SyntheticDataset ds = generate_synthetic(cfg);
  const fs::path manifest = write_dataset(out_dir, ds.manifest.dataset_name, ds.actions);
  out << "wrote " << ds.actions.size() << " actions and " << manifest.string() << "\n";
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Coordination-based action descriptors, similarity and 1-NN experiments", "actcode"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  PipelineOptions pipe;
  MetricOptions metric;
  PlanOptions plan;

  auto* describe_cmd = app.add_subcommand("describe", "Compute one descriptor per action");
  add_pipeline(describe_cmd, pipe);

  auto* crossval_cmd = app.add_subcommand("crossval", "Stratified k-fold 1-NN evaluation");
  add_pipeline(crossval_cmd, pipe);
  add_metric(crossval_cmd, metric);
  crossval_cmd->add_option("--folds", plan.folds, "Number of folds")->check(CLI::Range(2, 1 << 30));
  crossval_cmd->add_option("--seed", plan.seed, "Fold shuffling seed")->required();

  auto* xsub_cmd = app.add_subcommand("cross-subject", "Train on named subjects, test on the rest");
  add_pipeline(xsub_cmd, pipe);
  add_metric(xsub_cmd, metric);
  xsub_cmd->add_option("--train-subjects", plan.train_subjects, "Comma-separated subject ids")
      ->delimiter(',')
      ->required();

  std::vector<std::size_t> jm_list{5, 10, 20};
  std::vector<std::string> metric_list{"csm", "euclidean", "manhattan"};
  std::vector<std::string> feature_list{"var", "var-vel", "full"};
  auto* sweep_cmd = app.add_subcommand("sweep", "Accuracy over MIJ counts, metrics and feature sets");
  add_pipeline(sweep_cmd, pipe, true);
  sweep_cmd->add_option("--jm", jm_list, "Comma-separated MIJ counts")->delimiter(',');
  sweep_cmd->add_option("--metric", metric_list, "Comma-separated metrics")
      ->delimiter(',')
      ->check(CLI::IsMember({"csm", "euclidean", "manhattan"}));
  sweep_cmd->add_option("--features", feature_list, "Comma-separated feature sets for the baselines")
      ->delimiter(',')
      ->check(CLI::IsMember({"var", "var-vel", "full"}));
  sweep_cmd->add_option("--folds", plan.folds, "Number of folds")->check(CLI::Range(2, 1 << 30));
  sweep_cmd->add_option("--seed", plan.seed, "Fold shuffling seed")->required();
  sweep_cmd->add_option("--train-subjects", plan.train_subjects, "Use a cross-subject split instead of k-fold")
      ->delimiter(',');

  std::vector<double> sigmas{0, 1, 2, 3, 4, 5};
  bool corrupt_training = false;
  auto* noise_cmd = app.add_subcommand("noise", "Accuracy under additive Gaussian noise on raw angles");
  add_pipeline(noise_cmd, pipe);
  add_metric(noise_cmd, metric);
  noise_cmd->add_option("--sigmas", sigmas, "Comma-separated noise std-devs in degrees")->delimiter(',');
  noise_cmd->add_option("--folds", plan.folds, "Number of folds")->check(CLI::Range(2, 1 << 30));
  noise_cmd->add_option("--seed", plan.seed, "Fold and noise seed")->required();
  noise_cmd->add_option("--train-subjects", plan.train_subjects, "Use a cross-subject split instead of k-fold")
      ->delimiter(',');
  noise_cmd->add_flag("--corrupt-training", corrupt_training, "Add noise to training items too");

  SyntheticConfig synth;
  std::string synth_out;
  auto* gen_cmd = app.add_subcommand("gen-synth", "Write a synthetic coordinated-motion dataset");
  gen_cmd->add_option("--out", synth_out, "Output directory")->required();
  gen_cmd->add_option("--seed", synth.seed, "Generator seed")->required();
  gen_cmd->add_option("--classes", synth.classes)->check(CLI::PositiveNumber);
  gen_cmd->add_option("--per-class", synth.per_class, "Repetitions per class and subject")->check(CLI::PositiveNumber);
  gen_cmd->add_option("--subjects", synth.subjects)->check(CLI::PositiveNumber);
  gen_cmd->add_option("--joints", synth.joints)->check(CLI::Range(4, 1 << 20));
  gen_cmd->add_option("--frames", synth.frames)->check(CLI::Range(2, 1 << 30));
  gen_cmd->add_option("--frame-rate", synth.frame_rate)->check(CLI::PositiveNumber);
  gen_cmd->add_option("--amplitude", synth.amplitude_deg, "Peak amplitude in degrees")->check(CLI::PositiveNumber);
  gen_cmd->add_option("--active-joints", synth.active_joints, "Active joints per class (0 = J/4)");
  gen_cmd->add_option("--family-size", synth.family_size, "Classes sharing one active-joint set");
  gen_cmd->add_option("--noise", synth.noise_deg, "Per-sample noise in degrees")->check(CLI::NonNegativeNumber);
  gen_cmd->add_flag("--disjoint", synth.disjoint_classes, "Non-overlapping active joints per class");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    const std::size_t threads = threads_from_env(err);
    if (describe_cmd->parsed()) return cmd_describe(pipe, threads, out);
    if (crossval_cmd->parsed()) return cmd_crossval(pipe, metric, plan, threads, out, err);
    if (xsub_cmd->parsed()) return cmd_cross_subject(pipe, metric, plan, threads, out);
    if (sweep_cmd->parsed()) return cmd_sweep(pipe, jm_list, metric_list, feature_list, plan, threads, out, err);
    if (noise_cmd->parsed()) return cmd_noise(pipe, metric, plan, sigmas, corrupt_training, threads, out, err);
    if (gen_cmd->parsed()) return cmd_gen_synth(synth, synth_out, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternalError;
  }
  return kInternalError;
}

}  // namespace actcode::cli
