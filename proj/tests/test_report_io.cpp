#include <gtest/gtest.h>

#include <json.hpp>

#include "actcode/error.hpp"
#include "actcode/report_io.hpp"
#include "actcode/synthetic.hpp"
#include "generators.hpp"

namespace actcode {
namespace {

using nlohmann::json;

TEST(DescriptorJson, RoundTripIsExact) {
  gen::Engine rng(1);
  for (int n = 0; n < 50; ++n) {
    const std::size_t joints = gen::uniform_size(rng, 1, 30);
    const auto d = gen::descriptor(rng, joints, gen::uniform_size(rng, 1, joints));
    const auto back = descriptor_from_json(descriptor_to_json(d, "id" + std::to_string(n)));
    EXPECT_EQ(back.action_id, "id" + std::to_string(n));
    EXPECT_EQ(back.descriptor, d);
  }
}

TEST(DescriptorJson, SingleJointHasEmptyCorr) {
  const CodeDescriptor d{{2}, {1.0}, {1.0}, {-1.0}, {}};
  const auto doc = json::parse(descriptor_to_json(d, "a"));
  EXPECT_EQ(doc["jm"], 1);
  EXPECT_TRUE(doc["corr"].is_array());
  EXPECT_TRUE(doc["corr"].empty());
}

TEST(DescriptorJson, RejectsMalformedDocuments) {
  EXPECT_THROW(descriptor_from_json("nope"), InputError);
  EXPECT_THROW(descriptor_from_json(R"({"jm": 1})"), InputError);
  EXPECT_THROW(descriptor_from_json(
                   R"({"action_id": "a", "jm": 2, "mij": [0], "var_norm": [1], "vmax_norm": [1], "vmin_norm": [1], "corr": []})"),
               InputError);
  EXPECT_THROW(descriptor_from_json(
                   R"({"action_id": "a", "jm": 1, "mij": ["x"], "var_norm": [1], "vmax_norm": [1], "vmin_norm": [1], "corr": []})"),
               InputError);
}

TEST(ReportJson, CarriesSummaryFoldsAndConfusion) {
  SyntheticConfig c;
  c.classes = 3;
  c.per_class = 2;
  c.subjects = 2;
  c.joints = 8;
  c.frames = 60;
  const auto data = generate_synthetic(c).actions;
  PipelineConfig cfg;
  cfg.jm = 3;
  const auto plan = stratified_kfold(data, 3, 4);
  const auto rep = evaluate(data, cfg, {}, plan);
  const auto doc = json::parse(report_to_json(rep));
  EXPECT_EQ(doc["schema"], "actcode.eval_report/1");
  EXPECT_EQ(doc["jm"], 3);
  EXPECT_EQ(doc["metric"]["kind"], "csm");
  EXPECT_EQ(doc["metric"]["features"], "full");
  EXPECT_EQ(doc["split"]["kind"], "stratified_kfold");
  EXPECT_EQ(doc["split"]["k"], 3);
  EXPECT_EQ(doc["split"]["seed"], 4);
  EXPECT_EQ(doc["classes"].size(), 3u);
  EXPECT_EQ(doc["accuracy"]["mean"].get<double>(), rep.accuracy.mean);
  EXPECT_EQ(doc["accuracy"]["std"].get<double>(), rep.accuracy.std);
  EXPECT_EQ(doc["folds"].size(), 3u);
  EXPECT_EQ(doc["confusion"].size(), 3u);
  std::int64_t total = 0;
  for (const auto& row : doc["confusion"]) {
    for (const auto& v : row) total += v.get<std::int64_t>();
  }
  EXPECT_EQ(total, 12);

  const auto cs = json::parse(report_to_json(evaluate(data, cfg, {}, cross_subject(data, std::vector<std::string>{"subject_00"}))));
  EXPECT_EQ(cs["split"]["kind"], "cross_subject");
  EXPECT_EQ(cs["split"]["train_subjects"], json::array({"subject_00"}));
}

TEST(ReportCsv, ConfusionLayout) {
  ConfusionMatrix m(2, 2);
  m << 3, 1, 0, 4;
  const std::vector<std::string> classes{"run", "walk"};
  EXPECT_EQ(confusion_to_csv(classes, m), "true\\predicted,run,walk\nrun,3,1\nwalk,0,4\n");
}

TEST(ReportCsv, SweepAndNoise) {
  const std::vector<SweepRow> sweep{{5, {MetricKind::Euclidean, FeatureSet::VarianceOnly}, {0.5, 0.25}, 30}};
  EXPECT_EQ(sweep_to_csv(sweep), "jm,metric,features,accuracy_mean,accuracy_std,descriptor_len\n5,euclidean,var,0.5,0.25,30\n");
  const auto sj = json::parse(sweep_to_json(sweep));
  EXPECT_EQ(sj[0]["descriptor_len"], 30);
  const std::vector<NoiseRow> noise{{0.0, {1.0, 0.0}}, {2.5, {0.9, 0.1}}};
  EXPECT_EQ(noise_to_csv(noise), "sigma_deg,accuracy_mean,accuracy_std\n0,1,0\n2.5,0.9,0.1\n");
  EXPECT_EQ(json::parse(noise_to_json(noise))[1]["sigma_deg"], 2.5);
}

TEST(FormatNumber, ShortestRoundTrip) {
  EXPECT_EQ(format_number(0.1), "0.1");
  EXPECT_EQ(format_number(1.0), "1");
  gen::Engine rng(2);
  for (int n = 0; n < 1000; ++n) {
    const double x = gen::uniform(rng, -1e6, 1e6);
    EXPECT_EQ(std::stod(format_number(x)), x);
  }
}

}  // namespace
}  // namespace actcode
