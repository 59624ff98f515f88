#include <gtest/gtest.h>

#include <set>

#include "actcode/descriptor.hpp"
#include "actcode/similarity.hpp"
#include "actcode/synthetic.hpp"
#include "oracles.hpp"

namespace actcode {
namespace {

SyntheticConfig small_config(std::uint64_t seed = 3) {
  SyntheticConfig c;
  c.classes = 3;
  c.per_class = 2;
  c.subjects = 2;
  c.joints = 12;
  c.frames = 120;
  c.seed = seed;
  return c;
}

TEST(Synthetic, CountsNamesAndOrder) {
  const auto d = generate_synthetic(small_config());
  ASSERT_EQ(d.actions.size(), 12u);
  ASSERT_EQ(d.manifest.entries.size(), 12u);
  ASSERT_EQ(d.templates.size(), 3u);
  EXPECT_EQ(d.actions[0].action_id(), "c00_s00_r00");
  EXPECT_EQ(d.actions[1].action_id(), "c00_s00_r01");
  EXPECT_EQ(d.actions[2].action_id(), "c00_s01_r00");
  EXPECT_EQ(d.actions[11].action_id(), "c02_s01_r01");
  EXPECT_EQ(d.actions[11].class_label(), "class_02");
  EXPECT_EQ(d.actions[11].subject_id(), "subject_01");
  std::set<std::string> ids;
  for (std::size_t i = 0; i < d.actions.size(); ++i) {
    const auto& a = d.actions[i];
    EXPECT_EQ(a.frames(), 120u);
    EXPECT_EQ(a.joints(), 12u);
    EXPECT_EQ(a.frame_rate(), 120.0);
    EXPECT_EQ(d.manifest.entries[i].action_id, a.action_id());
    EXPECT_EQ(d.manifest.entries[i].class_label, a.class_label());
    ids.insert(a.action_id());
  }
  EXPECT_EQ(ids.size(), 12u);
}

TEST(Synthetic, PureFunctionOfConfig) {
  const auto a = generate_synthetic(small_config(9));
  const auto b = generate_synthetic(small_config(9));
  EXPECT_EQ(a.actions, b.actions);
  EXPECT_EQ(a.manifest, b.manifest);
  const auto c = generate_synthetic(small_config(10));
  EXPECT_NE(a.actions, c.actions);
}

TEST(Synthetic, InPhaseActiveJointsAreStronglyCorrelated) {
  for (std::uint64_t seed : {1u, 2u, 3u, 4u, 5u}) {
    SyntheticConfig c = small_config(seed);
    c.classes = 1;
    c.active_joints = 2;
    const auto d = generate_synthetic(c);
    const auto& act = d.templates[0].active;
    ASSERT_EQ(act.size(), 2u);
    for (const auto& a : d.actions) {
      const double r = oracle::correlation(oracle::column(a.samples(), static_cast<Eigen::Index>(act[0].joint)),
                                           oracle::column(a.samples(), static_cast<Eigen::Index>(act[1].joint)));
      if (act[0].sign == act[1].sign) {
        EXPECT_GE(r, 0.9) << a.action_id();
      } else {
        EXPECT_LE(r, -0.9) << a.action_id();
      }
    }
  }
}

TEST(Synthetic, ActiveJointsDominateVariance) {
  const auto d = generate_synthetic(small_config());
  for (std::size_t i = 0; i < d.actions.size(); ++i) {
    const auto& tmpl = d.templates[i / 4];
    const auto var = joint_variances(d.actions[i]);
    std::set<JointIndex> active;
    for (const auto& j : tmpl.active) active.insert(j.joint);
    const auto ranking = sort_variances(var);
    const std::set<JointIndex> top(ranking.sorted_indices.begin(),
                                   ranking.sorted_indices.begin() + static_cast<std::ptrdiff_t>(active.size()));
    EXPECT_EQ(top, active);
  }
}

// Every action's nearest neighbour under CSM (all others as references) is of
// its own class, enumerated exhaustively.
TEST(Synthetic, DisjointClassesAreSeparatedByCsm) {
  SyntheticConfig c;
  c.classes = 2;
  c.disjoint_classes = true;
  c.per_class = 5;
  c.subjects = 2;
  c.seed = 11;
  const auto d = generate_synthetic(c);
  std::vector<CodeDescriptor> desc;
  for (const auto& a : d.actions) desc.push_back(compute_descriptor(a, 5));
  for (std::size_t i = 0; i < desc.size(); ++i) {
    for (std::size_t j = 0; j < desc.size(); ++j) {
      if (i == j) continue;
      const bool same = d.actions[i].class_label() == d.actions[j].class_label();
      const double s = csm(desc[i], desc[j]);
      if (same) {
        EXPECT_GT(s, 0.0);
      } else {
        EXPECT_EQ(s, 0.0);
      }
    }
  }
}

TEST(Synthetic, RejectsImpossibleConfigs) {
  SyntheticConfig c = small_config();
  c.disjoint_classes = true;
  c.active_joints = 5;
  EXPECT_THROW(generate_synthetic(c), std::invalid_argument);
  c = small_config();
  c.joints = 3;
  EXPECT_THROW(generate_synthetic(c), std::invalid_argument);
  c = small_config();
  c.classes = 0;
  EXPECT_THROW(generate_synthetic(c), std::invalid_argument);
}

}  // namespace
}  // namespace actcode
