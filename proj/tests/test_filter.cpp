#include <gtest/gtest.h>

#include <numbers>

#include "actcode/filter.hpp"
#include "generators.hpp"
#include "oracles.hpp"

namespace actcode {
namespace {

std::vector<double> sine(double f, double fs, std::size_t n, double amp = 1.0) {
  std::vector<double> x(n);
  for (std::size_t t = 0; t < n; ++t) x[t] = amp * std::sin(2 * std::numbers::pi * f * static_cast<double>(t) / fs);
  return x;
}

TEST(Butterworth, MagnitudeMatchesAnalyticResponse) {
  for (int order = 1; order <= 6; ++order) {
    const ButterworthLowPass lp(10.0, 120.0, order);
    EXPECT_EQ(lp.sections().size(), static_cast<std::size_t>((order + 1) / 2));
    for (double f : {0.0, 0.5, 1.0, 5.0, 9.0, 10.0, 11.0, 20.0, 35.0, 50.0, 59.0}) {
      EXPECT_NEAR(lp.magnitude(f), oracle::butterworth_magnitude(f, 10.0, 120.0, order), 1e-9)
          << "order " << order << " f " << f;
    }
    EXPECT_NEAR(lp.magnitude(10.0), std::sqrt(0.5), 1e-9);
  }
}

TEST(Butterworth, SectionsHaveUnitDcGain) {
  const ButterworthLowPass lp(7.0, 100.0, 5);
  for (const auto& s : lp.sections()) EXPECT_NEAR((s.b0 + s.b1 + s.b2) / (1 + s.a1 + s.a2), 1.0, 1e-12);
}

TEST(Butterworth, ConstantPassesUnchanged) {
  const ButterworthLowPass lp(10.0, 120.0, 2);
  const std::vector<double> x(300, 42.5);
  for (const auto& y : {lp.filter(x), lp.filtfilt(x)}) {
    ASSERT_EQ(y.size(), x.size());
    for (double v : y) EXPECT_NEAR(v, 42.5, 1e-9);
  }
}

TEST(Butterworth, PassbandPreservedStopbandRemoved) {
  const ButterworthLowPass lp(10.0, 120.0, 2);
  const std::size_t n = 2400;
  const auto low = lp.filtfilt(sine(1.0, 120.0, n));
  const auto high = lp.filtfilt(sine(50.0, 120.0, n));
  // Measure away from the edges.
  EXPECT_NEAR(oracle::sinusoid_amplitude(low, 1.0, 120.0, 240, n - 240), 1.0, 0.01);
  EXPECT_LE(oracle::sinusoid_amplitude(high, 50.0, 120.0, 240, n - 240), 0.01);
}

TEST(Butterworth, ZeroPhaseHasNoLag) {
  const ButterworthLowPass lp(10.0, 120.0, 2);
  const std::size_t n = 1200;
  const auto x = sine(2.0, 120.0, n);
  const auto y = lp.filtfilt(x);
  for (std::size_t t = 200; t < n - 200; ++t) EXPECT_NEAR(y[t], x[t] * std::pow(lp.magnitude(2.0), 2), 2e-3);
}

TEST(Butterworth, Linear) {
  gen::Engine rng(3);
  const ButterworthLowPass lp(8.0, 100.0, 3);
  std::vector<double> a(200), b(200), s(200);
  for (std::size_t t = 0; t < a.size(); ++t) {
    a[t] = gen::uniform(rng, -5, 5);
    b[t] = gen::uniform(rng, -5, 5);
    s[t] = 2.0 * a[t] - 3.0 * b[t];
  }
  const auto fa = lp.filtfilt(a), fb = lp.filtfilt(b), fs = lp.filtfilt(s);
  for (std::size_t t = 0; t < a.size(); ++t) EXPECT_NEAR(fs[t], 2.0 * fa[t] - 3.0 * fb[t], 1e-9);
}

TEST(Butterworth, ShortSignals) {
  const ButterworthLowPass lp(10.0, 120.0, 2);
  EXPECT_EQ(lp.padding(10), 9u);
  EXPECT_EQ(lp.padding(1000), 24u);
  const std::vector<double> two{1.0, 3.0};
  EXPECT_EQ(lp.filtfilt(two).size(), 2u);
}

TEST(Butterworth, RejectsBadDesigns) {
  EXPECT_THROW(ButterworthLowPass(60.0, 120.0, 2), std::invalid_argument);
  EXPECT_THROW(ButterworthLowPass(0.0, 120.0, 2), std::invalid_argument);
  EXPECT_THROW(ButterworthLowPass(10.0, 120.0, 0), std::invalid_argument);
  EXPECT_THROW((FilterSpec{70.0, 2, true}.validate(120.0)), std::invalid_argument);
  EXPECT_NO_THROW((FilterSpec{}.validate(120.0)));
}

TEST(ButterworthFilter, FiltersEveryColumnIndependently) {
  gen::Engine rng(4);
  const auto act = gen::action(rng, 4, 200);
  const FilterSpec spec{};
  const auto out = butterworth_filter(act, spec);
  EXPECT_EQ(out.action_id(), act.action_id());
  EXPECT_EQ(out.frame_rate(), act.frame_rate());
  const ButterworthLowPass lp(spec.cutoff_hz, act.frame_rate(), spec.order);
  for (Eigen::Index j = 0; j < 4; ++j) {
    const auto expect = lp.filtfilt(oracle::column(act.samples(), j));
    for (Eigen::Index t = 0; t < 200; ++t) EXPECT_EQ(out.samples()(t, j), expect[static_cast<std::size_t>(t)]);
  }
  const auto causal = butterworth_filter(act, FilterSpec{10.0, 2, false});
  const auto expect = lp.filter(oracle::column(act.samples(), 0));
  for (Eigen::Index t = 0; t < 200; ++t) EXPECT_EQ(causal.samples()(t, 0), expect[static_cast<std::size_t>(t)]);
  EXPECT_THROW(butterworth_filter(act, FilterSpec{60.0, 2, true}), std::invalid_argument);
}

}  // namespace
}  // namespace actcode
