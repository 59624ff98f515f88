#include "actcode/filter.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace actcode {

namespace {

std::vector<double> run_sections(const std::vector<Biquad>& sections, std::vector<double> x) {
  if (x.empty()) return x;
  for (const Biquad& s : sections) {
    // Steady state for a constant input x[0]; sections have unit DC gain.
    double z1 = (1.0 - s.b0) * x.front();
    double z2 = (s.b2 - s.a2) * x.front();
    for (double& sample : x) {
      const double in = sample;
      const double out = s.b0 * in + z1;
      z1 = s.b1 * in - s.a1 * out + z2;
      z2 = s.b2 * in - s.a2 * out;
      sample = out;
    }
  }
  return x;
}

}  // namespace

void FilterSpec::validate(double frame_rate) const {
  if (order < 1) throw std::invalid_argument("filter order must be >= 1");
  if (!(cutoff_hz > 0.0) || !(cutoff_hz < frame_rate / 2.0)) {
    throw std::invalid_argument("filter cutoff " + std::to_string(cutoff_hz) +
                                " Hz must lie strictly between 0 and the Nyquist frequency " +
                                std::to_string(frame_rate / 2.0) + " Hz");
  }
}

ButterworthLowPass::ButterworthLowPass(double cutoff_hz, double sample_rate_hz, int order)
    : order_(order), cutoff_hz_(cutoff_hz), sample_rate_hz_(sample_rate_hz) {
  FilterSpec{cutoff_hz, order, false}.validate(sample_rate_hz);

  const double fs2 = 2.0 * sample_rate_hz;
  const double warped = fs2 * std::tan(std::numbers::pi * cutoff_hz / sample_rate_hz);
  const int n = order;

  // Conjugate pole pairs from the upper half of the analog prototype.
  for (int k = 0; k < n / 2; ++k) {
    const double theta = std::numbers::pi * (2.0 * k + n + 1.0) / (2.0 * n);
    const std::complex<double> analog = warped * std::polar(1.0, theta);
    const std::complex<double> z = (fs2 + analog) / (fs2 - analog);
    const double a1 = -2.0 * z.real();
    const double a2 = std::norm(z);
    const double g = (1.0 + a1 + a2) / 4.0;
    sections_.push_back({g, 2.0 * g, g, a1, a2});
  }
  if (n % 2 == 1) {
    const double zr = (fs2 - warped) / (fs2 + warped);
    const double g = (1.0 - zr) / 2.0;
    sections_.push_back({g, g, 0.0, -zr, 0.0});
  }
}

std::vector<double> ButterworthLowPass::filter(std::span<const double> x) const {
  return run_sections(sections_, std::vector<double>(x.begin(), x.end()));
}

std::size_t ButterworthLowPass::padding(std::size_t n) const noexcept {
  if (n < 2) return 0;
  const auto settle =
      static_cast<std::size_t>(order_) * static_cast<std::size_t>(std::ceil(sample_rate_hz_ / cutoff_hz_));
  return std::min(settle, n - 1);
}

std::vector<double> ButterworthLowPass::filtfilt(std::span<const double> x) const {
  const std::size_t n = x.size();
  if (n == 0) return {};
  const std::size_t pad = padding(n);

  std::vector<double> ext;
  ext.reserve(n + 2 * pad);
  for (std::size_t i = pad; i >= 1; --i) ext.push_back(2.0 * x.front() - x[i]);
  ext.insert(ext.end(), x.begin(), x.end());
  for (std::size_t i = 1; i <= pad; ++i) ext.push_back(2.0 * x.back() - x[n - 1 - i]);

  ext = run_sections(sections_, std::move(ext));
  std::reverse(ext.begin(), ext.end());
  ext = run_sections(sections_, std::move(ext));
  std::reverse(ext.begin(), ext.end());

  return {ext.begin() + static_cast<std::ptrdiff_t>(pad), ext.begin() + static_cast<std::ptrdiff_t>(pad + n)};
}

double ButterworthLowPass::magnitude(double frequency_hz) const {
  const std::complex<double> zinv = std::polar(1.0, -2.0 * std::numbers::pi * frequency_hz / sample_rate_hz_);
  std::complex<double> h = 1.0;
  for (const Biquad& s : sections_) {
    h *= (s.b0 + zinv * (s.b1 + zinv * s.b2)) / (1.0 + zinv * (s.a1 + zinv * s.a2));
  }
  return std::abs(h);
}

ActionMatrix butterworth_filter(const ActionMatrix& action, const FilterSpec& spec) {
  spec.validate(action.frame_rate());
  const ButterworthLowPass lp(spec.cutoff_hz, action.frame_rate(), spec.order);
  const auto& x = action.samples();
  Eigen::MatrixXd out(x.rows(), x.cols());
  std::vector<double> column(static_cast<std::size_t>(x.rows()));
  for (Eigen::Index j = 0; j < x.cols(); ++j) {
    Eigen::Map<Eigen::VectorXd>(column.data(), x.rows()) = x.col(j);
    const auto y = spec.zero_phase ? lp.filtfilt(column) : lp.filter(column);
    out.col(j) = Eigen::Map<const Eigen::VectorXd>(y.data(), x.rows());
  }
  return action.with_samples(std::move(out));
}

}  // namespace actcode
