#pragma once

#include <span>
#include <vector>

#include "actcode/action.hpp"

namespace actcode {

struct FilterSpec {
  double cutoff_hz = 10.0;
  int order = 2;
  /// Forward-backward filtering: zero phase lag, squared magnitude response.
  bool zero_phase = true;

  /// Throws std::invalid_argument unless 0 < cutoff < frame_rate / 2 and order >= 1.
  void validate(double frame_rate) const;
};

/// One biquad in direct form II transposed, a0 normalized to 1.
struct Biquad {
  double b0, b1, b2, a1, a2;
};

/// Digital Butterworth low-pass designed through the bilinear transform with
/// frequency pre-warping, as a cascade of second-order sections (an odd
/// order ends with a first-order section stored with b2 = a2 = 0). Every
/// section has unit DC gain.
class ButterworthLowPass {
 public:
  ButterworthLowPass(double cutoff_hz, double sample_rate_hz, int order);

  const std::vector<Biquad>& sections() const noexcept { return sections_; }
  int order() const noexcept { return order_; }

  /// Causal filtering; the state starts at the steady state of x[0].
  std::vector<double> filter(std::span<const double> x) const;

  /// Forward then backward pass over an odd-reflection padded copy; the
  /// padding is trimmed so the output has the same length as x.
  std::vector<double> filtfilt(std::span<const double> x) const;

  /// Samples of odd-reflection padding used by filtfilt for a length-n signal.
  std::size_t padding(std::size_t n) const noexcept;

  /// |H(e^{i 2 pi f / fs})| evaluated from the designed sections.
  double magnitude(double frequency_hz) const;

 private:
  std::vector<Biquad> sections_;
  int order_;
  double cutoff_hz_;
  double sample_rate_hz_;
};

/// Applies the low-pass to every joint column of an action.
ActionMatrix butterworth_filter(const ActionMatrix& action, const FilterSpec& spec);

}  // namespace actcode
