#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>

namespace hkoebe {

/// Which way a measured quantity must sit relative to a bound.
enum class BoundDirection { AtLeast, AtMost, Equal };

/// A named bound value with its inputs and, optionally, a measurement checked
/// against it. `pass` is set exactly when `measured` is.
struct BoundReport {
  std::string name;
  std::map<std::string, double> inputs;
  double value = 0.0;
  std::optional<double> measured;
  std::optional<bool> pass;
  std::optional<std::complex<double>> witness;

  /// Attach a measurement and decide pass/fail against `value` within `tol`.
  BoundReport& compare(double measured_value, BoundDirection dir, double tol) {
    measured = measured_value;
    switch (dir) {
      case BoundDirection::AtLeast: pass = measured_value >= value - tol; break;
      case BoundDirection::AtMost: pass = measured_value <= value + tol; break;
      case BoundDirection::Equal: pass = std::abs(measured_value - value) <= tol; break;
    }
    return *this;
  }
};

}  // namespace hkoebe
