#pragma once

#include "hkoebe/harmonic.hpp"

namespace hkoebe {

/// Partial sums of the Parseval series beyond this magnitude declare the area infinite.
inline constexpr double kAreaDivergenceThreshold = 1e6;

struct AreaEstimate {
  double value = 0.0;
  bool divergent = false;  ///< partial sums crossed kAreaDivergenceThreshold; value is +inf
};

/// Area of f(|z| < r) from the coefficients: pi sum n (|a_n|^2 - |b_n|^2) r^{2n}.
AreaEstimate area_series(const HarmonicMap<double>& map, double r);

/// Area of f(|z| < r) by integrating the Jacobian in polar coordinates:
/// Gauss-Legendre in the radius, trapezoid in the angle.
double area_quadrature(const HarmonicMap<double>& map, double r, int n_rad = 64, int n_ang = 256);

/// z + (k e^{i alpha}/(m+1)) conj(z)^{m+1}: the area minimizer of S_H^0(k, m).
HarmonicMap<double> extremal_map(const DilatationSpec& spec);

}  // namespace hkoebe
