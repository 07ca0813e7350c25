#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "hkoebe/closed_form.hpp"
#include "hkoebe/harmonic.hpp"
#include "hkoebe/series.hpp"

namespace hkoebe {

/// Default truncation order of shear outputs.
inline constexpr Eigen::Index kShearOrder = 128;

/// K(z) = z/(1-z)^2 = sum n z^n, truncated at order N.
template <typename Scalar = double>
PowerSeries<Scalar> koebe_series(Eigen::Index order) {
  if (order < 1) throw DomainError("Koebe series needs order >= 1");
  typename PowerSeries<Scalar>::Coeffs c(order + 1);
  for (Eigen::Index n = 0; n <= order; ++n) c[n] = Scalar(n);
  return PowerSeries<Scalar>(std::move(c));
}

/// w(z) = k e^{i alpha} z^m as a series of order N (requires integral m <= N).
template <typename Scalar = double>
PowerSeries<Scalar> monomial_dilatation(const DilatationSpec& spec, Eigen::Index order) {
  if (!spec.integral_order()) throw InvalidSpec("monomial dilatation needs an integral exponent m");
  const auto m = static_cast<Eigen::Index>(spec.m);
  if (order < m) throw InvalidSpec("series order must be at least the dilatation exponent m");
  const std::complex<Scalar> c = std::polar(Scalar(spec.k), Scalar(spec.alpha));
  return PowerSeries<Scalar>::monomial(c, m, order);
}

/// Shearing construction: given the normalized conformal part phi = h - g and
/// an analytic dilatation w, returns f = h + conj(g) with
///   h' = phi' / (1 - w),  g' = w h',  h(0) = g(0) = 0,
/// truncated at `order`. The result has h - g = phi and g'/h' = w as jets.
template <typename Scalar>
HarmonicMap<Scalar> shear(const PowerSeries<Scalar>& phi, const PowerSeries<Scalar>& w,
                          Eigen::Index order = kShearOrder) {
  if (order < 1) throw DomainError("shear output order must be >= 1");
  const Scalar tol(kNormalizationTolerance);
  if (std::abs(phi[0]) > tol || std::abs(phi[1] - std::complex<Scalar>(1)) > tol) {
    throw NormalizationError("shear needs phi(0) = 0 and phi'(0) = 1");
  }
  if (!(std::abs(w[0]) < Scalar(1))) throw DomainError("shear needs |w(0)| < 1");

  const auto dphi = derivative(phi.resized(order));
  const auto one_minus_w = PowerSeries<Scalar>::monomial(std::complex<Scalar>(1), 0, order - 1) - w.resized(order - 1);
  const auto dh = divide(dphi, one_minus_w, order - 1);
  const auto dg = multiply(w.resized(order - 1), dh, order - 1);
  return HarmonicMap<Scalar>(antiderivative(dh), antiderivative(dg));
}

/// shear(K, k e^{i alpha} z^m) at the given order.
template <typename Scalar = double>
HarmonicMap<Scalar> sheared_koebe(const DilatationSpec& spec, Eigen::Index order = kShearOrder) {
  return shear(koebe_series<Scalar>(order), monomial_dilatation<Scalar>(spec, order), order);
}

/// Points z = r e^{i theta} on a 10 x 10 polar grid with r in [0.08, 0.8].
inline std::vector<std::complex<double>> closed_form_check_grid() {
  std::vector<std::complex<double>> pts;
  for (int i = 1; i <= 10; ++i) {
    const double r = 0.08 * i;
    for (int j = 0; j < 10; ++j) pts.push_back(std::polar(r, 2.0 * std::numbers::pi * (j + 0.5) / 10.0));
  }
  return pts;
}

/// Largest |closed form - shear series| over `points`, where the series oracle
/// is shear(K, z^m) of the given order.
inline double closed_form_series_deviation(const ClosedFormId& id, const std::vector<std::complex<double>>& points,
                                           ArctanBranch branch = ArctanBranch::Principal,
                                           Eigen::Index order = kShearOrder) {
  const HarmonicMap<double> oracle = id.kind == ClosedFormKind::AnalyticKoebe
                                         ? HarmonicMap<double>(koebe_series(order), Series::zero(order))
                                         : sheared_koebe(DilatationSpec(1.0, id.m), order);
  double worst = 0.0;
  for (auto z : points) worst = std::max(worst, std::abs(eval_closed_form(id, z, branch) - eval_map(oracle, z)));
  return worst;
}

/// Picks the arctan continuation that reproduces the series oracle to 1e-8 on
/// the check grid: the principal branch when it is continuous there, else the
/// radial continuation. Throws DomainError if neither agrees.
inline ArctanBranch select_arctan_branch(const ClosedFormId& id) {
  const auto grid = closed_form_check_grid();
  if (closed_form_series_deviation(id, grid, ArctanBranch::Principal) <= 1e-8) return ArctanBranch::Principal;
  if (closed_form_series_deviation(id, grid, ArctanBranch::RadialContinuation) <= 1e-8)
    return ArctanBranch::RadialContinuation;
  throw DomainError("no arctan continuation of " + id.name() + " matches its shear series");
}

}  // namespace hkoebe
