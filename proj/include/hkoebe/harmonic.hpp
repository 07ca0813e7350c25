#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "hkoebe/closed_form.hpp"
#include "hkoebe/errors.hpp"
#include "hkoebe/parallel.hpp"
#include "hkoebe/report.hpp"
#include "hkoebe/series.hpp"

namespace hkoebe {

/// Largest |z| at which a truncated series is evaluated.
inline constexpr double kSeriesRadiusCap = 1.0 - 1e-6;

/// Tolerance for the S_H^0 normalization h(0)=g(0)=g'(0)=0, h'(0)=1.
inline constexpr double kNormalizationTolerance = 1e-12;

/// Dilatation bound |w(z)| <= k |z|^m with phase alpha; describes the class
/// S_H^0(k, m) and, for integral m, the monomial w = k e^{i alpha} z^m.
struct DilatationSpec {
  double k = 0.0;
  double m = 1.0;
  double alpha = 0.0;

  DilatationSpec() = default;
  DilatationSpec(double k_, double m_, double alpha_ = 0.0) : k(k_), m(m_), alpha(alpha_) {
    if (!(k >= 0.0 && k <= 1.0)) throw InvalidSpec("dilatation amplitude k must lie in [0, 1]");
    if (!(m >= 1.0) || !std::isfinite(m)) throw InvalidSpec("dilatation order m must be >= 1");
    if (!std::isfinite(alpha)) throw InvalidSpec("dilatation phase must be finite");
    alpha = std::fmod(alpha, 2.0 * std::numbers::pi);
    if (alpha < 0.0) alpha += 2.0 * std::numbers::pi;
  }

  bool integral_order() const { return std::floor(m) == m; }
};

/// f = h + conj(g) with h, g given as truncated series.
template <typename Scalar = double>
class HarmonicMap {
 public:
  using Complex = std::complex<Scalar>;

  HarmonicMap() : HarmonicMap(PowerSeries<Scalar>::identity(), PowerSeries<Scalar>::zero(1)) {}

  HarmonicMap(PowerSeries<Scalar> h, PowerSeries<Scalar> g) : h_(std::move(h)), g_(std::move(g)) {
    const Scalar tol(kNormalizationTolerance);
    normalized_ = std::abs(h_[0]) <= tol && std::abs(g_[0]) <= tol && std::abs(h_[1] - Complex(1)) <= tol &&
                  std::abs(g_[1]) <= tol;
  }

  const PowerSeries<Scalar>& h() const { return h_; }
  const PowerSeries<Scalar>& g() const { return g_; }

  /// True iff the map satisfies the S_H^0 normalization to 1e-12.
  bool normalized() const { return normalized_; }

  Eigen::Index order() const { return std::max(h_.order(), g_.order()); }

 private:
  PowerSeries<Scalar> h_;
  PowerSeries<Scalar> g_;
  bool normalized_ = false;
};

namespace detail {

template <typename Scalar>
void check_series_point(std::complex<Scalar> z) {
  if (!(std::abs(z) <= Scalar(kSeriesRadiusCap))) {
    throw DomainError("series map evaluated at |z| = " + std::to_string(static_cast<double>(std::abs(z))) +
                      ", beyond the cap 1 - 1e-6");
  }
}

}  // namespace detail

template <typename Scalar>
std::complex<Scalar> eval_map(const HarmonicMap<Scalar>& map, std::complex<Scalar> z) {
  detail::check_series_point(z);
  return evaluate(map.h(), z) + std::conj(evaluate(map.g(), z));
}

/// Analytic dilatation w = g'/h' as a series.
template <typename Scalar>
PowerSeries<Scalar> dilatation_series(const HarmonicMap<Scalar>& map) {
  return divide(derivative(map.g()), derivative(map.h()));
}

/// |h'(z)|^2 - |g'(z)|^2 from precomputed derivative series.
template <typename Scalar>
Scalar jacobian(const PowerSeries<Scalar>& dh, const PowerSeries<Scalar>& dg, std::complex<Scalar> z) {
  return std::norm(evaluate(dh, z)) - std::norm(evaluate(dg, z));
}

template <typename Scalar>
Scalar jacobian(const HarmonicMap<Scalar>& map, std::complex<Scalar> z) {
  detail::check_series_point(z);
  return jacobian(derivative(map.h()), derivative(map.g()), z);
}

/// Radii r_i = 0.999 (1 - cos(pi (i+1)/n)) / 2 for the class-membership grid;
/// Chebyshev-clustered at both ends of (0, 0.999].
inline std::vector<double> class_grid_radii(int n_radial) {
  std::vector<double> r(n_radial);
  for (int i = 0; i < n_radial; ++i) r[i] = 0.999 * 0.5 * (1.0 - std::cos(std::numbers::pi * (i + 1) / n_radial));
  return r;
}

/// Checks |w_f(z)| <= k |z|^m on a polar grid. The report's value is the bound
/// 0 on the residual |w_f| - k|z|^m; measured is the grid maximum, the
/// witness is the first grid point attaining it, and the check passes when the
/// maximum is at most 1e-9.
template <typename Scalar>
BoundReport check_class(const HarmonicMap<Scalar>& map, const DilatationSpec& spec, int n_radial = 64,
                        int n_angular = 256) {
  if (n_radial < 1 || n_angular < 1) throw DomainError("class check grid needs n_radial, n_angular >= 1");
  const PowerSeries<Scalar> w = dilatation_series(map);
  const auto radii = class_grid_radii(n_radial);

  struct Slice {
    double max = -std::numeric_limits<double>::infinity();
    std::complex<double> at;
  };
  std::vector<Slice> slices(n_angular);
  parallel_for(static_cast<std::size_t>(n_angular), [&](std::size_t j) {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(j) / n_angular;
    Slice s;
    for (double r : radii) {
      const std::complex<double> z = std::polar(r, theta);
      const auto wz = evaluate(w, std::complex<Scalar>(Scalar(z.real()), Scalar(z.imag())));
      const double residual = static_cast<double>(std::abs(wz)) - spec.k * std::pow(r, spec.m);
      if (residual > s.max) s = {residual, z};
    }
    slices[j] = s;
  });

  Slice best;
  for (const auto& s : slices)
    if (s.max > best.max) best = s;

  BoundReport report;
  report.name = "class-membership";
  report.inputs = {{"k", spec.k}, {"m", spec.m}, {"alpha", spec.alpha}, {"n_radial", double(n_radial)},
                   {"n_angular", double(n_angular)}};
  report.value = 0.0;
  report.compare(best.max, BoundDirection::AtMost, 1e-9);
  report.witness = best.at;
  return report;
}

}  // namespace hkoebe
