#include "hkoebe/area.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "hkoebe/parallel.hpp"
#include "hkoebe/quadrature.hpp"

namespace hkoebe {

AreaEstimate area_series(const HarmonicMap<double>& map, double r) {
  if (!(r > 0.0 && r <= 1.0)) throw DomainError("area_series needs 0 < r <= 1");
  const double r2 = r * r;
  double sum = 0.0;
  double rpow = 1.0;
  for (Eigen::Index n = 1; n <= map.order(); ++n) {
    rpow *= r2;
    sum += static_cast<double>(n) * (std::norm(map.h()[n]) - std::norm(map.g()[n])) * rpow;
    if (std::abs(std::numbers::pi * sum) > kAreaDivergenceThreshold) {
      return {std::numeric_limits<double>::infinity(), true};
    }
  }
  return {std::numbers::pi * sum, false};
}

double area_quadrature(const HarmonicMap<double>& map, double r, int n_rad, int n_ang) {
  if (!(r > 0.0 && r < 1.0)) throw DomainError("area_quadrature needs 0 < r < 1");
  if (n_rad < 1 || n_ang < 1) throw DomainError("area_quadrature needs positive node counts");
  const auto rule = gauss_legendre(n_rad);
  const auto dh = derivative(map.h());
  const auto dg = derivative(map.g());

  std::vector<double> bands(n_rad);
  parallel_for(static_cast<std::size_t>(n_rad), [&](std::size_t i) {
    const double rho = 0.5 * r * (rule.nodes[i] + 1.0);
    double ring = 0.0;
    for (int j = 0; j < n_ang; ++j) ring += jacobian(dh, dg, std::polar(rho, 2.0 * std::numbers::pi * j / n_ang));
    bands[i] = 0.5 * r * rule.weights[i] * rho * ring * (2.0 * std::numbers::pi / n_ang);
  });
  double total = 0.0;
  for (double b : bands) total += b;
  return total;
}

HarmonicMap<double> extremal_map(const DilatationSpec& spec) {
  if (!spec.integral_order()) throw InvalidSpec("extremal map needs an integral m");
  const auto m = static_cast<Eigen::Index>(spec.m);
  const auto c = std::polar(spec.k / (spec.m + 1.0), spec.alpha);
  return HarmonicMap<double>(Series::identity(m + 1), Series::monomial(c, m + 1, m + 1));
}

}  // namespace hkoebe
