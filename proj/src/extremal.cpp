#include "hkoebe/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

#include "hkoebe/errors.hpp"
#include "hkoebe/quadrature.hpp"

namespace hkoebe {

double annulus_modulus(double a, double b) {
  if (!(a > 0.0 && a < b) || !std::isfinite(b)) throw DomainError("annulus needs 0 < a < b");
  return std::log(b / a) / (2.0 * std::numbers::pi);
}

ModulusCheck proof_integral(double t0, double t1, double k_amp, double m) {
  if (!(t0 > 0.0 && t0 < t1 && t1 <= 1.0)) throw DomainError("proof_integral needs 0 < t0 < t1 <= 1");
  if (!(k_amp >= 0.0)) throw DomainError("proof_integral needs K >= 0");
  if (!(m >= 1.0)) throw DomainError("proof_integral needs m >= 1");

  auto antiderivative = [&](double t) { return std::log(t) - (2.0 / m) * std::log1p(k_amp * std::pow(t, m)); };
  auto integrand = [&](double t) {
    const double kt = k_amp * std::pow(t, m);
    return (1.0 - kt) / ((1.0 + kt) * t);
  };

  ModulusCheck check;
  check.params = {{"t0", t0}, {"t1", t1}, {"K_amp", k_amp}, {"m", m}};
  check.closed_form = antiderivative(t1) - antiderivative(t0);
  check.numeric = adaptive_simpson(integrand, t0, t1, 1e-10, 40);
  check.residual = std::abs(check.closed_form - check.numeric);
  return check;
}

double slit_modulus_asymptotic(double delta, double epsilon) {
  if (!(epsilon > 0.0 && epsilon < delta)) throw DomainError("slit modulus needs 0 < epsilon < delta");
  return std::log(4.0 * delta / epsilon) / (2.0 * std::numbers::pi);
}

BoundReport slit_map_check(double delta, int n) {
  if (!(delta > 0.0)) throw DomainError("slit map needs delta > 0");
  if (n < 8) throw DomainError("slit map check needs n >= 8");

  double worst_imag = 0.0;
  double worst_real = -std::numeric_limits<double>::infinity();
  double worst_identity = 0.0;
  std::complex<double> witness;
  for (int j = 1; j < n; ++j) {
    const double theta = 2.0 * std::numbers::pi * j / n;
    const std::complex<double> z = std::polar(1.0, theta);
    const std::complex<double> psi = 4.0 * delta * z / ((1.0 - z) * (1.0 - z));
    const double s = std::sin(0.5 * theta);
    const double expected = -delta / (s * s);
    worst_imag = std::max(worst_imag, std::abs(psi.imag()));
    worst_identity = std::max(worst_identity, std::abs(psi.real() - expected) / std::max(1.0, std::abs(expected)));
    if (psi.real() > worst_real) {
      worst_real = psi.real();
      witness = z;
    }
  }

  BoundReport report;
  report.name = "slit-map";
  report.inputs = {{"delta", delta}, {"n", double(n)}};
  report.value = -delta;
  report.measured = worst_real;
  report.pass = worst_imag <= 1e-10 && worst_real <= -delta + 1e-10 && worst_identity <= 1e-12;
  report.witness = witness;
  return report;
}

ModulusCheck theorem1_delta_chain(double k, double a, double m, double epsilon, double beta) {
  if (!(k >= 0.0 && k <= 1.0)) throw DomainError("delta chain needs 0 <= k <= 1");
  if (!(a > 0.0 && a < 1.0)) throw DomainError("delta chain needs 0 < a < 1");
  if (!(m >= 1.0)) throw DomainError("delta chain needs m >= 1");
  if (!(beta > 1.0)) throw DomainError("delta chain needs beta > 1");
  if (!(epsilon > 0.0 && epsilon * beta < 0.1)) throw DomainError("delta chain needs 0 < epsilon, epsilon beta < 0.1");

  const double kam = k * std::pow(a, m);
  const double delta_star = 1.0 / (4.0 * std::pow(1.0 + kam, 2.0 / m));
  const double lhs = (2.0 / m) * (std::log1p(kam * std::pow(beta * epsilon, m)) - std::log1p(kam)) -
                     std::log(beta * epsilon);
  const double rhs = std::log(4.0 * delta_star / epsilon);

  ModulusCheck check;
  check.params = {{"k", k}, {"a", a}, {"m", m}, {"epsilon", epsilon}, {"beta", beta}, {"delta_star", delta_star}};
  check.closed_form = rhs;
  check.numeric = lhs;
  check.residual = std::abs(rhs - lhs);
  return check;
}

}  // namespace hkoebe
