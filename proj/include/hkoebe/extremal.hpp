#pragma once

#include <map>
#include <string>

#include "hkoebe/report.hpp"

namespace hkoebe {

/// A closed-form value checked against an independent numeric evaluation.
struct ModulusCheck {
  std::map<std::string, double> params;
  double closed_form = 0.0;
  double numeric = 0.0;
  double residual = 0.0;  ///< |closed_form - numeric|
};

/// Module (1/2 pi) ln(b/a) of the annulus a < |z| < b.
double annulus_modulus(double a, double b);

/// int_{t0}^{t1} (1 - K t^m)/(1 + K t^m) dt/t: closed form from the
/// antiderivative ln t - (2/m) ln(1 + K t^m), numeric value by adaptive
/// Simpson to 1e-10.
ModulusCheck proof_integral(double t0, double t1, double k_amp, double m);

/// (1/2 pi) ln(4 delta / epsilon): leading term of the module of the slit
/// plane minus the small disk |w| <= epsilon.
double slit_modulus_asymptotic(double delta, double epsilon);

/// Checks that psi = 4 delta K maps e^{i theta_j} (theta_j = 2 pi j/n, j != 0)
/// onto the slit (-inf, -delta]: imaginary parts within 1e-10 and real parts
/// at most -delta + 1e-10. Measured is the largest real part. The tolerances
/// are absolute, and the rounding in Im psi next to theta = 0 grows like
/// eps delta n^3; at delta = 1/2 it stays below 1e-10 up to n ~ 600.
BoundReport slit_map_check(double delta, int n);

/// Both sides of the modulus comparison in the covering-radius argument:
///   lhs = (2/m) ln((1 + k a^m beta^m eps^m)/(1 + k a^m)) - ln(beta eps)
///   rhs = ln(4 delta*/eps),  delta* = 1/(4 (1 + k a^m)^{2/m}).
/// closed_form holds rhs, numeric holds lhs, residual the gap |rhs - lhs|;
/// the inequality itself is numeric <= closed_form.
ModulusCheck theorem1_delta_chain(double k, double a, double m, double epsilon, double beta);

}  // namespace hkoebe
