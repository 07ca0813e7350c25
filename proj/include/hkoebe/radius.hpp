#pragma once

#include <complex>
#include <utility>
#include <variant>
#include <vector>

#include "hkoebe/closed_form.hpp"
#include "hkoebe/harmonic.hpp"

namespace hkoebe {

/// Anything that can be sampled on a circle: a series map or a closed form.
using MapSource = std::variant<HarmonicMap<double>, ClosedFormId>;

/// f sampled at r e^{i theta_j}.
struct BoundaryProfile {
  double r = 0.0;
  std::vector<double> thetas;
  std::vector<std::complex<double>> values;
  std::vector<double> moduli;
};

/// Samples f(r e^{i theta_j}), theta_j = 2 pi j / n. Series maps need
/// 0 < r <= 1 - 1e-6; closed forms accept r = 1, where the pole sample
/// theta = 0 is dropped.
BoundaryProfile boundary_profile(const MapSource& source, double r, int n);

struct MinModulus {
  double theta = 0.0;
  double value = 0.0;
};

/// Coarse argmin of the profile (smallest theta on ties, where moduli within
/// 4 ulps tie); with `refine`, a golden-section search of
/// theta -> |f(r e^{i theta})| on the bracketing samples down to width 1e-10.
/// The refined point is kept only if it is lower than the coarse one by more
/// than a tie.
MinModulus min_modulus(const MapSource& source, const BoundaryProfile& profile, bool refine);

/// How far a series map is trusted near the boundary.
enum class SeriesTail {
  Auto,       ///< exact polynomial if order <= kExactPolynomialOrder, else a truncated jet
  Exact,      ///< the polynomial is the map; every rung is valid
  Truncated,  ///< rungs whose estimated truncation tail exceeds kTailTolerance are dropped
};

inline constexpr Eigen::Index kExactPolynomialOrder = 16;
inline constexpr double kTailTolerance = 1e-8;

/// Estimated contribution of the omitted terms of a truncated jet on |z| = r:
/// c r^{N+1} / (1-r)^2 with c the largest of the two top coefficients of h, g.
double series_tail_estimate(const HarmonicMap<double>& map, double r);

struct RadiusEstimate {
  double value = 0.0;         ///< minimum modulus on the final rung
  double argmin_theta = 0.0;  ///< where the final-rung minimum sits
  std::vector<std::pair<double, double>> r_ladder;  ///< (r, refined minimum) per rung, r ascending
  double extrapolated = 0.0;  ///< Richardson limit r -> 1 from the last rungs with r < 1
  int j_lo = 0;               ///< rungs actually used: r_j = 1 - 2^{-j}, j = j_lo..j_hi
  int j_hi = 0;
  bool clipped = false;       ///< true if series truncation forced a lower ladder than requested
};

struct RadiusOptions {
  int j_min = 4;
  int j_max = 12;
  int n = 1024;
  SeriesTail tail = SeriesTail::Auto;
};

/// Minimum modulus of f on the circles r_j = 1 - 2^{-j}, extrapolated to the
/// unit circle: the last difference is scaled as a geometric tail whose ratio
/// is estimated from the last three rungs (at least 2, which is the linear
/// model in 1 - r). Closed forms get a final exact rung at r = 1.
RadiusEstimate koebe_radius_estimate(const MapSource& source, const RadiusOptions& options = {});

}  // namespace hkoebe
