#include "hkoebe/radius.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "hkoebe/parallel.hpp"

namespace hkoebe {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

bool is_closed_form(const MapSource& source) { return std::holds_alternative<ClosedFormId>(source); }

// f(r e^{i theta}). Closed forms go through long double: near z = 1 their
// (1-z)^{-3} parts cancel down to O(1), and a radial error of one ulp in z
// alone moves f by ~eps / |1-z|^4.
std::complex<double> sample(const MapSource& source, double r, double theta) {
  if (const auto* id = std::get_if<ClosedFormId>(&source)) {
    const auto f = eval_closed_form(*id, std::polar<long double>(r, theta));
    return {static_cast<double>(f.real()), static_cast<double>(f.imag())};
  }
  return eval_map(std::get<HarmonicMap<double>>(source), std::polar(r, theta));
}

// |f(r e^{i theta})|, +inf at the closed-form pole
double modulus_at(const MapSource& source, double r, double theta) {
  try {
    return std::abs(sample(source, r, theta));
  } catch (const PoleError&) {
    return std::numeric_limits<double>::infinity();
  }
}

void check_radius(const MapSource& source, double r) {
  if (is_closed_form(source)) {
    if (!(r > 0.0 && r <= 1.0)) throw DomainError("closed-form profile needs 0 < r <= 1");
  } else if (!(r > 0.0 && r <= kSeriesRadiusCap)) {
    throw DomainError("series profile needs 0 < r <= 1 - 1e-6");
  }
}

}  // namespace

BoundaryProfile boundary_profile(const MapSource& source, double r, int n) {
  check_radius(source, r);
  if (n < 4) throw DomainError("boundary profile needs n >= 4 samples");

  BoundaryProfile p;
  p.r = r;
  const int first = (is_closed_form(source) && r == 1.0) ? 1 : 0;
  for (int j = first; j < n; ++j) p.thetas.push_back(kTwoPi * j / n);
  p.values.resize(p.thetas.size());
  p.moduli.resize(p.thetas.size());
  parallel_for(p.thetas.size(), [&](std::size_t i) {
    p.values[i] = sample(source, r, p.thetas[i]);
    p.moduli[i] = std::abs(p.values[i]);
  });
  return p;
}

MinModulus min_modulus(const MapSource& source, const BoundaryProfile& profile, bool refine) {
  if (profile.moduli.empty()) throw DomainError("empty boundary profile");
  // values within a few ulps are ties, which go to the smallest theta
  auto clearly_below = [](double v, double ref) {
    return v < ref - 4.0 * std::numeric_limits<double>::epsilon() * std::abs(ref);
  };
  std::size_t best = 0;
  for (std::size_t i = 1; i < profile.moduli.size(); ++i)
    if (clearly_below(profile.moduli[i], profile.moduli[best])) best = i;
  const MinModulus coarse{profile.thetas[best], profile.moduli[best]};
  if (!refine || profile.thetas.size() < 2) return coarse;

  // bracket by the neighbouring sample angles; wraps around the circle
  const double spacing = profile.thetas[1] - profile.thetas[0];
  double a = coarse.theta - spacing;
  double b = coarse.theta + spacing;
  auto f = [&](double t) { return modulus_at(source, profile.r, t); };

  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > 1e-10) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  double theta = 0.5 * (a + b);
  const double value = f(theta);
  if (!clearly_below(value, coarse.value)) return coarse;
  theta = std::fmod(theta, kTwoPi);
  if (theta < 0.0) theta += kTwoPi;
  return {theta, value};
}

double series_tail_estimate(const HarmonicMap<double>& map, double r) {
  if (!(r >= 0.0 && r < 1.0)) throw DomainError("tail estimate needs 0 <= r < 1");
  const auto& h = map.h();
  const auto& g = map.g();
  const Eigen::Index n = map.order();
  if (n < 1) return 0.0;
  const double top = std::max({std::abs(h[n]), std::abs(h[n - 1]), std::abs(g[n]), std::abs(g[n - 1])});
  return top * std::pow(r, static_cast<double>(n + 1)) / ((1.0 - r) * (1.0 - r));
}

RadiusEstimate koebe_radius_estimate(const MapSource& source, const RadiusOptions& options) {
  if (!(options.j_min >= 4 && options.j_min < options.j_max && options.j_max <= 16)) {
    throw DomainError("radius ladder needs 4 <= j_min < j_max <= 16");
  }
  auto rung_radius = [](int j) { return 1.0 - std::ldexp(1.0, -j); };

  RadiusEstimate est;
  est.j_lo = options.j_min;
  est.j_hi = options.j_max;

  if (const auto* map = std::get_if<HarmonicMap<double>>(&source)) {
    SeriesTail tail = options.tail;
    if (tail == SeriesTail::Auto) tail = map->order() <= kExactPolynomialOrder ? SeriesTail::Exact : SeriesTail::Truncated;
    if (tail == SeriesTail::Truncated) {
      int cap = 0;
      while (cap < options.j_max && series_tail_estimate(*map, rung_radius(cap + 1)) <= kTailTolerance) ++cap;
      if (cap < 2) throw DomainError("series too short to estimate its boundary minimum");
      if (cap < options.j_max) {
        est.clipped = true;
        est.j_hi = cap;
        est.j_lo = std::max(1, std::min(options.j_min, cap - 2));
      }
    }
  }

  MinModulus last{};
  for (int j = est.j_lo; j <= est.j_hi; ++j) {
    const double r = rung_radius(j);
    last = min_modulus(source, boundary_profile(source, r, options.n), true);
    est.r_ladder.emplace_back(r, last.value);
  }
  // Richardson in s = 1 - r with s halving between rungs. The contraction
  // ratio of successive differences comes from the last three rungs and is
  // floored at 2, the linear model; maps with f'(-1) = 0 converge faster.
  const std::size_t k = est.r_ladder.size();
  const double m_last = est.r_ladder[k - 1].second;
  const double d_last = m_last - est.r_ladder[k - 2].second;
  double ratio = 2.0;
  if (k >= 3 && d_last != 0.0) {
    const double d_prev = est.r_ladder[k - 2].second - est.r_ladder[k - 3].second;
    ratio = std::max(ratio, d_prev / d_last);
  }
  est.extrapolated = m_last + d_last / (ratio - 1.0);

  if (is_closed_form(source)) {
    last = min_modulus(source, boundary_profile(source, 1.0, options.n), true);
    est.r_ladder.emplace_back(1.0, last.value);
  }
  est.value = last.value;
  est.argmin_theta = last.theta;
  return est;
}

}  // namespace hkoebe
