#include "hkoebe/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <utility>

#include "hkoebe/area.hpp"
#include "hkoebe/bounds.hpp"
#include "hkoebe/extremal.hpp"
#include "hkoebe/radius.hpp"
#include "hkoebe/shear.hpp"

namespace hkoebe {

namespace {

using Check = std::function<CheckResult()>;

std::string g17(double x) { return format_double(x); }

CheckResult kh2_minus_one() {
  const double got = eval_closed_form(ClosedFormId::harmonic_koebe(2), std::complex<double>(-1.0)).real();
  return {"kh2-minus-one", "-1/3 +- 1e-12", g17(got), std::abs(got + 1.0 / 3.0) <= 1e-12};
}

CheckResult kh3_kh4_minus_one() {
  const auto v3 = eval_closed_form(ClosedFormId::harmonic_koebe(3), std::complex<double>(-1.0));
  const auto v4 = eval_closed_form(ClosedFormId::harmonic_koebe(4), std::complex<double>(-1.0));
  const bool pass = std::abs(v3 - std::complex<double>(-0.231289)) <= 5e-7 &&
                    std::abs(v4 - std::complex<double>(-0.273968)) <= 5e-7;
  return {"kh3-kh4-minus-one", "-0.231289, -0.273968 +- 5e-7", g17(v3.real()) + ", " + g17(v4.real()), pass};
}

CheckResult kh_boundary_min() {
  // K_H collapses the whole unit circle minus z = 1 onto -1/6, so the minimum
  // is attained on every arc; check that theta = pi is one of its minimizers.
  const auto id = ClosedFormId::harmonic_koebe(1);
  const MapSource kh = id;
  const auto mm = min_modulus(kh, boundary_profile(kh, 1.0, 1024), true);
  const double at_pi = std::abs(eval_closed_form(id, std::complex<double>(-1.0)));
  const bool pass = std::abs(mm.value - 1.0 / 6.0) <= 1e-6 && at_pi <= mm.value + 1e-9;
  return {"kh-boundary-min", "1/6 +- 1e-6, attained at theta=pi", g17(mm.value) + "; |K_H(-1)| " + g17(at_pi), pass};
}

CheckResult koebe_radius_constants() {
  const double r11 = koebe_radius_lower(DilatationSpec(1.0, 1.0));
  const double r3 = class_constants(ClassIndex(2, 3)).R;
  return {"koebe-radius-constants", "1/16, R_3 = 1/8", g17(r11) + ", " + g17(r3), r11 == 1.0 / 16.0 && r3 == 1.0 / 8.0};
}

CheckResult coefficient_bounds() {
  const double a3 = coefficient_bound(ClassIndex(3, 3));
  double worst_a2 = 0.0;
  for (int q = 6; q <= 20; ++q) worst_a2 = std::max(worst_a2, coefficient_bound(ClassIndex(2, q)));
  const bool pass = a3 >= 318.0 && a3 <= 319.0 && std::ceil(a3) == 319.0 && worst_a2 < 16.5;
  return {"coefficient-bounds", "|a_3| in [318,319]; |a_2| < 16.5 for q=6..20",
          g17(a3) + "; max " + g17(worst_a2), pass};
}

CheckResult kh3_interval() {
  const auto iv = kh3_radius_interval();
  const bool pass = std::abs(iv.lower - 0.15749) <= 1e-5 && std::abs(iv.upper - 0.231289) <= 5e-7 && iv.lower < iv.upper;
  return {"kh3-interval", "(0.15749 +- 1e-5, 0.231289 +- 5e-7)", g17(iv.lower) + ", " + g17(iv.upper), pass};
}

CheckResult kh_coefficients() {
  const auto map = sheared_koebe(DilatationSpec(1.0, 1.0), 20);
  double worst = 0.0;
  for (int n = 1; n <= 20; ++n) {
    const double a = (n + 1.0) * (2.0 * n + 1.0) / 6.0;
    const double b = (n - 1.0) * (2.0 * n - 1.0) / 6.0;
    worst = std::max({worst, std::abs(map.h()[n] - a), std::abs(map.g()[n] - b),
                      std::abs(map.h()[n] - map.g()[n] - double(n))});
  }
  return {"kh-coefficients", "a_n, b_n, a_n - b_n exact to 1e-10 for n <= 20", "max err " + g17(worst), worst <= 1e-10};
}

CheckResult closed_form_vs_series() {
  const auto grid = closed_form_check_grid();
  double worst = 0.0;
  for (int m = 2; m <= 4; ++m)
    worst = std::max(worst, closed_form_series_deviation(ClosedFormId::harmonic_koebe(m), grid));
  return {"closed-form-vs-series", "max error <= 1e-8 on 100 points, |z| <= 0.8", g17(worst), worst <= 1e-8};
}

CheckResult area_sharpness() {
  double worst = 0.0;
  for (double k : {0.25, 0.5, 1.0})
    for (double m : {1.0, 2.0, 3.0}) {
      const DilatationSpec spec(k, m);
      worst = std::max(worst, std::abs(area_series(extremal_map(spec), 1.0).value - area_lower_bound(spec)));
    }
  return {"area-sharpness", "area(extremal) = pi(1 - k^2/(m+1)) +- 1e-14", "max err " + g17(worst), worst <= 1e-14};
}

CheckResult area_cross_method() {
  double worst = 0.0;
  for (double m : {1.0, 2.0}) {
    const auto map = sheared_koebe(DilatationSpec(1.0, m), 128);
    worst = std::max(worst, std::abs(area_series(map, 0.9).value - area_quadrature(map, 0.9, 64, 256)));
  }
  return {"area-cross-method", "|series - quadrature| <= 1e-6 at r = 0.9", g17(worst), worst <= 1e-6};
}

CheckResult proof_integral_chain() {
  double worst = 0.0;
  for (double t0 : {0.01, 0.05, 0.1, 0.3, 0.6})
    for (double k : {0.0, 0.1, 0.25, 0.5, 1.0})
      for (double m : {1.0, 2.0, 3.0, 4.0}) worst = std::max(worst, proof_integral(t0, 1.0, k, m).residual);

  // gap along a path with eps and beta - 1 shrinking together, then beta alone
  bool monotone = true;
  bool holds = true;
  double prev = std::numeric_limits<double>::infinity();
  const std::pair<double, double> path[] = {{1e-3, 1.1}, {1e-4, 1.01}, {1e-5, 1.001}, {1e-6, 1.0001}};
  for (auto [eps, beta] : path) {
    const auto c = theorem1_delta_chain(1.0, 0.9, 2.0, eps, beta);
    holds = holds && c.numeric <= c.closed_form;
    monotone = monotone && c.residual < prev;
    prev = c.residual;
  }
  const double last_gap = prev;
  return {"proof-integral", "residual <= 1e-8; delta-chain gap -> 0 monotonically",
          g17(worst) + "; final gap " + g17(last_gap), worst <= 1e-8 && monotone && holds && last_gap < 1e-3};
}

CheckResult theorem1_compliance() {
  double worst = std::numeric_limits<double>::infinity();
  for (double k : {0.25, 0.5, 1.0})
    for (double m : {1.0, 2.0, 3.0, 4.0}) {
      const DilatationSpec spec(k, m);
      const MapSource map = sheared_koebe(spec, 1024);
      const auto est = koebe_radius_estimate(map, {});
      for (const auto& [r, min] : est.r_ladder) worst = std::min(worst, min - koebe_lower_bound(r, spec));
    }
  return {"theorem1-compliance", "rung min - bound >= -1e-9 on all corpus maps", "min slack " + g17(worst),
          worst >= -1e-9};
}

const std::vector<std::pair<std::string, Check>>& registry() {
  static const std::vector<std::pair<std::string, Check>> checks = {
      {"kh2-minus-one", kh2_minus_one},
      {"kh3-kh4-minus-one", kh3_kh4_minus_one},
      {"kh-boundary-min", kh_boundary_min},
      {"koebe-radius-constants", koebe_radius_constants},
      {"coefficient-bounds", coefficient_bounds},
      {"kh3-interval", kh3_interval},
      {"kh-coefficients", kh_coefficients},
      {"closed-form-vs-series", closed_form_vs_series},
      {"area-sharpness", area_sharpness},
      {"area-cross-method", area_cross_method},
      {"proof-integral", proof_integral_chain},
      {"theorem1-compliance", theorem1_compliance},
  };
  return checks;
}

}  // namespace

std::vector<std::string> verification_check_names() {
  std::vector<std::string> names;
  for (const auto& [name, _] : registry()) names.push_back(name);
  return names;
}

std::vector<CheckResult> run_verification(const std::string& only) {
  std::vector<CheckResult> results;
  for (const auto& [name, check] : registry()) {
    if (!only.empty() && name != only) continue;
    try {
      results.push_back(check());
    } catch (const std::exception& e) {
      results.push_back({name, "no error", std::string("error: ") + e.what(), false});
    }
  }
  if (!only.empty() && results.empty()) throw DomainError("unknown verification check '" + only + "'");
  return results;
}

Json verification_to_json(const std::vector<CheckResult>& results) {
  Json arr = Json::array();
  bool all = true;
  for (const auto& r : results) {
    arr.push_back(Json{{"name", r.name}, {"expected", r.expected}, {"got", r.got}, {"pass", r.pass}});
    all = all && r.pass;
  }
  return Json{{"checks", arr}, {"pass", all}};
}

}  // namespace hkoebe
