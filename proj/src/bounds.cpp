#include "hkoebe/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hkoebe/closed_form.hpp"

namespace hkoebe {

double koebe_lower_bound(double r, const DilatationSpec& spec) {
  if (!(r >= 0.0 && r <= 1.0)) throw DomainError("koebe_lower_bound needs 0 <= r <= 1");
  return r / (4.0 * std::pow(1.0 + spec.k * std::pow(r, spec.m), 2.0 / spec.m));
}

double koebe_radius_lower(const DilatationSpec& spec) {
  return 1.0 / (4.0 * std::pow(1.0 + spec.k, 2.0 / spec.m));
}

Corollary1Predicate corollary1_predicate(const DilatationSpec& spec) {
  return {spec.k <= 0.5 || spec.m >= 4.0, std::pow(1.0 + spec.k, 2.0 / spec.m) <= 1.5};
}

ClassConstants class_constants(const ClassIndex& idx) {
  const double q = idx.q;
  const double R = std::exp2(-2.0 * q / (q - 1.0));
  return {R, 2.0 * std::numbers::pi / (3.0 * std::numbers::sqrt3 * R)};
}

double coefficient_bound_general(const ClassIndex& idx) {
  const auto [R, d] = class_constants(idx);
  const double p = idx.p;
  return std::pow(d, p - 1.0) * (d * R / p + p);
}

double coefficient_bound(const ClassIndex& idx) {
  const double general = coefficient_bound_general(idx);
  if (idx.p != 2) return general;
  const auto [R, d] = class_constants(idx);
  return std::min(general, d * (d * R / 2.0 + 2.0) - 2.0);
}

double heinz_lower(double R) {
  if (!(R > 0.0)) throw DomainError("heinz_lower needs R > 0");
  return 3.0 * std::numbers::sqrt3 * R / (2.0 * std::numbers::pi);
}

double area_lower_bound(const DilatationSpec& spec) {
  if (!spec.integral_order()) throw InvalidSpec("area bound holds for integral m only");
  return std::numbers::pi * (1.0 - spec.k * spec.k / (spec.m + 1.0));
}

RadiusInterval kh3_radius_interval() {
  const double upper = std::abs(eval_closed_form(ClosedFormId::harmonic_koebe(3), std::complex<double>(-1.0)));
  return {koebe_radius_lower(DilatationSpec(1.0, 3.0)), upper};
}

}  // namespace hkoebe
