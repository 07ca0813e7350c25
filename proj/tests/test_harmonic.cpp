#include <doctest.h>

#include <numbers>

#include "hkoebe/harmonic.hpp"
#include "hkoebe/shear.hpp"

using namespace hkoebe;
using C = std::complex<double>;

TEST_CASE("dilatation spec validation") {
  CHECK_THROWS_AS(DilatationSpec(1.5, 1), InvalidSpec);
  CHECK_THROWS_AS(DilatationSpec(-0.1, 1), InvalidSpec);
  CHECK_THROWS_AS(DilatationSpec(0.5, 0.5), InvalidSpec);
  CHECK(DilatationSpec(0.5, 2, -std::numbers::pi).alpha == doctest::Approx(std::numbers::pi));
  CHECK(DilatationSpec(0.5, 2.5).integral_order() == false);
}

TEST_CASE("eval_map") {
  const HarmonicMap<double> id;
  CHECK(id.normalized());
  CHECK(std::abs(eval_map(id, C(0.3, 0.4)) - C(0.3, 0.4)) <= 1e-15);

  const HarmonicMap<double> hg(Series{0.0, 1.0}, Series{0.0, 0.0, 0.5});
  CHECK(std::abs(eval_map(hg, C(0.5)) - C(0.625)) <= 1e-15);

  CHECK_THROWS_AS(eval_map(id, C(0.9999999, 0)), DomainError);
  CHECK_THROWS_AS(eval_map(id, C(1.0, 0)), DomainError);
  CHECK_NOTHROW(eval_map(id, C(1.0 - 1e-6, 0)));
}

TEST_CASE("sheared K_H series reaches the closed form at z = -0.99") {
  // at |z| = 0.99 the terms (2n^2+1)/3 0.99^n only drop below 1e-7 past n ~ 3000,
  // so the order-128 jet is nowhere near; a long jet is used instead
  const auto kh = sheared_koebe(DilatationSpec(1.0, 1), 4096);
  const C z(-0.99);
  CHECK(std::abs(eval_map(kh, z) - eval_closed_form(ClosedFormId::harmonic_koebe(1), z)) <= 1e-6);
}

TEST_CASE("normalization flag") {
  CHECK_FALSE(HarmonicMap<double>(Series{0.0, 2.0}, Series{0.0}).normalized());
  CHECK_FALSE(HarmonicMap<double>(Series{0.0, 1.0}, Series{0.0, 0.1}).normalized());
  CHECK_FALSE(HarmonicMap<double>(Series{1e-9, 1.0}, Series{0.0}).normalized());
  CHECK(HarmonicMap<double>(Series{1e-13, 1.0}, Series{0.0, 0.0, 3.0}).normalized());
}

TEST_CASE("dilatation_series") {
  CHECK(max_coeff_distance(dilatation_series(HarmonicMap<double>()), Series{0.0}) == 0.0);

  // recovering w from stored coefficients loses ~n^3 eps at order n; long double keeps it below 1e-12
  using LS = PowerSeries<long double>;
  const auto w = dilatation_series(sheared_koebe<long double>(DilatationSpec(1.0, 1), 64));
  CHECK(max_coeff_distance(w.resized(62), LS{0.0L, 1.0L}.resized(62)) <= 1e-12L);
  const auto wd = dilatation_series(sheared_koebe(DilatationSpec(1.0, 1), 64));
  CHECK(max_coeff_distance(wd.resized(62), Series{0.0, 1.0}.resized(62)) <= 1e-9);

  for (int m = 1; m <= 4; ++m) {
    const double k = 0.7;
    const Series h{0.0, 1.0};
    const Series g = Series::monomial(k / (m + 1), m + 1, m + 1);
    const auto wm = dilatation_series(HarmonicMap<double>(h, g));
    CHECK(max_coeff_distance(wm, Series::monomial(k, m, m + 1)) <= 1e-15);
  }
}

TEST_CASE("jacobian") {
  const HarmonicMap<double> id;
  CHECK(jacobian(id, C(0.2, -0.7)) == doctest::Approx(1.0));

  const HarmonicMap<double> ext(Series{0.0, 1.0}, Series{0.0, 0.0, 0.5});
  for (double r : {0.1, 0.5, 0.9}) CHECK(jacobian(ext, std::polar(r, 1.3)) == doctest::Approx(1.0 - r * r).epsilon(1e-14));

  CHECK(jacobian(sheared_koebe(DilatationSpec(1.0, 1)), C(0)) == doctest::Approx(1.0));
}

TEST_CASE("check_class") {
  const auto kh3 = sheared_koebe<long double>(DilatationSpec(1.0, 3));
  const auto pass = check_class(kh3, DilatationSpec(1.0, 3));
  REQUIRE(pass.pass.has_value());
  CHECK(*pass.pass);
  CHECK(*pass.measured <= 1e-9);
  CHECK(pass.name == "class-membership");

  // with double coefficients the rounding of h, g alone moves |w_f| by ~1e-8 near |z| = 0.999
  const auto kh3d = sheared_koebe(DilatationSpec(1.0, 3));
  CHECK(*check_class(kh3d, DilatationSpec(1.0, 3)).measured <= 1e-7);

  CHECK(*check_class(HarmonicMap<double>(), DilatationSpec(0.0, 4)).pass);

  const auto fail = check_class(sheared_koebe(DilatationSpec(1.0, 1)), DilatationSpec(1.0, 2));
  CHECK_FALSE(*fail.pass);
  // |z| - |z|^2 peaks at |z| = 1/2
  CHECK(*fail.measured == doctest::Approx(0.25).epsilon(1e-3));
  REQUIRE(fail.witness.has_value());
  CHECK(std::abs(std::abs(*fail.witness) - 0.5) <= 0.03);

  CHECK_THROWS_AS(check_class(kh3d, DilatationSpec(1.0, 3), 0, 8), DomainError);
}

TEST_CASE("check_class is independent of the worker count") {
  const auto map = sheared_koebe(DilatationSpec(0.5, 2, 1.0));
  const auto a = check_class(map, DilatationSpec(0.5, 2));
  const auto b = check_class(map, DilatationSpec(0.5, 2));
  CHECK(*a.measured == *b.measured);
  CHECK(*a.witness == *b.witness);
}

TEST_CASE("property: Schwarz growth of shear dilatations") {
  for (double k : {0.25, 0.5, 1.0})
    for (int m = 1; m <= 4; ++m)
      for (double alpha : {0.0, 2.0}) {
        CAPTURE(k);
        CAPTURE(m);
        const auto map = sheared_koebe<long double>(DilatationSpec(k, m, alpha));
        // |w_f(z)| <= |z|^m, i.e. class (1, m)
        CHECK(*check_class(map, DilatationSpec(1.0, m), 32, 64).pass);
        CHECK(*check_class(map, DilatationSpec(k, m), 32, 64).pass);
      }
}

TEST_CASE("property: shear maps are sense-preserving up to |z| = 0.99") {
  for (double k : {0.5, 0.9})
    for (int m = 1; m <= 3; ++m) {
      CAPTURE(k);
      CAPTURE(m);
      const auto map = sheared_koebe(DilatationSpec(k, m, 0.7), 4096);
      const auto dh = derivative(map.h());
      const auto dg = derivative(map.g());
      double worst = std::numeric_limits<double>::infinity();
      for (int i = 1; i <= 11; ++i)
        for (int j = 0; j < 64; ++j) {
          const double r = std::min(0.09 * i, 0.99);
          worst = std::min(worst, jacobian(dh, dg, std::polar(r, 2.0 * std::numbers::pi * j / 64.0)));
        }
      CHECK(worst > 0.0);
    }
}

TEST_CASE("long double maps") {
  const auto map = sheared_koebe<long double>(DilatationSpec(1.0, 2), 128);
  const std::complex<long double> z(-0.5L, 0.25L);
  const auto ref = eval_closed_form(ClosedFormId::harmonic_koebe(2), z);
  CHECK(std::abs(eval_map(map, z) - ref) <= 1e-15L);
}
