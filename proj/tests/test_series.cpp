#include <doctest.h>

#include <random>

#include "hkoebe/series.hpp"
#include "hkoebe/shear.hpp"

using namespace hkoebe;
using C = std::complex<double>;

namespace {

Series random_poly(std::mt19937_64& rng, int order, double scale = 1.0) {
  std::uniform_real_distribution<double> u(-scale, scale);
  Series::Coeffs c(order + 1);
  for (int i = 0; i <= order; ++i) c[i] = {u(rng), u(rng)};
  return Series(c);
}

Series geometric(int order, double ratio) {
  Series::Coeffs c(order + 1);
  for (int i = 0; i <= order; ++i) c[i] = std::pow(ratio, i);
  return Series(c);
}

}  // namespace

TEST_CASE("addition zero-pads and cancels") {
  CHECK(max_coeff_distance(Series{1.0, 1.0} + Series{1.0, -1.0}, Series{2.0}) == 0.0);
  const Series a{1.0, C(2, 3), -4.0};
  CHECK(max_coeff_distance(a + Series::zero(0), a) == 0.0);
  CHECK((a + Series::zero(6)).order() == 6);

  // sum z^n + sum (-z)^n = 2 + 2z^2 + 2z^4
  const Series s = geometric(4, 1.0) + geometric(4, -1.0);
  CHECK(max_coeff_distance(s, Series{2.0, 0.0, 2.0, 0.0, 2.0}) == 0.0);
}

TEST_CASE("multiplication") {
  // output order defaults to the larger input order, so order-1 inputs lose z^2
  CHECK(max_coeff_distance(Series{1.0, 1.0, 0.0} * Series{1.0, -1.0, 0.0}, Series{1.0, 0.0, -1.0}) == 0.0);
  CHECK(max_coeff_distance(Series{1.0, 1.0} * Series{1.0, -1.0}, Series{1.0, 0.0}) == 0.0);
  CHECK(multiply(Series{1.0, 1.0}, Series{1.0, -1.0}, 2)[2] == C(-1.0));
  const Series a{C(0.5, -1), 2.0, C(0, 3)};
  CHECK(max_coeff_distance(a * Series{1.0}, a) == 0.0);

  // telescoping: (sum_{n<=10} z^n)(1 - z) = 1 - z^11, truncated at 10 -> 1
  const Series p = multiply(geometric(10, 1.0), Series{1.0, -1.0}, 10);
  CHECK(p.order() == 10);
  CHECK(max_coeff_distance(p, Series{1.0}) == 0.0);
}

TEST_CASE("division") {
  const Series inv = divide(Series{1.0}, Series{1.0, -1.0}, 6);
  CHECK(max_coeff_distance(inv, geometric(6, 1.0)) == 0.0);

  const Series a{C(2, 1), 3.0, C(-1, 0.5)};
  CHECK(max_coeff_distance(a / a, Series{1.0}) <= 1e-15);

  // (1+z)/(1-z)^4: coefficients are the square pyramidal numbers 1, 5, 14, 30, 55, 91
  const Series one_minus_z = Series{1.0, -1.0}.resized(5);
  const Series den = one_minus_z * one_minus_z * one_minus_z * one_minus_z;
  const Series q = divide(Series{1.0, 1.0}, den, 5);
  const double expected[] = {1, 5, 14, 30, 55, 91};
  for (int n = 0; n <= 5; ++n) CHECK(std::abs(q[n] - expected[n]) <= 1e-12);

  CHECK_THROWS_AS(divide(Series{1.0}, Series{0.0, 1.0}), DivisionByNonUnit);
  CHECK_THROWS_AS(divide(Series{1.0}, Series{1e-15, 1.0}), DivisionByNonUnit);
  CHECK_NOTHROW(divide(Series{1.0}, Series{1e-13, 1.0}));
}

TEST_CASE("derivative and antiderivative") {
  CHECK(max_coeff_distance(derivative(Series{0.0, 1.0}), Series{1.0}) == 0.0);
  CHECK(max_coeff_distance(derivative(Series{C(4, 2)}), Series{0.0}) == 0.0);
  CHECK(derivative(Series{C(4, 2)}).order() == 0);

  // K = sum n z^n  ->  K' = sum n^2 z^{n-1}
  const Series dk = derivative(koebe_series(6));
  CHECK(dk.order() == 5);
  for (int n = 1; n <= 6; ++n) CHECK(dk[n - 1] == C(n * n));

  CHECK(max_coeff_distance(antiderivative(Series{1.0}), Series{0.0, 1.0}) == 0.0);
  const Series a{C(3, -1), 2.0, C(0, 1), 5.0};
  CHECK(max_coeff_distance(antiderivative(derivative(a)), a - Series{a[0]}) <= 1e-15);

  // int sum n z^{n-1} = sum z^n (no constant)
  Series::Coeffs c(6);
  for (int n = 1; n <= 6; ++n) c[n - 1] = double(n);
  const Series s = antiderivative(Series(c));
  CHECK(s[0] == C(0));
  for (int n = 1; n <= 6; ++n) CHECK(std::abs(s[n] - 1.0) <= 1e-15);
}

TEST_CASE("evaluation") {
  CHECK(evaluate(Series{0.0, 1.0, 1.0}, C(0)) == C(0));
  CHECK(std::abs(evaluate(koebe_series(64), C(0.5)) - 2.0) <= 1e-12);
  CHECK(std::abs(evaluate(geometric(64, 1.0), C(0.5)) - 2.0) <= 1e-12);
}

TEST_CASE("non-finite coefficients are rejected") {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(Series({C(1), C(nan, 0)}), NonFiniteValue);
  CHECK_THROWS_AS(Series({C(0, std::numeric_limits<double>::infinity())}), NonFiniteValue);
}

TEST_CASE("property: ring laws to truncation order") {
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<int> ord(0, 12);
  for (int trial = 0; trial < 200; ++trial) {
    const Series a = random_poly(rng, ord(rng));
    const Series b = random_poly(rng, ord(rng));
    const Series c = random_poly(rng, ord(rng));
    const Eigen::Index n = std::max({a.order(), b.order(), c.order()});
    const Series ab_c = multiply(multiply(a, b, n), c, n);
    const Series a_bc = multiply(a, multiply(b, c, n), n);
    CHECK(max_coeff_distance(ab_c, a_bc) <= 1e-12);
    const Series lhs = multiply(a, b + c, n);
    const Series rhs = multiply(a, b, n) + multiply(a, c, n);
    CHECK(max_coeff_distance(lhs, rhs) <= 1e-12);
  }
}

TEST_CASE("property: division round trip") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> ord(0, 16);
  std::uniform_real_distribution<double> mag(0.1, 1.0), ph(0.0, 6.283185307179586);
  for (int trial = 0; trial < 200; ++trial) {
    const Series a = random_poly(rng, ord(rng));
    // tail small enough against b(0) that 1/b has bounded coefficients
    const C b0 = std::polar(mag(rng), ph(rng));
    Series::Coeffs bc = random_poly(rng, ord(rng), std::abs(b0) / 48.0).coeffs();
    bc[0] = b0;
    const Series b(bc);
    const Eigen::Index n = std::max(a.order(), b.order());
    const Series q = divide(a, b, n);
    CHECK(max_coeff_distance(multiply(q, b, n), a.resized(n)) <= 1e-12);
  }
}

TEST_CASE("property: derivative agrees with central differences at second order") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u(-0.35, 0.35);
  for (int trial = 0; trial < 50; ++trial) {
    const Series a = random_poly(rng, 10);
    const Series da = derivative(a);
    const C z(u(rng), u(rng));
    double err[2];
    const double hs[2] = {1e-4, 1e-5};
    for (int k = 0; k < 2; ++k) {
      const double h = hs[k];
      const C fd = (evaluate(a, z + h) - evaluate(a, z - h)) / (2.0 * h);
      err[k] = std::abs(evaluate(da, z) - fd);
    }
    // error ~ C h^2: a tenfold smaller step cuts the error ~100x (until rounding takes over)
    CHECK(err[0] <= 1e-6);
    CHECK((err[1] <= err[0] / 50.0 || err[1] <= 1e-9));
  }
}

TEST_CASE("long double instantiation") {
  using LS = PowerSeries<long double>;
  const LS inv = divide(LS{1.0L}, LS{1.0L, -1.0L}, 8);
  for (int n = 0; n <= 8; ++n) CHECK(inv[n] == std::complex<long double>(1.0L));
  CHECK(std::abs(evaluate(koebe_series<long double>(80), std::complex<long double>(0.5L)) - 2.0L) <= 1e-15L);
}
