#pragma once

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <complex>
#include <initializer_list>
#include <string>
#include <type_traits>
#include <vector>

#include "hkoebe/errors.hpp"

namespace hkoebe {

/// Threshold below which a constant term counts as zero in series division.
inline constexpr double kUnitTolerance = 1e-14;

/// Default truncation order for jets built by the library.
inline constexpr Eigen::Index kDefaultOrder = 64;

/// Truncated Maclaurin series c_0 + c_1 z + ... + c_N z^N with complex coefficients.
///
/// The order N is part of the value: two series with equal coefficients but
/// different orders are different jets. Arithmetic between series of unequal
/// order zero-pads the shorter one. Coefficients are always finite.
template <typename Scalar = double>
class PowerSeries {
 public:
  using Complex = std::complex<Scalar>;
  using Coeffs = Eigen::Matrix<Complex, Eigen::Dynamic, 1>;

  /// Zero series of order 0.
  PowerSeries() : coeffs_(Coeffs::Zero(1)) {}

  explicit PowerSeries(Coeffs coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.size() == 0) coeffs_ = Coeffs::Zero(1);
    for (Eigen::Index i = 0; i < coeffs_.size(); ++i) {
      if (!std::isfinite(coeffs_[i].real()) || !std::isfinite(coeffs_[i].imag())) {
        throw NonFiniteValue("power series coefficient " + std::to_string(i) + " is not finite");
      }
    }
  }

  PowerSeries(std::initializer_list<Complex> coeffs)
      : PowerSeries(Coeffs(Eigen::Map<const Coeffs>(coeffs.begin(), static_cast<Eigen::Index>(coeffs.size())))) {}

  static PowerSeries zero(Eigen::Index order) { return PowerSeries(Coeffs::Zero(order + 1)); }

  static PowerSeries monomial(Complex c, Eigen::Index power, Eigen::Index order) {
    Coeffs v = Coeffs::Zero(std::max(order, power) + 1);
    v[power] = c;
    return PowerSeries(std::move(v));
  }

  /// The identity germ z, of the given order (at least 1).
  static PowerSeries identity(Eigen::Index order = 1) { return monomial(Complex(1), 1, std::max<Eigen::Index>(order, 1)); }

  Eigen::Index order() const { return coeffs_.size() - 1; }
  const Coeffs& coeffs() const { return coeffs_; }

  /// Coefficient of z^n; zero beyond the truncation order.
  Complex operator[](Eigen::Index n) const { return n <= order() ? coeffs_[n] : Complex(0); }

  /// Same germ re-truncated (or zero-padded) to a new order.
  PowerSeries resized(Eigen::Index new_order) const {
    Coeffs v = Coeffs::Zero(new_order + 1);
    const Eigen::Index n = std::min(new_order, order()) + 1;
    v.head(n) = coeffs_.head(n);
    return PowerSeries(std::move(v));
  }

 private:
  Coeffs coeffs_;
};

using Series = PowerSeries<double>;

template <typename Scalar>
PowerSeries<Scalar> operator+(const PowerSeries<Scalar>& a, const PowerSeries<Scalar>& b) {
  const Eigen::Index n = std::max(a.order(), b.order());
  auto v = a.resized(n).coeffs();
  v += b.resized(n).coeffs();
  return PowerSeries<Scalar>(std::move(v));
}

template <typename Scalar>
PowerSeries<Scalar> operator-(const PowerSeries<Scalar>& a) {
  return PowerSeries<Scalar>(typename PowerSeries<Scalar>::Coeffs(-a.coeffs()));
}

template <typename Scalar>
PowerSeries<Scalar> operator-(const PowerSeries<Scalar>& a, const PowerSeries<Scalar>& b) {
  return a + (-b);
}

template <typename Scalar>
PowerSeries<Scalar> operator*(std::complex<Scalar> s, const PowerSeries<Scalar>& a) {
  return PowerSeries<Scalar>(typename PowerSeries<Scalar>::Coeffs(s * a.coeffs()));
}

/// Cauchy product truncated to `order` (default: the larger input order).
template <typename Scalar>
PowerSeries<Scalar> multiply(const PowerSeries<Scalar>& a, const PowerSeries<Scalar>& b, Eigen::Index order = -1) {
  if (order < 0) order = std::max(a.order(), b.order());
  typename PowerSeries<Scalar>::Coeffs c = PowerSeries<Scalar>::Coeffs::Zero(order + 1);
  for (Eigen::Index i = 0; i <= std::min(order, a.order()); ++i) {
    const auto ai = a.coeffs()[i];
    if (ai == std::complex<Scalar>(0)) continue;
    const Eigen::Index jmax = std::min(order - i, b.order());
    for (Eigen::Index j = 0; j <= jmax; ++j) c[i + j] += ai * b.coeffs()[j];
  }
  return PowerSeries<Scalar>(std::move(c));
}

template <typename Scalar>
PowerSeries<Scalar> operator*(const PowerSeries<Scalar>& a, const PowerSeries<Scalar>& b) {
  return multiply(a, b);
}

/// Series quotient a/b to `order` (default: the larger input order).
/// Throws DivisionByNonUnit when |b(0)| <= kUnitTolerance.
template <typename Scalar>
PowerSeries<Scalar> divide(const PowerSeries<Scalar>& a, const PowerSeries<Scalar>& b, Eigen::Index order = -1) {
  const auto b0 = b.coeffs()[0];
  if (!(std::abs(b0) > Scalar(kUnitTolerance))) {
    throw DivisionByNonUnit("series divisor has vanishing constant term");
  }
  if (order < 0) order = std::max(a.order(), b.order());
  // The recurrence cancels heavily when b has fast-growing coefficients (b = h'
  // of a Koebe-type map), so doubles are carried in long double throughout.
  using Wide = std::conditional_t<std::is_same_v<Scalar, double>, long double, Scalar>;
  using WideC = std::complex<Wide>;
  auto widen = [](const std::complex<Scalar>& x) { return WideC(Wide(x.real()), Wide(x.imag())); };
  std::vector<WideC> q(order + 1), bw(std::min(order, b.order()) + 1);
  for (std::size_t j = 0; j < bw.size(); ++j) bw[j] = widen(b.coeffs()[j]);
  for (Eigen::Index n = 0; n <= order; ++n) {
    WideC acc = widen(a[n]);
    const Eigen::Index jmax = std::min<Eigen::Index>(n, bw.size() - 1);
    for (Eigen::Index j = 1; j <= jmax; ++j) acc -= bw[j] * q[n - j];
    q[n] = acc / bw[0];
  }
  typename PowerSeries<Scalar>::Coeffs c(order + 1);
  for (Eigen::Index n = 0; n <= order; ++n) c[n] = {Scalar(q[n].real()), Scalar(q[n].imag())};
  return PowerSeries<Scalar>(std::move(c));
}

template <typename Scalar>
PowerSeries<Scalar> operator/(const PowerSeries<Scalar>& a, const PowerSeries<Scalar>& b) {
  return divide(a, b);
}

/// Termwise derivative; order drops by one (order-0 input gives the zero series).
template <typename Scalar>
PowerSeries<Scalar> derivative(const PowerSeries<Scalar>& a) {
  if (a.order() == 0) return PowerSeries<Scalar>::zero(0);
  typename PowerSeries<Scalar>::Coeffs c(a.order());
  for (Eigen::Index n = 1; n <= a.order(); ++n) c[n - 1] = Scalar(n) * a.coeffs()[n];
  return PowerSeries<Scalar>(std::move(c));
}

/// Termwise antiderivative vanishing at 0; order grows by one.
template <typename Scalar>
PowerSeries<Scalar> antiderivative(const PowerSeries<Scalar>& a) {
  typename PowerSeries<Scalar>::Coeffs c = PowerSeries<Scalar>::Coeffs::Zero(a.order() + 2);
  for (Eigen::Index n = 0; n <= a.order(); ++n) c[n + 1] = a.coeffs()[n] / Scalar(n + 1);
  return PowerSeries<Scalar>(std::move(c));
}

/// Horner evaluation of the truncated polynomial.
template <typename Scalar>
std::complex<Scalar> evaluate(const PowerSeries<Scalar>& a, std::complex<Scalar> z) {
  std::complex<Scalar> acc(0);
  for (Eigen::Index n = a.order(); n >= 0; --n) acc = acc * z + a.coeffs()[n];
  return acc;
}

/// Largest coefficientwise modulus of a - b (zero-padded).
template <typename Scalar>
Scalar max_coeff_distance(const PowerSeries<Scalar>& a, const PowerSeries<Scalar>& b) {
  const auto d = (a - b).coeffs();
  Scalar m(0);
  for (Eigen::Index i = 0; i < d.size(); ++i) m = std::max(m, std::abs(d[i]));
  return m;
}

}  // namespace hkoebe
