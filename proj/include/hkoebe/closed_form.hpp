#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "hkoebe/errors.hpp"
#include "hkoebe/quadrature.hpp"

namespace hkoebe {

enum class ClosedFormKind { AnalyticKoebe, HarmonicKoebe };

/// Names one of the explicit extremal maps: the analytic Koebe function K or
/// the harmonic Koebe function K_{H,m} (shear of K with dilatation z^m), m = 1..4.
struct ClosedFormId {
  ClosedFormKind kind = ClosedFormKind::AnalyticKoebe;
  int m = 0;

  static ClosedFormId koebe() { return {ClosedFormKind::AnalyticKoebe, 0}; }

  static ClosedFormId harmonic_koebe(int m) {
    if (m < 1 || m > 4) throw InvalidSpec("harmonic Koebe closed form exists for m = 1..4, got " + std::to_string(m));
    return {ClosedFormKind::HarmonicKoebe, m};
  }

  /// "K" or "KH_m"; the spelling used in map JSON files.
  std::string name() const { return kind == ClosedFormKind::AnalyticKoebe ? "K" : "KH_" + std::to_string(m); }

  static ClosedFormId parse(const std::string& s) {
    if (s == "K") return koebe();
    if (s.size() == 4 && s.rfind("KH_", 0) == 0 && s[3] >= '1' && s[3] <= '4') return harmonic_koebe(s[3] - '0');
    throw InvalidSpec("unknown closed form '" + s + "' (expected K, KH_1..KH_4)");
  }

  friend bool operator==(const ClosedFormId&, const ClosedFormId&) = default;
};

/// How the arctan inside K_{H,3} and K_{H,4} is continued into the disk.
enum class ArctanBranch {
  Principal,           ///< (1/2i) log((1+i z)/(1-i z)) with the principal log
  RadialContinuation,  ///< integrate d/dt arctan along the ray from the origin
};

/// Holomorphic and anti-holomorphic parts at a point.
template <typename Scalar>
struct HolomorphicParts {
  std::complex<Scalar> h;
  std::complex<Scalar> g;
};

template <typename Scalar>
std::complex<Scalar> arctan_principal(std::complex<Scalar> zeta) {
  const std::complex<Scalar> i(0, 1);
  return std::log((Scalar(1) + i * zeta) / (Scalar(1) - i * zeta)) / (Scalar(2) * i);
}

/// Real part of the principal arctan, finite even at the branch points +-i.
template <typename Scalar>
Scalar arctan_principal_real(std::complex<Scalar> zeta) {
  const Scalar x = zeta.real(), y = zeta.imag();
  return Scalar(0.5) * std::atan2(Scalar(2) * x, Scalar(1) - x * x - y * y);
}

namespace detail {

inline constexpr double kSqrt3 = std::numbers::sqrt3;

// arctan argument for m = 3 and m = 4, and its value at z = 0
template <typename Scalar>
std::complex<Scalar> arctan_argument(int m, std::complex<Scalar> z) {
  if (m == 3) return (Scalar(1) + Scalar(2) * z) / Scalar(kSqrt3);
  return z;
}

template <typename Scalar>
std::complex<Scalar> arctan_radial(int m, std::complex<Scalar> z) {
  const std::complex<double> zd(static_cast<double>(z.real()), static_cast<double>(z.imag()));
  const std::complex<double> dzeta = m == 3 ? 2.0 * zd / kSqrt3 : zd;
  const std::complex<double> zeta0 = m == 3 ? std::complex<double>(1.0 / kSqrt3) : std::complex<double>(0.0);
  const std::complex<double> base = m == 3 ? std::complex<double>(std::numbers::pi / 6) : std::complex<double>(0.0);
  auto integrand = [&](double t) {
    const std::complex<double> zeta = zeta0 + t * dzeta;
    return dzeta / (1.0 + zeta * zeta);
  };
  const std::complex<double> a = base + adaptive_simpson(integrand, 0.0, 1.0, 1e-15, 50);
  return {static_cast<Scalar>(a.real()), static_cast<Scalar>(a.imag())};
}

template <typename Scalar>
std::complex<Scalar> arctan_term(int m, std::complex<Scalar> z, ArctanBranch branch) {
  if (branch == ArctanBranch::RadialContinuation) return arctan_radial(m, z);
  return arctan_principal(arctan_argument(m, z));
}

// arctan coefficient c in h and g (both carry the same c * arctan term)
template <typename Scalar>
Scalar arctan_coefficient(int m) {
  if (m == 3) return Scalar(-4.0 * kSqrt3 / 54.0);
  return Scalar(-0.25);
}

// Rational (arctan-free) parts of h and g.
template <typename Scalar>
HolomorphicParts<Scalar> rational_parts(const ClosedFormId& id, std::complex<Scalar> z) {
  using C = std::complex<Scalar>;
  const C one(1);
  if (id.kind == ClosedFormKind::AnalyticKoebe) {
    return {z / ((one - z) * (one - z)), C(0)};
  }
  const C zm1 = z - one;
  const C cube = zm1 * zm1 * zm1;
  const C z2 = z * z;
  switch (id.m) {
    case 1: {
      const C den = -cube;  // (1 - z)^3
      return {(z - z2 / Scalar(2) + z2 * z / Scalar(6)) / den, (z2 / Scalar(2) + z2 * z / Scalar(6)) / den};
    }
    case 2:
      return {C(Scalar(-1) / Scalar(3)) - one / (Scalar(3) * cube),
              C(Scalar(-1) / Scalar(3)) + (Scalar(-1) + Scalar(3) * z - Scalar(3) * z2) / (Scalar(3) * cube)};
    case 3: {
      const Scalar c0 = Scalar(-27) + Scalar(2 * std::numbers::pi / kSqrt3);
      return {(c0 - Scalar(3) * (Scalar(9) - Scalar(7) * z + Scalar(2) * z2) / cube) / Scalar(54),
              (c0 - (Scalar(27) - Scalar(75) * z + Scalar(60) * z2) / cube) / Scalar(54)};
    }
    default: {
      const C c0(Scalar(-2) / Scalar(3));
      return {c0 - (Scalar(8) - Scalar(9) * z + Scalar(3) * z2) / (Scalar(12) * cube),
              c0 - (Scalar(8) - Scalar(21) * z + Scalar(15) * z2) / (Scalar(12) * cube)};
    }
  }
}

template <typename Scalar>
void check_closed_form_domain(std::complex<Scalar> z) {
  if (std::abs(z) > Scalar(1) + Scalar(1e-12)) throw DomainError("closed form evaluated outside the closed unit disk");
  if (z == std::complex<Scalar>(1)) throw PoleError("closed form has its pole at z = 1");
}

}  // namespace detail

/// h(z) and g(z) of the closed form separately. At the boundary points where
/// the dilatation has modulus one (the arctan branch points) the parts blow up
/// while f = h + conj(g) stays finite; use eval_closed_form there.
template <typename Scalar>
HolomorphicParts<Scalar> closed_form_parts(const ClosedFormId& id, std::complex<Scalar> z,
                                           ArctanBranch branch = ArctanBranch::Principal) {
  detail::check_closed_form_domain(z);
  auto parts = detail::rational_parts(id, z);
  if (id.kind == ClosedFormKind::HarmonicKoebe && id.m >= 3) {
    const auto a = detail::arctan_coefficient<Scalar>(id.m) * detail::arctan_term(id.m, z, branch);
    parts.h += a;
    parts.g += a;
  }
  return parts;
}

/// f(z) = h(z) + conj(g(z)) of the closed form, for |z| <= 1, z != 1.
///
/// For m = 3, 4 the arctan terms of h and conj(g) combine to 2c Re(arctan),
/// whose imaginary (logarithmic) parts cancel; this keeps boundary values
/// finite at the branch points.
template <typename Scalar>
std::complex<Scalar> eval_closed_form(const ClosedFormId& id, std::complex<Scalar> z,
                                      ArctanBranch branch = ArctanBranch::Principal) {
  detail::check_closed_form_domain(z);
  const auto parts = detail::rational_parts(id, z);
  std::complex<Scalar> f = parts.h + std::conj(parts.g);
  if (id.kind == ClosedFormKind::HarmonicKoebe && id.m >= 3) {
    Scalar re_arctan;
    if (branch == ArctanBranch::Principal) {
      re_arctan = arctan_principal_real(detail::arctan_argument(id.m, z));
    } else {
      re_arctan = detail::arctan_radial(id.m, z).real();
    }
    f += Scalar(2) * detail::arctan_coefficient<Scalar>(id.m) * re_arctan;
  }
  return f;
}

}  // namespace hkoebe
