#pragma once

#include <utility>

#include "hkoebe/harmonic.hpp"
#include "hkoebe/report.hpp"

namespace hkoebe {

/// Indices of the first nonzero coefficients a_p of h and b_q of g.
struct ClassIndex {
  int p = 2;
  int q = 2;

  ClassIndex(int p_, int q_) : p(p_), q(q_) {
    if (p < 2 || q < 2) throw InvalidSpec("class indices p, q must be >= 2");
  }
};

/// |F(z)| >= r / (4 (1 + k r^m)^{2/m}) for F in S_H^0(k, m), r = |z| in [0, 1].
double koebe_lower_bound(double r, const DilatationSpec& spec);

/// Radius 1 / (4 (1 + k)^{2/m}) of the disk covered by every map in S_H^0(k, m).
double koebe_radius_lower(const DilatationSpec& spec);

struct Corollary1Predicate {
  bool stated = false;  ///< k <= 1/2 or m >= 4
  bool exact = false;   ///< (1 + k)^{2/m} <= 3/2, i.e. the covered radius is at least 1/6
};

Corollary1Predicate corollary1_predicate(const DilatationSpec& spec);

struct ClassConstants {
  double R = 0.0;  ///< covering radius 2^{-2q/(q-1)} of S_H^{p,q}
  double d = 0.0;  ///< 2 pi / (3 sqrt(3) R)
};

ClassConstants class_constants(const ClassIndex& idx);

/// Bound on |a_p| for S_H^{p,q}; for p = 2 the smaller of the general bound
/// and the Pick-type refinement d (d R / 2 + 2) - 2.
double coefficient_bound(const ClassIndex& idx);

/// The general bound d^{p-1} (d R / p + p) alone.
double coefficient_bound_general(const ClassIndex& idx);

/// Heinz-type lower bound 3 sqrt(3) R / (2 pi) on the first coefficient of the rescaled map.
double heinz_lower(double R);

/// pi (1 - k^2/(m+1)) for integral m.
double area_lower_bound(const DilatationSpec& spec);

struct RadiusInterval {
  double lower = 0.0;
  double upper = 0.0;
};

/// Bracket on the Koebe radius of S_H^0(1, 3): the covering radius from below,
/// |K_{H,3}(-1)| from above.
RadiusInterval kh3_radius_interval();

}  // namespace hkoebe
