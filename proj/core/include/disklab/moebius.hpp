#pragma once

#include <complex>

#include "disklab/numeric.hpp"

namespace disklab {

/// Automorphism of the unit disk in the canonical form
///
///   phi(z) = lambda * (a - z) / (1 - conj(a) z),   |a| < 1, |lambda| = 1.
///
/// With lambda = 1 the map exchanges a and 0 and is an involution. Every
/// automorphism of the disk has this form; the class is closed under
/// composition and inversion with parameters recovered in canonical form.
/// Note the identity map is (a = 0, lambda = -1).
class MoebiusAutomorphism {
 public:
  /// Identity map.
  MoebiusAutomorphism() : a_(0.0, 0.0), lambda_(-1.0, 0.0) {}

  /// Throws std::invalid_argument if |a| >= 1 or |lambda| deviates from 1
  /// by more than the construction tolerance; lambda is renormalized exactly.
  MoebiusAutomorphism(Complex a, Complex lambda);

  static MoebiusAutomorphism identity() { return MoebiusAutomorphism(); }

  /// The involution exchanging a and 0 (lambda = 1).
  static MoebiusAutomorphism exchange(Complex a) {
    return MoebiusAutomorphism(a, Complex(1.0, 0.0));
  }

  /// z -> e^{i angle} z.
  static MoebiusAutomorphism rotation(double angle);

  /// Evaluation anywhere on the closed disk (the pole 1/conj(a) is outside).
  Complex operator()(Complex z) const {
    return lambda_ * (a_ - z) / (1.0 - std::conj(a_) * z);
  }

  /// Canonical parameters of this∘q, recovered from q^{-1}(a) and one
  /// boundary evaluation.
  MoebiusAutomorphism after(const MoebiusAutomorphism& q) const;

  MoebiusAutomorphism inverse() const;

  Complex a() const { return a_; }
  Complex unimodular_factor() const { return lambda_; }

 private:
  Complex a_;
  Complex lambda_;
};

/// Pseudo-hyperbolic distance |(z-w)/(1 - conj(w) z)| on the open disk.
/// Throws std::invalid_argument if either point lies on or outside the circle.
double pseudo_hyperbolic(Complex z, Complex w);

/// A point of the open unit disk stored as (angle, gap) with gap = 1 - |a|.
/// Near-boundary points keep full relative precision in the gap, which plain
/// complex storage destroys; the sequence analyses in the blaschke module
/// depend on it.
class DiskPoint {
 public:
  static DiskPoint from_polar_gap(double angle, double gap);
  static DiskPoint from_complex(Complex a);

  Complex value() const {
    return (1.0 - gap_) * Complex(std::cos(angle_), std::sin(angle_));
  }
  double angle() const { return angle_; }
  double gap() const { return gap_; }            ///< 1 - |a|
  double modulus() const { return 1.0 - gap_; }  ///< |a|
  double one_minus_sq() const { return gap_ * (2.0 - gap_); }  ///< 1 - |a|^2

 private:
  DiskPoint(double angle, double gap) : angle_(angle), gap_(gap) {}
  double angle_;
  double gap_;
};

/// |e^{i zeta_angle} - a|^2 without cancellation:
/// g^2 + 4(1-g) sin^2((zeta_angle - angle)/2).
double boundary_distance_sq(const DiskPoint& a, double zeta_angle);

/// Pseudo-hyperbolic distance computed from (angle, gap) data; stable for
/// pairs arbitrarily close to the boundary.
double pseudo_hyperbolic(const DiskPoint& z, const DiskPoint& w);

}  // namespace disklab
