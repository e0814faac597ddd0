#pragma once

#include <complex>
#include <iosfwd>
#include <vector>

#include "disklab/boundary_grid.hpp"
#include "disklab/functions.hpp"

namespace disklab {

/// Finite atomic positive measure on the circle. Atoms carry strictly
/// positive masses at distinct unimodular positions; continuous singular
/// parts are out of scope by design, not silently approximated.
class SingularMeasure {
 public:
  struct Atom {
    double angle;
    double mass;
  };

  explicit SingularMeasure(std::vector<Atom> atoms);
  static SingularMeasure empty() { return SingularMeasure({}); }

  const std::vector<Atom>& atoms() const { return atoms_; }
  double total_mass() const;

  /// CSV rows `theta_j, mass_j`.
  static SingularMeasure read_csv(std::istream& in);

 private:
  std::vector<Atom> atoms_;
};

/// S(z) = exp(-sum_j mass_j (zeta_j + z)/(zeta_j - z)). Modulus < 1 on the
/// open disk; radial boundary modulus -> 1 off the atom set. Evaluation at
/// (or within 1e-13 of) an atom position is rejected.
Complex singular_inner_eval(const SingularMeasure& mu, Complex z);

/// The same map packaged as a DiskFunction with bound 1.
DiskFunction singular_inner(SingularMeasure mu);

/// Outer function F with |F| = exp(logmod) on the boundary, realized as the
/// Herglotz transform of the trigonometric interpolant of the grid data:
///
///   log F(z) = c_0 + 2 sum_{k=1}^{M-1} c_k z^k + c_M z^M,   M = N/2,
///
/// with c_k the discrete Fourier coefficients of logmod. Exact for
/// trig-polynomial log-modulus; spectrally accurate for smooth data. (Naive
/// node quadrature of the singular kernel is off by O(z^N/(1-z^N)) near the
/// boundary, which is catastrophic at the radii this module targets.)
/// Evaluation is capped at |z| <= 1 - 1e-6.
class OuterFunction {
 public:
  /// logmod holds real values log|f| on the grid (imaginary parts must
  /// vanish to 1e-12); all values must be finite.
  explicit OuterFunction(const BoundaryFunction& logmod);

  Complex operator()(Complex z) const;

  static constexpr double radius_cap() { return 1.0 - 1e-6; }

  double max_logmod() const { return max_logmod_; }

  /// Packaged with bound exp(max logmod) and proxy radius at the cap.
  DiskFunction as_disk_function() const;

 private:
  BoundaryGrid grid_;
  std::vector<double> logmod_;
  double max_logmod_;
};

struct InnerCheckReport {
  double max_deviation;
  double mean_deviation;
};

/// Deviation of |values| from 1; gates QuotientFunction denominators and
/// weighted-composition multipliers.
InnerCheckReport inner_check(const BoundaryFunction& f);

/// Boundary quotient f~/g~ with unimodular denominator (inner boundary
/// data). Operations are the pointwise formulas
///   sum:     (f1 g2 + f2 g1)/(g1 g2)
///   product: (f1 f2)/(g1 g2)
///   scalar:  (c f1)/g1
/// and the sup-norm is max|num| (the denominator is unimodular).
class QuotientFunction {
 public:
  QuotientFunction(BoundaryFunction numerator, BoundaryFunction denominator);

  /// f~/1.
  static QuotientFunction over_one(const BoundaryFunction& numerator);

  const BoundaryFunction& numerator() const { return num_; }
  const BoundaryFunction& denominator() const { return den_; }

  QuotientFunction operator+(const QuotientFunction& o) const;
  QuotientFunction operator*(const QuotientFunction& o) const;
  QuotientFunction scaled(Complex c) const;

  BoundaryFunction boundary_values() const;
  double sup_norm() const { return num_.sup_norm(); }

 private:
  BoundaryFunction num_;
  BoundaryFunction den_;
};

}  // namespace disklab
