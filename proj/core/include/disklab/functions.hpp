#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "disklab/blaschke.hpp"
#include "disklab/boundary_grid.hpp"
#include "disklab/moebius.hpp"
#include "disklab/numeric.hpp"

namespace disklab {

/// A function on the closed unit disk supplied in closed form, together with
/// a declared sup-norm bound. Boundary evaluation goes through
/// `boundary_value`, which applies the function's safe radius: functions that
/// cannot be evaluated on the circle itself (Herglotz-type integrals) declare
/// a proxy radius < 1 and are sampled just inside instead.
class DiskFunction {
 public:
  using Eval = std::function<Complex(Complex)>;

  DiskFunction(Eval eval, double sup_bound, double boundary_radius = 1.0);

  Complex operator()(Complex z) const { return eval_(z); }

  /// Value at the circle point unit_z (normalized defensively to |.|=1),
  /// through the proxy radius when one is declared.
  Complex boundary_value(Complex unit_z) const;
  Complex boundary_value(double theta) const;

  double bound() const { return bound_; }
  double boundary_radius() const { return boundary_radius_; }

  /// Samples boundary values on the grid. Throws std::domain_error if any
  /// sample exceeds the declared bound by more than 1e-9.
  BoundaryFunction sample(const BoundaryGrid& grid) const;

  /// f∘phi. Same bound; boundary values route through f's own safe radius
  /// applied to the (unimodular) image point.
  DiskFunction compose_inner(const MoebiusAutomorphism& phi) const;

  static DiskFunction constant(Complex c);
  /// p(z) = coeffs[0] + coeffs[1] z + ...; declared bound is the max modulus
  /// over a dense circle sample unless an explicit bound is given.
  static DiskFunction polynomial(std::vector<Complex> coeffs);
  static DiskFunction polynomial(std::vector<Complex> coeffs, double bound);
  static DiskFunction blaschke(BlaschkeProduct b);

 private:
  Eval eval_;
  double bound_;
  double boundary_radius_;
};

/// A measurable symbol on the unit circle in closed form (not required to be
/// a boundary trace of anything analytic; conjugates of inner functions are
/// the typical use). Evaluable at arbitrary circle points, so it composes
/// with automorphisms without grid interpolation.
class CircleFunction {
 public:
  using Eval = std::function<Complex(Complex)>;

  explicit CircleFunction(Eval eval) : eval_(std::move(eval)) {}

  Complex operator()(Complex unit_z) const { return eval_(unit_z); }

  BoundaryFunction sample(const BoundaryGrid& grid) const;

  static CircleFunction constant(Complex c);
  static CircleFunction boundary_of(const DiskFunction& f);
  static CircleFunction conjugate_of(const DiskFunction& f);
  /// zeta -> e^{i phase(theta)} with theta = arg zeta.
  static CircleFunction unimodular_phase(std::function<double(double)> phase);

  CircleFunction times(const CircleFunction& o) const;
  /// this∘phi (phi maps the circle onto itself).
  CircleFunction compose_inner(const MoebiusAutomorphism& phi) const;

 private:
  Eval eval_;
};

}  // namespace disklab
