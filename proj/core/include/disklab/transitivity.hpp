#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "disklab/blaschke.hpp"
#include "disklab/boundary_grid.hpp"
#include "disklab/circle_calculus.hpp"
#include "disklab/factorization.hpp"
#include "disklab/functions.hpp"
#include "disklab/minimax_lp.hpp"
#include "disklab/moebius.hpp"

namespace disklab {

/// Weighted composition operator f~ -> psi~ * (f∘phi)~ with a.e. unimodular
/// multiplier psi~ and disk automorphism phi. These are isometries of the
/// discrete sup-norm for constant-modulus boundary data and multiplicative
/// on the algebra; they form a group under composition.
class WeightedCompositionOp {
 public:
  WeightedCompositionOp(CircleFunction multiplier, MoebiusAutomorphism map);

  static WeightedCompositionOp identity();
  /// psi constant alpha, phi an automorphism (the classical surjective
  /// isometries of bounded analytic functions).
  static WeightedCompositionOp classical(Complex alpha,
                                         MoebiusAutomorphism map);
  /// Pure grid rotation by j nodes (phi(z) = e^{2 pi i j / N} z).
  static WeightedCompositionOp grid_rotation(const BoundaryGrid& grid,
                                             std::size_t j);

  const CircleFunction& multiplier() const { return multiplier_; }
  const MoebiusAutomorphism& map() const { return map_; }

  /// Samples psi(zeta_k) * f(phi(zeta_k)) on the grid. The multiplier must
  /// pass inner_check within 1e-9 on the same grid; throws otherwise.
  BoundaryFunction apply(const DiskFunction& f, const BoundaryGrid& grid) const;
  BoundaryFunction apply(const CircleFunction& x, const BoundaryGrid& grid) const;

  /// Grid-data targets support only grid-aligned rotation maps (a = 0 and
  /// rotation angle on a node); anything else would need interpolation and
  /// is rejected.
  BoundaryFunction apply(const BoundaryFunction& x) const;

  /// Lazy symbol of the image, for composing operators without a grid.
  CircleFunction applied(const CircleFunction& x) const;
  CircleFunction applied(const DiskFunction& f) const;

  /// this∘first: apply `first`, then this. Multiplier is
  /// this_psi * (first_psi ∘ this_phi); map is first_phi ∘ this_phi.
  WeightedCompositionOp after(const WeightedCompositionOp& first) const;

 private:
  CircleFunction multiplier_;
  MoebiusAutomorphism map_;
};

std::vector<BoundaryFunction> orbit_sample(
    const DiskFunction& x, std::span<const WeightedCompositionOp> ops,
    const BoundaryGrid& grid);
std::vector<BoundaryFunction> orbit_sample(
    const BoundaryFunction& x, std::span<const WeightedCompositionOp> ops);

/// Weights on a finite family of Blaschke products. Weights are clipped at 0
/// and renormalized to unit sum on construction.
class ConvexCombination {
 public:
  ConvexCombination(std::vector<double> weights,
                    std::vector<BlaschkeProduct> atoms);

  Complex operator()(Complex z) const;
  const std::vector<double>& weights() const { return weights_; }
  const std::vector<BlaschkeProduct>& atoms() const { return atoms_; }

 private:
  std::vector<double> weights_;
  std::vector<BlaschkeProduct> atoms_;
};

struct HullDistanceResult {
  double distance = 0.0;       ///< best true objective found
  std::vector<double> weights;
  double uniform_bound = 0.0;  ///< objective at uniform weights (always >= distance)
  double lp_bound = 0.0;
  bool converged = false;
};

/// Projected weak-star hull membership: min over simplex weights of
/// max_j |<sum_i w_i s_i - target, h_j>| against the density panel. Value 0
/// certifies that the target's panel projection lies in the projected
/// convex hull of the samples.
HullDistanceResult hull_distance(const BoundaryFunction& target,
                                 std::span<const BoundaryFunction> samples,
                                 std::span<const BoundaryFunction> panel);

struct MarshallBudget {
  int starts = 10;        ///< descent starts (structured portfolio first)
  int max_passes = 8;     ///< coordinate-descent passes per start
};

struct MarshallResult {
  ConvexCombination combination;
  double error = 0.0;          ///< achieved sup error over the grid (reported, not asserted optimal)
  std::uint64_t seed = 0;
  int starts_used = 0;
  bool budget_exhausted = false;
};

/// Convex approximation of a bounded-by-1 target by finite Blaschke products
/// of degree <= max_degree (degree 0 = unimodular constants): minimizes the
/// max over grid nodes of |sum_i w_i B_i - target|. Given fixed atoms, the
/// weight subproblem is solved to (cutting-plane) global optimality; atom
/// parameters improve by seeded multistart coordinate descent within the
/// budget.
MarshallResult marshall_approximate(const DiskFunction& target, int atom_count,
                                    int max_degree, const MarshallBudget& budget,
                                    std::uint64_t seed,
                                    const BoundaryGrid& grid);

struct Step1Report {
  std::vector<SpreadRecord> records;
  double best = 0.0;
  Complex argmax{0.0, 0.0};
  bool quotient_reduced = false;
};

/// The average-to-1 mechanism: reduce the input to an inner-multiplier-free
/// representative (a quotient is multiplied by its denominator, which is a
/// rotation of the algebra), then search the mesh for record values of
/// |circle average of x∘phi_a| with their unimodular correctors.
Step1Report step1_demo(const DiskFunction& x, std::span<const Complex> mesh,
                       const BoundaryGrid& grid);
Step1Report step1_demo(const QuotientFunction& x, std::span<const Complex> mesh);

}  // namespace disklab
