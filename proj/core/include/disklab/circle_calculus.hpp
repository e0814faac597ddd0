#pragma once

#include <complex>
#include <span>
#include <vector>

#include "disklab/boundary_grid.hpp"
#include "disklab/functions.hpp"
#include "disklab/moebius.hpp"

namespace disklab {

/// Mean of the node values (uniform trapezoid rule on the circle, exact for
/// trigonometric polynomials of degree < grid size). Compensated summation
/// keeps the result independent of evaluation order to ~1 ulp.
Complex circle_average(const BoundaryFunction& f);
Complex circle_average(const DiskFunction& f, const BoundaryGrid& grid);

/// |avg_theta f(phi_a(e^{i theta})) - f(a)|. Vanishes to quadrature accuracy
/// for analytic f: the composed dilations are harmonic, so their circle mean
/// is the center value f(a).
double mean_value_check(const DiskFunction& f, Complex a,
                        const BoundaryGrid& grid);

struct SpreadRecord {
  Complex a;
  double value;       ///< |circle average of f∘phi_a|
  Complex corrector;  ///< unimodular c with c * average = |average|
};

struct SpreadResult {
  double best_value = 0.0;
  Complex argmax{0.0, 0.0};
  std::vector<SpreadRecord> records;  ///< strictly improving record sequence
};

/// Max over candidate points of |circle average of f∘phi_a| together with
/// the record sequence. The supremum over the whole disk need not be
/// attained, so callers get records over their mesh, never a maximizer claim.
SpreadResult unit_spread_search(const DiskFunction& f,
                                std::span<const Complex> candidates,
                                const BoundaryGrid& grid);

/// Grid-data variant: the average of f∘phi_a over the circle equals the
/// Poisson average of f at a, computed here with Poisson weights on the grid.
SpreadResult unit_spread_search(const BoundaryFunction& f,
                                std::span<const Complex> candidates);

/// z -> f(rz); the declared bound carries over (maximum principle). A
/// dilation is always evaluable on the circle directly.
DiskFunction dilate(const DiskFunction& f, double r);

/// Circle mean of log^+ |f(r e^{it})|; nondecreasing in r for analytic f.
double nevanlinna_characteristic(const DiskFunction& f, double r,
                                 const BoundaryGrid& grid);

/// Average over the cyclic group G_n generated by e^{2 pi i / 2^n}, acting
/// by exact index shifts: (T_n f)(z) = 2^{-n} sum_{g in G_n} f(gz).
/// Requires n <= log2_size. One compensated mean per orbit class, computed
/// in canonical ascending index order and broadcast, so the output is
/// exactly periodic with period 2^{m-n}.
BoundaryFunction cyclic_average(const BoundaryFunction& f, int n);

/// Arc [e^{i k 2 pi / 2^n}, e^{i (k+1) 2 pi / 2^n}); at level n the 2^n
/// cells partition the circle, and each cell is a union of grid nodes when
/// n <= log2_size.
struct DyadicCell {
  std::size_t k;
  int level;
  std::size_t node_begin(const BoundaryGrid& grid) const;
  std::size_t node_end(const BoundaryGrid& grid) const;
};

std::vector<DyadicCell> dyadic_cells(int level);

/// Zeroes values outside the cell.
BoundaryFunction cell_restrict(const BoundaryFunction& f,
                               const DyadicCell& cell);

/// Finite realization of the pairing with an L^1 density: mean of f*h over
/// nodes; bilinear; |pairing| <= sup|f| * mean|h|.
Complex weak_star_pair(const BoundaryFunction& f, const BoundaryFunction& h);

/// The default test panel: {1, cos, sin, cos2, sin2, cos3, sin3, 1+cos},
/// each normalized to unit L^1 mean. Low-order trigonometric moments detect
/// the constants and slow modes the averaging operators concern.
std::vector<BoundaryFunction> default_density_panel(const BoundaryGrid& grid);

/// max_j |weak_star_pair(f - g, panel_j)|.
double panel_distance(const BoundaryFunction& f, const BoundaryFunction& g,
                      std::span<const BoundaryFunction> panel);

struct RadialLimitResult {
  Complex estimate;                ///< f at the largest radius
  std::vector<double> increments;  ///< |f(r_{j+1}) - f(r_j)| along the ray
};

/// Radial limit diagnostics along strictly increasing radii in (0,1).
/// Non-convergence shows up in the increments; it is data, not an error
/// (the limit exists only a.e.).
RadialLimitResult radial_limit(const DiskFunction& f, double theta,
                               std::span<const double> radii);

/// Square lattice of step h inside |a| <= max_radius.
std::vector<Complex> disk_mesh(double h, double max_radius);

}  // namespace disklab
