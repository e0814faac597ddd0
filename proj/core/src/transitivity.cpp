#include "disklab/transitivity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace disklab {

WeightedCompositionOp::WeightedCompositionOp(CircleFunction multiplier,
                                             MoebiusAutomorphism map)
    : multiplier_(std::move(multiplier)), map_(map) {}

WeightedCompositionOp WeightedCompositionOp::identity() {
  return WeightedCompositionOp(CircleFunction::constant(Complex(1.0, 0.0)),
                               MoebiusAutomorphism::identity());
}

WeightedCompositionOp WeightedCompositionOp::classical(
    Complex alpha, MoebiusAutomorphism map) {
  if (std::abs(std::abs(alpha) - 1.0) > kUnimodularConstructionTol) {
    throw std::invalid_argument("classical: |alpha| must be 1");
  }
  return WeightedCompositionOp(CircleFunction::constant(alpha / std::abs(alpha)),
                               map);
}

WeightedCompositionOp WeightedCompositionOp::grid_rotation(
    const BoundaryGrid& grid, std::size_t j) {
  if (j >= grid.size()) {
    throw std::invalid_argument("grid_rotation: shift out of range");
  }
  return WeightedCompositionOp(CircleFunction::constant(Complex(1.0, 0.0)),
                               MoebiusAutomorphism::rotation(grid.theta(j)));
}

namespace {

void require_unimodular_multiplier(const CircleFunction& psi,
                                   const BoundaryGrid& grid) {
  if (inner_check(psi.sample(grid)).max_deviation > 1e-9) {
    throw std::invalid_argument(
        "WeightedCompositionOp: multiplier fails inner_check (1e-9)");
  }
}

}  // namespace

BoundaryFunction WeightedCompositionOp::apply(const DiskFunction& f,
                                              const BoundaryGrid& grid) const {
  require_unimodular_multiplier(multiplier_, grid);
  return applied(f).sample(grid);
}

BoundaryFunction WeightedCompositionOp::apply(const CircleFunction& x,
                                              const BoundaryGrid& grid) const {
  require_unimodular_multiplier(multiplier_, grid);
  return applied(x).sample(grid);
}

CircleFunction WeightedCompositionOp::applied(const CircleFunction& x) const {
  const CircleFunction psi = multiplier_;
  const CircleFunction composed = x.compose_inner(map_);
  return psi.times(composed);
}

CircleFunction WeightedCompositionOp::applied(const DiskFunction& f) const {
  return applied(CircleFunction::boundary_of(f));
}

BoundaryFunction WeightedCompositionOp::apply(const BoundaryFunction& x) const {
  const BoundaryGrid& grid = x.grid();
  if (std::abs(map_.a()) > 1e-15) {
    throw std::invalid_argument(
        "apply: grid data supports only grid-aligned rotations");
  }
  // phi(zeta) = -lambda zeta = e^{i angle} zeta; snap angle to a node.
  const double angle = std::arg(-map_.unimodular_factor());
  const double step = kTwoPi / static_cast<double>(grid.size());
  double ratio = angle / step;
  ratio -= std::floor(ratio / static_cast<double>(grid.size())) *
           static_cast<double>(grid.size());
  const std::size_t j =
      static_cast<std::size_t>(std::llround(ratio)) % grid.size();
  if (std::abs(std::remainder(angle - static_cast<double>(j) * step, kTwoPi)) >
      1e-12) {
    throw std::invalid_argument(
        "apply: rotation angle is not aligned with the grid");
  }
  const BoundaryFunction psi = multiplier_.sample(grid);
  if (inner_check(psi).max_deviation > 1e-9) {
    throw std::invalid_argument(
        "WeightedCompositionOp: multiplier fails inner_check (1e-9)");
  }
  // out[k] = psi_k * x[(k + j) mod N]
  return psi.hadamard(x.rotated((grid.size() - j) % grid.size()));
}

WeightedCompositionOp WeightedCompositionOp::after(
    const WeightedCompositionOp& first) const {
  // this(first(f)) = this_psi * (first_psi ∘ this_phi) * f ∘ (first_phi ∘ this_phi)
  CircleFunction psi =
      multiplier_.times(first.multiplier_.compose_inner(map_));
  return WeightedCompositionOp(std::move(psi), first.map_.after(map_));
}

std::vector<BoundaryFunction> orbit_sample(
    const DiskFunction& x, std::span<const WeightedCompositionOp> ops,
    const BoundaryGrid& grid) {
  std::vector<BoundaryFunction> orbit;
  orbit.reserve(ops.size());
  for (const auto& op : ops) {
    require_unimodular_multiplier(op.multiplier(), grid);
    orbit.push_back(op.apply(x, grid));
  }
  return orbit;
}

std::vector<BoundaryFunction> orbit_sample(
    const BoundaryFunction& x, std::span<const WeightedCompositionOp> ops) {
  std::vector<BoundaryFunction> orbit;
  orbit.reserve(ops.size());
  for (const auto& op : ops) orbit.push_back(op.apply(x));
  return orbit;
}

ConvexCombination::ConvexCombination(std::vector<double> weights,
                                     std::vector<BlaschkeProduct> atoms)
    : weights_(std::move(weights)), atoms_(std::move(atoms)) {
  if (weights_.size() != atoms_.size() || weights_.empty()) {
    throw std::invalid_argument("ConvexCombination: weights/atoms mismatch");
  }
  double sum = 0.0;
  for (double& w : weights_) {
    if (w < -1e-9) {
      throw std::invalid_argument("ConvexCombination: negative weight");
    }
    w = std::max(w, 0.0);
    sum += w;
  }
  if (!(sum > 0.0)) {
    throw std::invalid_argument("ConvexCombination: zero weight mass");
  }
  for (double& w : weights_) w /= sum;
}

Complex ConvexCombination::operator()(Complex z) const {
  Complex v(0.0, 0.0);
  for (std::size_t i = 0; i < atoms_.size(); ++i) v += weights_[i] * atoms_[i](z);
  return v;
}

HullDistanceResult hull_distance(const BoundaryFunction& target,
                                 std::span<const BoundaryFunction> samples,
                                 std::span<const BoundaryFunction> panel) {
  if (samples.empty()) {
    throw std::invalid_argument("hull_distance: need at least one sample");
  }
  if (panel.empty()) {
    throw std::invalid_argument("hull_distance: panel must be nonempty");
  }
  std::vector<std::vector<Complex>> pairings(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    samples[i].require_same_grid(target);
    pairings[i].resize(panel.size());
    for (std::size_t j = 0; j < panel.size(); ++j) {
      pairings[i][j] = weak_star_pair(samples[i], panel[j]);
    }
  }
  std::vector<Complex> target_pairings(panel.size());
  for (std::size_t j = 0; j < panel.size(); ++j) {
    target_pairings[j] = weak_star_pair(target, panel[j]);
  }

  const MinimaxResult mm = minimize_max_modulus(pairings, target_pairings);

  HullDistanceResult out;
  out.distance = mm.value;
  out.weights = mm.weights;
  out.lp_bound = mm.lp_bound;
  out.converged = mm.converged;
  // Objective at uniform weights; the solver's candidate pool contains this
  // point, so distance <= uniform_bound holds by construction.
  const double u = 1.0 / static_cast<double>(samples.size());
  double worst = 0.0;
  for (std::size_t j = 0; j < panel.size(); ++j) {
    Complex v = -target_pairings[j];
    for (std::size_t i = 0; i < samples.size(); ++i) v += u * pairings[i][j];
    worst = std::max(worst, std::abs(v));
  }
  out.uniform_bound = worst;
  return out;
}

namespace {

constexpr double kZeroRadiusCap = 0.995;

struct AtomState {
  double beta = 0.0;            // angle of the unimodular factor
  std::vector<Complex> zeros;   // degree = zeros.size()
};

BlaschkeProduct to_product(const AtomState& s) {
  std::vector<DiskPoint> zs;
  zs.reserve(s.zeros.size());
  for (Complex z : s.zeros) zs.push_back(DiskPoint::from_complex(z));
  return BlaschkeProduct(Complex(std::cos(s.beta), std::sin(s.beta)),
                         std::move(zs));
}

Complex clamp_zero(Complex z) {
  const double m = std::abs(z);
  return m > kZeroRadiusCap ? z * (kZeroRadiusCap / m) : z;
}

class MarshallSearch {
 public:
  MarshallSearch(const DiskFunction& target, const BoundaryGrid& grid)
      : nodes_(grid.size()), target_samples_(grid.size()) {
    const BoundaryFunction t = target.sample(grid);
    for (std::size_t k = 0; k < grid.size(); ++k) {
      nodes_[k] = grid.node(k);
      target_samples_[k] = t[k];
    }
  }

  // Returns the weight-LP error for the current atom states.
  double solve(const std::vector<AtomState>& atoms,
               std::vector<double>* weights) {
    std::vector<std::vector<Complex>> samples(atoms.size());
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      samples[i] = sample_atom(atoms[i]);
    }
    const MinimaxResult mm = minimize_max_modulus(samples, target_samples_);
    if (weights) *weights = mm.weights;
    return mm.value;
  }

  std::vector<Complex> sample_atom(const AtomState& s) const {
    const BlaschkeProduct b = to_product(s);
    std::vector<Complex> v(nodes_.size());
    for (std::size_t k = 0; k < nodes_.size(); ++k) v[k] = b(nodes_[k]);
    return v;
  }

  // Coordinate descent over (beta, zero re/im) with adaptive step line
  // search; returns the final error and weights.
  double descend(std::vector<AtomState>& atoms, int max_passes,
                 std::vector<double>* weights) {
    double err = solve(atoms, weights);
    if (err <= 1e-14) return err;
    for (int pass = 0; pass < max_passes; ++pass) {
      const double err_before = err;
      for (std::size_t i = 0; i < atoms.size(); ++i) {
        err = line_search(
            atoms, weights, err, [&](double v) { atoms[i].beta = v; },
            [&] { return atoms[i].beta; }, 0.5);
        for (std::size_t zi = 0; zi < atoms[i].zeros.size(); ++zi) {
          err = line_search(
              atoms, weights, err,
              [&](double v) {
                atoms[i].zeros[zi] = clamp_zero(
                    Complex(v, atoms[i].zeros[zi].imag()));
              },
              [&] { return atoms[i].zeros[zi].real(); }, 0.2);
          err = line_search(
              atoms, weights, err,
              [&](double v) {
                atoms[i].zeros[zi] = clamp_zero(
                    Complex(atoms[i].zeros[zi].real(), v));
              },
              [&] { return atoms[i].zeros[zi].imag(); }, 0.2);
        }
        if (err <= 1e-14) return err;
      }
      if (err_before - err < 1e-15) break;
    }
    return err;
  }

 private:
  template <typename Setter, typename Getter>
  double line_search(std::vector<AtomState>& atoms,
                     std::vector<double>* weights, double err, Setter set,
                     Getter get, double initial_step) {
    double step = initial_step;
    // Resolution scales with the current error: full depth only matters
    // near exact optima, and stalled starts should fail fast.
    while (step > std::max(1e-13, 1e-7 * err)) {
      const double base = get();
      bool moved = false;
      for (double sign : {+1.0, -1.0}) {
        set(base + sign * step);
        std::vector<double> w;
        const double trial = solve(atoms, &w);
        if (trial < err) {
          err = trial;
          if (weights) *weights = std::move(w);
          moved = true;
          break;
        }
        set(base);
      }
      if (moved) {
        step = std::min(step * 1.7, initial_step * 4.0);
        if (err <= 1e-14) return err;
      } else {
        step *= 0.45;
      }
    }
    return err;
  }

  std::vector<Complex> nodes_;
  std::vector<Complex> target_samples_;
};

std::vector<std::vector<AtomState>> structured_starts(int atom_count,
                                                      int max_degree) {
  std::vector<std::vector<AtomState>> starts;
  auto uniform_degree = [&](int deg) {
    std::vector<AtomState> s(atom_count);
    for (int i = 0; i < atom_count; ++i) {
      s[i].beta = kTwoPi * static_cast<double>(i) / atom_count;
      s[i].zeros.assign(deg, Complex(0.0, 0.0));
    }
    return s;
  };
  starts.push_back(uniform_degree(0));
  if (max_degree >= 1) {
    // Monomial ladder: degrees 0,1,2,... with beta = pi*(deg mod 2), i.e.
    // atoms 1, z, z^2, ... exactly.
    std::vector<AtomState> ladder(atom_count);
    for (int i = 0; i < atom_count; ++i) {
      const int deg = std::min(i, max_degree);
      ladder[i].beta = (deg % 2 == 1) ? kPi : 0.0;
      ladder[i].zeros.assign(deg, Complex(0.0, 0.0));
    }
    starts.push_back(ladder);
    for (int deg = 1; deg <= max_degree; ++deg) {
      starts.push_back(uniform_degree(deg));
    }
    // Ladder with spread angles.
    std::vector<AtomState> spread = ladder;
    for (int i = 0; i < atom_count; ++i) {
      spread[i].beta = kTwoPi * static_cast<double>(i) / atom_count;
    }
    starts.push_back(spread);
  }
  return starts;
}

}  // namespace

MarshallResult marshall_approximate(const DiskFunction& target, int atom_count,
                                    int max_degree,
                                    const MarshallBudget& budget,
                                    std::uint64_t seed,
                                    const BoundaryGrid& grid) {
  if (atom_count < 1) {
    throw std::invalid_argument("marshall_approximate: need at least one atom");
  }
  if (max_degree < 0) {
    throw std::invalid_argument("marshall_approximate: degree must be >= 0");
  }
  if (target.bound() > 1.0 + 1e-12) {
    throw std::invalid_argument(
        "marshall_approximate: target bound must be <= 1");
  }
  if (budget.starts < 1 || budget.max_passes < 1) {
    throw std::invalid_argument("marshall_approximate: empty budget");
  }

  MarshallSearch search(target, grid);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle_dist(0.0, kTwoPi);
  std::uniform_int_distribution<int> degree_dist(0, max_degree);
  std::uniform_real_distribution<double> radius_dist(0.0, 0.6);

  auto random_start = [&]() {
    std::vector<AtomState> s(atom_count);
    for (auto& atom : s) {
      atom.beta = angle_dist(rng);
      const int deg = degree_dist(rng);
      atom.zeros.resize(deg);
      for (auto& z : atom.zeros) {
        const double r = radius_dist(rng);
        const double t = angle_dist(rng);
        z = Complex(r * std::cos(t), r * std::sin(t));
      }
    }
    return s;
  };

  std::vector<std::vector<AtomState>> starts =
      structured_starts(atom_count, max_degree);
  while (static_cast<int>(starts.size()) < budget.starts) {
    starts.push_back(random_start());
  }
  if (static_cast<int>(starts.size()) > budget.starts) {
    starts.resize(budget.starts);
  }

  double best_err = std::numeric_limits<double>::infinity();
  std::vector<AtomState> best_atoms;
  std::vector<double> best_weights;
  int used = 0;
  for (auto& start : starts) {
    ++used;
    std::vector<double> w;
    const double err = search.descend(start, budget.max_passes, &w);
    if (err < best_err) {
      best_err = err;
      best_atoms = start;
      best_weights = w;
    }
    if (best_err <= 1e-14) break;
  }

  std::vector<BlaschkeProduct> atoms;
  atoms.reserve(best_atoms.size());
  for (const auto& s : best_atoms) atoms.push_back(to_product(s));
  MarshallResult out{ConvexCombination(best_weights, std::move(atoms)),
                     best_err, seed, used, best_err > 1e-13};
  return out;
}

Step1Report step1_demo(const DiskFunction& x, std::span<const Complex> mesh,
                       const BoundaryGrid& grid) {
  const SpreadResult spread = unit_spread_search(x, mesh, grid);
  return {spread.records, spread.best_value, spread.argmax, false};
}

Step1Report step1_demo(const QuotientFunction& x,
                       std::span<const Complex> mesh) {
  // Multiplying by the inner denominator is a rotation of the algebra and
  // leaves the numerator as the representative.
  const SpreadResult spread = unit_spread_search(x.numerator(), mesh);
  return {spread.records, spread.best_value, spread.argmax, true};
}

}  // namespace disklab
