#include "disklab/circle_calculus.hpp"

#include <cmath>
#include <stdexcept>

namespace disklab {

Complex circle_average(const BoundaryFunction& f) {
  return compensated_mean(std::span<const Complex>(f.values()));
}

Complex circle_average(const DiskFunction& f, const BoundaryGrid& grid) {
  return circle_average(f.sample(grid));
}

double mean_value_check(const DiskFunction& f, Complex a,
                        const BoundaryGrid& grid) {
  if (std::abs(a) >= 1.0) {
    throw std::invalid_argument("mean_value_check: |a| must be < 1");
  }
  const MoebiusAutomorphism phi = MoebiusAutomorphism::exchange(a);
  CompensatedComplexSum s;
  for (std::size_t k = 0; k < grid.size(); ++k) {
    s.add(f.boundary_value(phi(grid.node(k))));
  }
  const Complex avg = s.value() / static_cast<double>(grid.size());
  return std::abs(avg - f(a));
}

namespace {

SpreadResult spread_from_averages(
    std::span<const Complex> candidates,
    const std::function<Complex(Complex)>& average_at) {
  SpreadResult out;
  for (Complex a : candidates) {
    const Complex avg = average_at(a);
    const double value = std::abs(avg);
    if (value > out.best_value || out.records.empty()) {
      const Complex corrector =
          value == 0.0 ? Complex(1.0, 0.0) : std::conj(avg) / value;
      out.best_value = value;
      out.argmax = a;
      out.records.push_back({a, value, corrector});
    }
  }
  return out;
}

}  // namespace

SpreadResult unit_spread_search(const DiskFunction& f,
                                std::span<const Complex> candidates,
                                const BoundaryGrid& grid) {
  return spread_from_averages(candidates, [&](Complex a) {
    if (std::abs(a) >= 1.0) {
      throw std::invalid_argument("unit_spread_search: candidates must lie in the open disk");
    }
    const MoebiusAutomorphism phi = MoebiusAutomorphism::exchange(a);
    CompensatedComplexSum s;
    for (std::size_t k = 0; k < grid.size(); ++k) {
      s.add(f.boundary_value(phi(grid.node(k))));
    }
    return s.value() / static_cast<double>(grid.size());
  });
}

SpreadResult unit_spread_search(const BoundaryFunction& f,
                                std::span<const Complex> candidates) {
  const BoundaryGrid& grid = f.grid();
  return spread_from_averages(candidates, [&](Complex a) {
    if (std::abs(a) >= 1.0) {
      throw std::invalid_argument("unit_spread_search: candidates must lie in the open disk");
    }
    // Poisson average: avg_theta f(phi_a(e^{i theta})) = P[f](a).
    const double one_minus_sq = 1.0 - std::norm(a);
    CompensatedComplexSum s;
    for (std::size_t k = 0; k < grid.size(); ++k) {
      const Complex zeta = grid.node(k);
      s.add(f[k] * (one_minus_sq / std::norm(zeta - a)));
    }
    return s.value() / static_cast<double>(grid.size());
  });
}

DiskFunction dilate(const DiskFunction& f, double r) {
  if (!(r > 0.0) || !(r < 1.0)) {
    throw std::invalid_argument("dilate: r must lie in (0, 1)");
  }
  const DiskFunction g = f;
  return DiskFunction([g, r](Complex z) { return g(r * z); }, f.bound(), 1.0);
}

double nevanlinna_characteristic(const DiskFunction& f, double r,
                                 const BoundaryGrid& grid) {
  if (!(r > 0.0) || !(r < 1.0)) {
    throw std::invalid_argument("nevanlinna_characteristic: r must lie in (0, 1)");
  }
  CompensatedSum s;
  for (std::size_t k = 0; k < grid.size(); ++k) {
    s.add(log_plus(std::abs(f(r * grid.node(k)))));
  }
  return s.value() / static_cast<double>(grid.size());
}

BoundaryFunction cyclic_average(const BoundaryFunction& f, int n) {
  const int m = f.grid().log2_size();
  if (n < 0 || n > m) {
    throw std::invalid_argument("cyclic_average: need 0 <= n <= log2_size");
  }
  const std::size_t size = f.size();
  const std::size_t step = size >> n;        // class count and shift unit
  const std::size_t orbit = std::size_t{1} << n;
  std::vector<Complex> out(size);
  for (std::size_t rep = 0; rep < step; ++rep) {
    CompensatedComplexSum s;
    for (std::size_t t = 0; t < orbit; ++t) s.add(f[rep + t * step]);
    const Complex mean = s.value() / static_cast<double>(orbit);
    for (std::size_t t = 0; t < orbit; ++t) out[rep + t * step] = mean;
  }
  return BoundaryFunction(f.grid(), std::move(out));
}

std::size_t DyadicCell::node_begin(const BoundaryGrid& grid) const {
  return k * (grid.size() >> level);
}

std::size_t DyadicCell::node_end(const BoundaryGrid& grid) const {
  return (k + 1) * (grid.size() >> level);
}

std::vector<DyadicCell> dyadic_cells(int level) {
  if (level < 0 || level > 26) {
    throw std::invalid_argument("dyadic_cells: bad level");
  }
  std::vector<DyadicCell> cells;
  cells.reserve(std::size_t{1} << level);
  for (std::size_t k = 0; k < (std::size_t{1} << level); ++k) {
    cells.push_back({k, level});
  }
  return cells;
}

BoundaryFunction cell_restrict(const BoundaryFunction& f,
                               const DyadicCell& cell) {
  if (cell.level > f.grid().log2_size()) {
    throw std::invalid_argument("cell_restrict: cell finer than the grid");
  }
  std::vector<Complex> v(f.size(), Complex(0.0, 0.0));
  for (std::size_t k = cell.node_begin(f.grid()); k < cell.node_end(f.grid());
       ++k) {
    v[k] = f[k];
  }
  return BoundaryFunction(f.grid(), std::move(v));
}

Complex weak_star_pair(const BoundaryFunction& f, const BoundaryFunction& h) {
  f.require_same_grid(h);
  CompensatedComplexSum s;
  for (std::size_t k = 0; k < f.size(); ++k) s.add(f[k] * h[k]);
  return s.value() / static_cast<double>(f.size());
}

std::vector<BoundaryFunction> default_density_panel(const BoundaryGrid& grid) {
  std::vector<BoundaryFunction> panel;
  auto real_fn = [&](const std::function<double(double)>& g) {
    std::vector<Complex> v(grid.size());
    for (std::size_t k = 0; k < v.size(); ++k) {
      v[k] = Complex(g(grid.theta(k)), 0.0);
    }
    return BoundaryFunction(grid, std::move(v));
  };
  panel.push_back(real_fn([](double) { return 1.0; }));
  panel.push_back(real_fn([](double t) { return std::cos(t); }));
  panel.push_back(real_fn([](double t) { return std::sin(t); }));
  panel.push_back(real_fn([](double t) { return std::cos(2 * t); }));
  panel.push_back(real_fn([](double t) { return std::sin(2 * t); }));
  panel.push_back(real_fn([](double t) { return std::cos(3 * t); }));
  panel.push_back(real_fn([](double t) { return std::sin(3 * t); }));
  panel.push_back(real_fn([](double t) { return 1.0 + std::cos(t); }));
  // Unit L^1 mean across the panel.
  for (auto& h : panel) {
    CompensatedSum s;
    for (std::size_t k = 0; k < h.size(); ++k) s.add(std::abs(h[k]));
    const double mean_abs = s.value() / static_cast<double>(h.size());
    if (mean_abs > 0.0) h *= Complex(1.0 / mean_abs, 0.0);
  }
  return panel;
}

double panel_distance(const BoundaryFunction& f, const BoundaryFunction& g,
                      std::span<const BoundaryFunction> panel) {
  if (panel.empty()) {
    throw std::invalid_argument("panel_distance: panel must be nonempty");
  }
  const BoundaryFunction diff = f - g;
  double worst = 0.0;
  for (const auto& h : panel) {
    worst = std::max(worst, std::abs(weak_star_pair(diff, h)));
  }
  return worst;
}

RadialLimitResult radial_limit(const DiskFunction& f, double theta,
                               std::span<const double> radii) {
  if (radii.empty()) {
    throw std::invalid_argument("radial_limit: need at least one radius");
  }
  double prev = 0.0;
  for (double r : radii) {
    if (!(r > prev) || !(r < 1.0)) {
      throw std::invalid_argument(
          "radial_limit: radii must be strictly increasing in (0, 1)");
    }
    prev = r;
  }
  const Complex dir(std::cos(theta), std::sin(theta));
  RadialLimitResult out;
  Complex last = f(radii[0] * dir);
  for (std::size_t j = 1; j < radii.size(); ++j) {
    const Complex v = f(radii[j] * dir);
    out.increments.push_back(std::abs(v - last));
    last = v;
  }
  out.estimate = last;
  return out;
}

std::vector<Complex> disk_mesh(double h, double max_radius) {
  if (!(h > 0.0) || !(max_radius > 0.0) || max_radius >= 1.0) {
    throw std::invalid_argument("disk_mesh: need h > 0 and max_radius in (0,1)");
  }
  std::vector<Complex> pts;
  const long n = static_cast<long>(std::floor(max_radius / h));
  for (long i = -n; i <= n; ++i) {
    for (long j = -n; j <= n; ++j) {
      const Complex z(static_cast<double>(i) * h, static_cast<double>(j) * h);
      if (std::abs(z) <= max_radius) pts.push_back(z);
    }
  }
  return pts;
}

}  // namespace disklab
