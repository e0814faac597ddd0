#include <doctest.h>

#include <cmath>

#include "disklab/blaschke.hpp"
#include "disklab/circle_calculus.hpp"
#include "test_helpers.hpp"

using namespace disklab;
using testing::random_disk;
using testing::random_poly_coeffs;
using testing::random_unimodular;
using testing::rng;
using testing::uniform;

namespace {

BoundaryFunction random_values(const BoundaryGrid& grid, std::mt19937_64& g) {
  std::vector<Complex> v(grid.size());
  for (auto& x : v) x = {uniform(g, -1.0, 1.0), uniform(g, -1.0, 1.0)};
  return BoundaryFunction(grid, std::move(v));
}

// Values on a dyadic lattice: sums of these never round, so group-average
// identities hold bit-exactly.
BoundaryFunction random_dyadic_values(const BoundaryGrid& grid,
                                      std::mt19937_64& g) {
  std::uniform_int_distribution<int> d(-1024, 1024);
  std::vector<Complex> v(grid.size());
  for (auto& x : v) {
    x = {static_cast<double>(d(g)) / 1024.0, static_cast<double>(d(g)) / 1024.0};
  }
  return BoundaryFunction(grid, std::move(v));
}

}  // namespace

TEST_CASE("circle average basics") {
  const BoundaryGrid grid(8);
  CHECK(circle_average(BoundaryFunction::constant(grid, {0.3, -0.7})) ==
        Complex(0.3, -0.7));
  const BoundaryFunction character =
      BoundaryFunction::sample(grid, [](Complex z) { return z; });
  CHECK(std::abs(circle_average(character)) < 1e-15);
  CHECK(circle_average(BoundaryFunction::half_indicator(grid)) ==
        Complex(0.5, 0.0));
  // Evaluator route on a caller-chosen grid.
  CHECK(std::abs(circle_average(DiskFunction::polynomial({0.0, 1.0}, 1.0),
                                grid)) < 1e-15);
  CHECK(std::abs(circle_average(DiskFunction::constant({0.2, 0.1}), grid) -
                 Complex(0.2, 0.1)) < 1e-15);
}

TEST_CASE("trapezoid rule is exact below the grid frequency and aliases at it") {
  const BoundaryGrid grid(5);
  const auto n = grid.size();
  for (std::size_t k : {std::size_t{1}, n / 2, n - 1}) {
    const BoundaryFunction ck = BoundaryFunction::sample(
        grid, [k](Complex z) { return std::pow(z, static_cast<double>(k)); });
    CHECK(std::abs(circle_average(ck)) < 1e-14);
  }
  // At the grid frequency every node sees 1: the character aliases to the
  // constant, which is the quadrature's stated limit of exactness.
  const BoundaryFunction cn = BoundaryFunction::sample(
      grid, [n](Complex z) { return std::pow(z, static_cast<double>(n)); });
  CHECK(std::abs(circle_average(cn) - Complex(1.0, 0.0)) < 1e-13);
}

TEST_CASE("mean value identity via the automorphism average") {
  const BoundaryGrid grid(12);
  SUBCASE("f(z) = z^2 at a = 0.5") {
    const DiskFunction f = DiskFunction::polynomial({0.0, 0.0, 1.0}, 1.0);
    CHECK(mean_value_check(f, Complex(0.5, 0.0), grid) <= 1e-9);
  }
  SUBCASE("center point") {
    const DiskFunction f = DiskFunction::polynomial({0.1, 0.4, -0.2}, 1.0);
    CHECK(mean_value_check(f, Complex(0.0, 0.0), grid) <= 1e-12);
  }
  SUBCASE("constants vanish exactly") {
    const DiskFunction f = DiskFunction::constant({0.4, 0.2});
    CHECK(mean_value_check(f, Complex(0.3, -0.5), grid) == 0.0);
  }
  SUBCASE("random polynomials of degree <= 16, |a| <= 0.9") {
    auto g = rng(51);
    for (int trial = 0; trial < 5; ++trial) {
      auto coeffs = random_poly_coeffs(g, 16);
      DiskFunction raw = DiskFunction::polynomial(coeffs);
      const double scale = raw.bound();
      for (auto& c : coeffs) c /= scale;
      const DiskFunction f = DiskFunction::polynomial(coeffs, 1.0);
      CHECK(mean_value_check(f, random_disk(g, 0.9), grid) <= 1e-9);
    }
  }
  SUBCASE("holds for Blaschke products too") {
    auto g = rng(57);
    std::vector<DiskPoint> zeros{DiskPoint::from_complex({0.4, -0.1}),
                                 DiskPoint::from_complex({-0.2, 0.5})};
    const DiskFunction f =
        DiskFunction::blaschke(BlaschkeProduct(Complex(1.0, 0.0), zeros));
    for (int trial = 0; trial < 5; ++trial) {
      CHECK(mean_value_check(f, random_disk(g, 0.6), grid) <= 1e-9);
    }
  }
}

TEST_CASE("unit spread search") {
  const BoundaryGrid grid(9);
  SUBCASE("f(z) = z attains |a| on each candidate") {
    const DiskFunction f = DiskFunction::polynomial({0.0, 1.0}, 1.0);
    const std::vector<Complex> candidates{{0.1, 0.0}, {0.0, -0.6}, {0.3, 0.3}};
    const SpreadResult r = unit_spread_search(f, candidates, grid);
    CHECK(r.best_value == doctest::Approx(0.6).epsilon(1e-12));
    CHECK(std::abs(r.argmax - Complex(0.0, -0.6)) < 1e-15);
  }
  SUBCASE("unimodular constants record 1 immediately") {
    const DiskFunction f = DiskFunction::constant(std::polar(1.0, 0.7));
    const std::vector<Complex> candidates{{0.0, 0.0}, {0.5, 0.1}};
    const SpreadResult r = unit_spread_search(f, candidates, grid);
    CHECK(r.best_value == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r.records.size() == 1);
    // corrector * average is real positive
    CHECK(std::abs(r.records[0].corrector) == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("records improve under mesh refinement and match |f(a)|") {
    // Candidates near |a| = 0.95 pull the poles of f∘phi_a to within ~1.02
    // of the circle, so the quadrature needs a 4096-node grid for 1e-9.
    const BoundaryGrid fine_grid(12);
    std::vector<DiskPoint> zeros{DiskPoint::from_complex({0.5, 0.0}),
                                 DiskPoint::from_complex({-0.3, 0.4})};
    const BlaschkeProduct b(Complex(1.0, 0.0), zeros);
    const DiskFunction f = DiskFunction::blaschke(b);
    double prev_best = 0.0;
    for (double h : {0.3, 0.15, 0.075}) {
      const auto mesh = disk_mesh(h, 0.95);
      const SpreadResult r = unit_spread_search(f, mesh, fine_grid);
      // Independent oracle: the average equals f(a), so the search result
      // must match the direct maximum of |f| over the same mesh.
      double direct = 0.0;
      for (Complex a : mesh) direct = std::max(direct, std::abs(b(a)));
      CHECK(r.best_value == doctest::Approx(direct).epsilon(1e-9));
      CHECK(r.best_value >= prev_best - 1e-12);
      prev_best = r.best_value;
    }
    CHECK(prev_best > 0.9);  // deficiency shrinks toward the boundary
  }
  SUBCASE("grid-data variant agrees with the analytic route") {
    const BoundaryGrid fine(11);
    std::vector<DiskPoint> zeros{DiskPoint::from_complex({0.2, -0.4})};
    const BlaschkeProduct b(Complex(1.0, 0.0), zeros);
    const DiskFunction f = DiskFunction::blaschke(b);
    const BoundaryFunction samples = f.sample(fine);
    const std::vector<Complex> candidates{{0.0, 0.0}, {0.4, 0.2}, {-0.5, -0.3}};
    const SpreadResult analytic = unit_spread_search(f, candidates, fine);
    const SpreadResult discrete = unit_spread_search(samples, candidates);
    CHECK(discrete.best_value ==
          doctest::Approx(analytic.best_value).epsilon(1e-9));
  }
}

TEST_CASE("auto-estimated polynomial bounds survive fine grids") {
  auto g = rng(58);
  for (int trial = 0; trial < 10; ++trial) {
    const DiskFunction f = DiskFunction::polynomial(random_poly_coeffs(g, 16));
    CHECK_NOTHROW(f.sample(BoundaryGrid(13)));
  }
}

TEST_CASE("dilation") {
  const DiskFunction f = DiskFunction::polynomial({0.0, 1.0}, 1.0);
  CHECK(std::abs(dilate(f, 0.5)(Complex(1.0, 0.0)) - Complex(0.5, 0.0)) <
        1e-15);
  CHECK(dilate(f, 0.5).bound() == f.bound());
  const DiskFunction g = DiskFunction::polynomial({0.3, 0.5, -0.2}, 1.0);
  CHECK(std::abs(dilate(g, 1e-8)(Complex(1.0, 0.0)) - g(Complex(0.0, 0.0))) <
        1e-6);
  CHECK_THROWS_AS(dilate(f, 1.0), std::invalid_argument);
}

TEST_CASE("nevanlinna characteristic") {
  const BoundaryGrid grid(10);
  SUBCASE("identity map has zero characteristic") {
    const DiskFunction f = DiskFunction::polynomial({0.0, 1.0}, 1.0);
    CHECK(nevanlinna_characteristic(f, 0.9, grid) == 0.0);
  }
  SUBCASE("constant 2 gives log 2") {
    const DiskFunction f = DiskFunction::constant({2.0, 0.0});
    CHECK(nevanlinna_characteristic(f, 0.5, grid) ==
          doctest::Approx(std::log(2.0)).epsilon(1e-14));
  }
  SUBCASE("nondecreasing in r for random polynomials") {
    auto g = rng(53);
    for (int trial = 0; trial < 5; ++trial) {
      const DiskFunction f = DiskFunction::polynomial(random_poly_coeffs(g, 8));
      double prev = 0.0;
      for (int i = 1; i <= 9; ++i) {
        const double t = nevanlinna_characteristic(f, 0.1 * i, grid);
        CHECK(t >= prev - 1e-10);
        prev = t;
      }
    }
  }
}

TEST_CASE("cyclic averaging operators") {
  const BoundaryGrid grid(12);
  auto g = rng(54);

  SUBCASE("constants are fixed exactly") {
    const BoundaryFunction one = BoundaryFunction::constant(grid, {1.0, 0.0});
    for (int n : {0, 1, 5, 12}) {
      const BoundaryFunction t = cyclic_average(one, n);
      for (std::size_t k = 0; k < t.size(); ++k) CHECK(t[k] == Complex(1.0, 0.0));
    }
  }

  SUBCASE("the character e^{i theta} averages to zero for n >= 1") {
    const BoundaryFunction f =
        BoundaryFunction::sample(grid, [](Complex z) { return z; });
    for (int n : {1, 3, 12}) {
      CHECK(cyclic_average(f, n).sup_norm() <= 1e-12);
    }
  }

  SUBCASE("half indicator collapses to 1/2 exactly for n >= 1") {
    const BoundaryFunction h = BoundaryFunction::half_indicator(grid);
    for (int n : {1, 2, 7}) {
      const BoundaryFunction t = cyclic_average(h, n);
      for (std::size_t k = 0; k < t.size(); ++k) CHECK(t[k] == Complex(0.5, 0.0));
    }
  }

  SUBCASE("rejects n beyond the grid") {
    const BoundaryFunction h = BoundaryFunction::half_indicator(grid);
    CHECK_THROWS_AS(cyclic_average(h, 13), std::invalid_argument);
  }

  SUBCASE("sup-norm contraction") {
    const BoundaryFunction f = random_values(grid, g);
    for (int n : {1, 4, 9}) {
      CHECK(cyclic_average(f, n).sup_norm() <= f.sup_norm() * (1.0 + 1e-15));
    }
  }

  SUBCASE("mean preservation") {
    const BoundaryFunction f = random_dyadic_values(grid, g);
    const Complex avg = circle_average(f);
    for (int n : {1, 6, 12}) {
      CHECK(circle_average(cyclic_average(f, n)) == avg);  // dyadic: exact
    }
    const BoundaryFunction fr = random_values(grid, g);
    const Complex avgr = circle_average(fr);
    for (int n : {1, 6}) {
      CHECK(std::abs(circle_average(cyclic_average(fr, n)) - avgr) < 1e-15);
    }
  }

  SUBCASE("semigroup law T_n T_k = T_max(n,k)") {
    // Bit-exact on dyadic lattice data (no rounding anywhere), and to a few
    // ulps on general doubles.
    const BoundaryFunction f = random_dyadic_values(grid, g);
    for (auto [n, k] : std::vector<std::pair<int, int>>{{1, 3}, {3, 1}, {4, 4}, {0, 5}}) {
      const BoundaryFunction lhs = cyclic_average(cyclic_average(f, k), n);
      const BoundaryFunction rhs = cyclic_average(f, std::max(n, k));
      for (std::size_t i = 0; i < f.size(); ++i) CHECK(lhs[i] == rhs[i]);
    }
    const BoundaryFunction fr = random_values(grid, g);
    const BoundaryFunction lhs = cyclic_average(cyclic_average(fr, 5), 2);
    const BoundaryFunction rhs = cyclic_average(fr, 5);
    for (std::size_t i = 0; i < fr.size(); ++i) {
      CHECK(std::abs(lhs[i] - rhs[i]) < 1e-15);
    }
    const BoundaryFunction h = BoundaryFunction::half_indicator(grid);
    const BoundaryFunction lh = cyclic_average(cyclic_average(h, 1), 4);
    const BoundaryFunction rh = cyclic_average(h, 4);
    for (std::size_t i = 0; i < h.size(); ++i) CHECK(lh[i] == rh[i]);
  }

  SUBCASE("weak-star convergence to the mean on indicators") {
    const auto panel = default_density_panel(grid);
    for (const BoundaryFunction& f :
         {BoundaryFunction::half_indicator(grid),
          BoundaryFunction::indicator(grid, 0, grid.size() / 8),
          BoundaryFunction::indicator(grid, 3, 5)}) {
      const BoundaryFunction limit =
          BoundaryFunction::constant(grid, circle_average(f));
      double prev = std::numeric_limits<double>::infinity();
      for (int n = 0; n <= grid.log2_size() - 2; ++n) {
        const double d = panel_distance(cyclic_average(f, n), limit, panel);
        CHECK(d <= prev + 1e-12);
        prev = d;
      }
      CHECK(prev <= 1e-3);
    }
  }
}

TEST_CASE("dyadic cells") {
  const BoundaryGrid grid(6);
  auto g = rng(55);

  SUBCASE("level 0 is the whole circle") {
    const auto cells = dyadic_cells(0);
    REQUIRE(cells.size() == 1);
    CHECK(cells[0].node_begin(grid) == 0);
    CHECK(cells[0].node_end(grid) == grid.size());
  }

  SUBCASE("restrictions sum back to the function exactly") {
    const BoundaryFunction f = random_values(grid, g);
    for (int level : {1, 3, 6}) {
      BoundaryFunction sum = BoundaryFunction::constant(grid, {0.0, 0.0});
      for (const auto& cell : dyadic_cells(level)) {
        sum += cell_restrict(f, cell);
      }
      for (std::size_t k = 0; k < f.size(); ++k) CHECK(sum[k] == f[k]);
    }
  }

  SUBCASE("cell indicators average to 2^-n exactly") {
    for (int level : {0, 2, 5}) {
      const auto cells = dyadic_cells(level);
      const BoundaryFunction ind = cell_restrict(
          BoundaryFunction::constant(grid, {1.0, 0.0}), cells[cells.size() / 2]);
      CHECK(circle_average(ind) == Complex(std::ldexp(1.0, -level), 0.0));
    }
  }

  SUBCASE("cells finer than the grid rejected") {
    const BoundaryFunction f = random_values(grid, g);
    CHECK_THROWS_AS(cell_restrict(f, DyadicCell{0, 7}), std::invalid_argument);
  }
}

TEST_CASE("weak-star pairing") {
  const BoundaryGrid grid(8);
  auto g = rng(56);
  const BoundaryFunction f = random_values(grid, g);
  const BoundaryFunction ones = BoundaryFunction::constant(grid, {1.0, 0.0});

  CHECK(weak_star_pair(f, ones) == circle_average(f));
  CHECK(weak_star_pair(ones, f) == circle_average(f));

  SUBCASE("Hoelder bound on random pairs") {
    for (int trial = 0; trial < 100; ++trial) {
      const BoundaryFunction a = random_values(grid, g);
      const BoundaryFunction h = random_values(grid, g);
      CompensatedSum abs_h;
      for (std::size_t k = 0; k < h.size(); ++k) abs_h.add(std::abs(h[k]));
      const double mean_abs_h = abs_h.value() / static_cast<double>(h.size());
      CHECK(std::abs(weak_star_pair(a, h)) <=
            a.sup_norm() * mean_abs_h * (1.0 + 1e-12));
    }
  }

  SUBCASE("grid mismatch") {
    const BoundaryFunction other = BoundaryFunction::constant(BoundaryGrid(9), 1.0);
    CHECK_THROWS_AS(weak_star_pair(f, other), std::invalid_argument);
  }
}

TEST_CASE("radial limits") {
  SUBCASE("gentle polynomial converges to its boundary value") {
    // Small derivative keeps (1-r)|f'| below the tolerance at the last radius.
    const DiskFunction f = DiskFunction::polynomial(
        {Complex(0.3, 0.0), Complex(1e-4, 0.0), Complex(0.0, 1e-4)});
    std::vector<double> radii;
    for (int i = 1; i <= 10; ++i) radii.push_back(1.0 - std::pow(10.0, -i));
    const RadialLimitResult r = radial_limit(f, 1.1, radii);
    const Complex boundary = f(Complex(std::cos(1.1), std::sin(1.1)));
    CHECK(std::abs(r.estimate - boundary) <= 1e-9);
    // Geometric decay of the increments for functions analytic across the circle.
    for (std::size_t i = 1; i < r.increments.size(); ++i) {
      CHECK(r.increments[i] <= 0.5 * r.increments[i - 1] + 1e-15);
    }
  }
  SUBCASE("constants have zero increments") {
    const DiskFunction f = DiskFunction::constant({0.2, 0.9});
    const std::vector<double> radii{0.1, 0.5, 0.9, 0.99};
    const RadialLimitResult r = radial_limit(f, 0.3, radii);
    for (double inc : r.increments) CHECK(inc == 0.0);
  }
  SUBCASE("radii validation") {
    const DiskFunction f = DiskFunction::constant({1.0, 0.0});
    CHECK_THROWS_AS(radial_limit(f, 0.0, std::vector<double>{0.5, 0.4}),
                    std::invalid_argument);
    CHECK_THROWS_AS(radial_limit(f, 0.0, std::vector<double>{0.5, 1.0}),
                    std::invalid_argument);
  }
}

TEST_CASE("disk mesh") {
  const auto mesh = disk_mesh(0.25, 0.9);
  CHECK(!mesh.empty());
  for (Complex a : mesh) CHECK(std::abs(a) <= 0.9);
  // Contains the origin and is symmetric.
  bool has_origin = false;
  for (Complex a : mesh) {
    if (a == Complex(0.0, 0.0)) has_origin = true;
  }
  CHECK(has_origin);
}
