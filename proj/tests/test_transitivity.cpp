#include <doctest.h>

#include <cmath>

#include "disklab/transitivity.hpp"
#include "test_helpers.hpp"

using namespace disklab;
using testing::random_disk;
using testing::random_unimodular;
using testing::rng;
using testing::uniform;

namespace {

// Scaled inner functions have constant boundary modulus, which is the only
// family whose discrete sup-norm is invariant under boundary warps.
DiskFunction scaled_blaschke(std::mt19937_64& g, double scale, int degree) {
  std::vector<DiskPoint> zeros;
  for (int i = 0; i < degree; ++i) {
    zeros.push_back(DiskPoint::from_complex(random_disk(g, 0.8)));
  }
  const BlaschkeProduct b(random_unimodular(g), zeros);
  return DiskFunction([b, scale](Complex z) { return scale * b(z); }, scale);
}

CircleFunction random_phase_multiplier(std::mt19937_64& g) {
  const double c0 = uniform(g, 0.0, kTwoPi);
  const double c1 = uniform(g, -1.0, 1.0);
  const double c2 = uniform(g, -1.0, 1.0);
  return CircleFunction::unimodular_phase([c0, c1, c2](double t) {
    return c0 + c1 * std::sin(t) + c2 * std::cos(2.0 * t);
  });
}

}  // namespace

TEST_CASE("identity operator reproduces boundary samples") {
  const BoundaryGrid grid(8);
  auto g = rng(71);
  const DiskFunction f = scaled_blaschke(g, 0.7, 3);
  const WeightedCompositionOp id = WeightedCompositionOp::identity();
  const BoundaryFunction out = id.apply(f, grid);
  const BoundaryFunction direct = f.sample(grid);
  for (std::size_t k = 0; k < grid.size(); ++k) {
    CHECK(std::abs(out[k] - direct[k]) < 1e-15);
  }
}

TEST_CASE("classical operators preserve the sup-norm of inner data") {
  const BoundaryGrid grid(12);
  auto g = rng(72);
  for (int trial = 0; trial < 10; ++trial) {
    const WeightedCompositionOp t = WeightedCompositionOp::classical(
        random_unimodular(g),
        MoebiusAutomorphism(random_disk(g, 0.9), random_unimodular(g)));
    const DiskFunction f = scaled_blaschke(g, uniform(g, 0.2, 1.0), 3);
    const BoundaryFunction out = t.apply(f, grid);
    CHECK(out.sup_norm() ==
          doctest::Approx(f.sample(grid).sup_norm()).epsilon(1e-9));
  }
}

TEST_CASE("inner data stays inner under every operator") {
  const BoundaryGrid grid(10);
  auto g = rng(73);
  for (int trial = 0; trial < 5; ++trial) {
    const WeightedCompositionOp t(
        random_phase_multiplier(g),
        MoebiusAutomorphism(random_disk(g, 0.9), random_unimodular(g)));
    const DiskFunction f = scaled_blaschke(g, 1.0, 4);
    CHECK(inner_check(t.apply(f, grid)).max_deviation <= 1e-9);
  }
}

TEST_CASE("multiplier failing the unimodularity gate is rejected") {
  const BoundaryGrid grid(8);
  const WeightedCompositionOp bad(CircleFunction::constant({0.5, 0.0}),
                                  MoebiusAutomorphism::identity());
  const DiskFunction f = DiskFunction::constant({1.0, 0.0});
  CHECK_THROWS_AS(bad.apply(f, grid), std::invalid_argument);
}

TEST_CASE("operator composition law") {
  const BoundaryGrid grid(10);
  auto g = rng(74);
  for (int trial = 0; trial < 5; ++trial) {
    const WeightedCompositionOp t(
        random_phase_multiplier(g),
        MoebiusAutomorphism(random_disk(g, 0.8), random_unimodular(g)));
    const WeightedCompositionOp u(
        random_phase_multiplier(g),
        MoebiusAutomorphism(random_disk(g, 0.8), random_unimodular(g)));
    const DiskFunction f = scaled_blaschke(g, 0.9, 2);

    // Apply t, then u, against the composed operator.
    const BoundaryFunction stepwise =
        u.applied(t.applied(CircleFunction::boundary_of(f))).sample(grid);
    const BoundaryFunction composed = u.after(t).apply(f, grid);
    for (std::size_t k = 0; k < grid.size(); ++k) {
      CHECK(std::abs(stepwise[k] - composed[k]) <= 1e-9);
    }
  }
}

TEST_CASE("orbit samples") {
  const BoundaryGrid grid(8);
  auto g = rng(75);

  SUBCASE("identity orbit is the sample itself") {
    const DiskFunction f = scaled_blaschke(g, 0.5, 2);
    const std::vector<WeightedCompositionOp> ops{
        WeightedCompositionOp::identity()};
    const auto orbit = orbit_sample(f, ops, grid);
    REQUIRE(orbit.size() == 1);
    const BoundaryFunction direct = f.sample(grid);
    for (std::size_t k = 0; k < grid.size(); ++k) {
      CHECK(std::abs(orbit[0][k] - direct[k]) < 1e-15);
    }
  }

  SUBCASE("multiplication by the conjugate reaches the constant 1") {
    std::vector<DiskPoint> zeros{DiskPoint::from_complex({0.3, -0.2})};
    const BlaschkeProduct b(Complex(1.0, 0.0), zeros);
    const DiskFunction f = DiskFunction::blaschke(b);
    const std::vector<WeightedCompositionOp> ops{
        WeightedCompositionOp(CircleFunction::conjugate_of(f),
                              MoebiusAutomorphism::identity())};
    const auto orbit = orbit_sample(f, ops, grid);
    for (std::size_t k = 0; k < grid.size(); ++k) {
      CHECK(std::abs(orbit[0][k] - Complex(1.0, 0.0)) <= 1e-12);
    }
  }

  SUBCASE("rotations of the half indicator are distinct exact shifts") {
    const BoundaryFunction h = BoundaryFunction::half_indicator(grid);
    std::vector<WeightedCompositionOp> ops;
    for (std::size_t j = 0; j < 16; ++j) {
      ops.push_back(WeightedCompositionOp::grid_rotation(grid, j * (grid.size() / 16)));
    }
    const auto orbit = orbit_sample(h, ops);
    REQUIRE(orbit.size() == 16);
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      CHECK(orbit[i].sup_norm() == h.sup_norm());
      for (std::size_t j = i + 1; j < orbit.size(); ++j) {
        double diff = 0.0;
        for (std::size_t k = 0; k < grid.size(); ++k) {
          diff = std::max(diff, std::abs(orbit[i][k] - orbit[j][k]));
        }
        CHECK(diff > 0.5);
      }
    }
  }

  SUBCASE("grid data rejects non-rotation maps") {
    const BoundaryFunction h = BoundaryFunction::half_indicator(grid);
    const WeightedCompositionOp t = WeightedCompositionOp::classical(
        {1.0, 0.0}, MoebiusAutomorphism::exchange({0.3, 0.0}));
    CHECK_THROWS_AS(t.apply(h), std::invalid_argument);
  }
}

TEST_CASE("hull distance") {
  const BoundaryGrid grid(8);
  const auto panel_vec = default_density_panel(grid);
  const std::span<const BoundaryFunction> panel(panel_vec);
  auto g = rng(76);

  auto random_bounded = [&](std::mt19937_64& gen) {
    std::vector<Complex> v(grid.size());
    for (auto& x : v) x = uniform(gen, 0.1, 1.0) * random_unimodular(gen);
    return BoundaryFunction(grid, std::move(v));
  };

  SUBCASE("a target among the samples has distance 0") {
    std::vector<BoundaryFunction> samples{random_bounded(g), random_bounded(g),
                                          random_bounded(g)};
    const HullDistanceResult r = hull_distance(samples[1], samples, panel);
    CHECK(r.distance <= 1e-14);
    CHECK(r.weights.size() == 3);
  }

  SUBCASE("rotation orbit averages onto the constant mean") {
    const BoundaryFunction f = random_bounded(g);
    std::vector<BoundaryFunction> samples;
    const std::size_t count = 64;
    for (std::size_t j = 0; j < count; ++j) {
      samples.push_back(f.rotated(j * (grid.size() / count)));
    }
    const BoundaryFunction target =
        BoundaryFunction::constant(grid, circle_average(f));
    const HullDistanceResult r = hull_distance(target, samples, panel);
    CHECK(r.distance <= 1e-10);
    CHECK(r.distance <= r.uniform_bound + 1e-15);
    CHECK(r.uniform_bound <= 1e-10);
  }

  SUBCASE("a target outside the ball is separated") {
    std::vector<BoundaryFunction> samples{random_bounded(g), random_bounded(g)};
    const BoundaryFunction target =
        BoundaryFunction::constant(grid, {2.0, 0.0});
    const HullDistanceResult r = hull_distance(target, samples, panel);
    CHECK(r.distance > 0.9);  // the constant density alone separates
  }

  SUBCASE("monotone under adding samples and shrinking the panel") {
    const BoundaryFunction target = random_bounded(g);
    std::vector<BoundaryFunction> samples{random_bounded(g), random_bounded(g)};
    const HullDistanceResult before = hull_distance(target, samples, panel);
    samples.push_back(random_bounded(g));
    samples.push_back(random_bounded(g));
    const HullDistanceResult after = hull_distance(target, samples, panel);
    CHECK(after.distance <= before.distance + 1e-9);

    const std::span<const BoundaryFunction> small_panel(panel_vec.data(), 3);
    const HullDistanceResult shrunk = hull_distance(target, samples, small_panel);
    CHECK(shrunk.distance <= after.distance + 1e-9);
  }
}

TEST_CASE("marshall approximation: closed-form targets") {
  const BoundaryGrid grid(6);
  const MarshallBudget budget{10, 8};

  SUBCASE("constant 1/2 with two degree-0 atoms") {
    const DiskFunction target = DiskFunction::constant({0.5, 0.0});
    const MarshallResult r =
        marshall_approximate(target, 2, 0, budget, 1234, grid);
    CHECK(r.error <= 1e-12);
    CHECK(r.combination.atoms().size() == 2);
    for (const auto& atom : r.combination.atoms()) CHECK(atom.degree() == 0);
  }

  SUBCASE("z/2 with two degree-1 atoms") {
    const DiskFunction target = DiskFunction::polynomial({0.0, 0.5}, 0.5);
    const MarshallResult r =
        marshall_approximate(target, 2, 1, budget, 1234, grid);
    CHECK(r.error <= 1e-12);
  }

  SUBCASE("(z^2+z)/2 with four atoms of degree <= 2") {
    // The pre-build lattice oracle attains an exact representation
    // (z/2 + z^2/2), so the frozen threshold collapses to the tolerance.
    const DiskFunction target = DiskFunction::polynomial({0.0, 0.5, 0.5}, 1.0);
    const MarshallResult r =
        marshall_approximate(target, 4, 2, budget, 99, grid);
    CHECK(r.error <= 1e-12);
  }

  SUBCASE("weights on the simplex after renormalization") {
    const DiskFunction target = DiskFunction::constant({0.3, 0.2});
    const MarshallResult r =
        marshall_approximate(target, 3, 0, budget, 7, grid);
    double sum = 0.0;
    for (double w : r.combination.weights()) {
      CHECK(w >= 0.0);
      sum += w;
    }
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
  }

  SUBCASE("identical seeds give identical results") {
    const DiskFunction target = DiskFunction::polynomial({0.1, 0.4}, 0.6);
    const MarshallResult a =
        marshall_approximate(target, 2, 1, budget, 321, grid);
    const MarshallResult b =
        marshall_approximate(target, 2, 1, budget, 321, grid);
    CHECK(a.error == b.error);
    REQUIRE(a.combination.weights().size() == b.combination.weights().size());
    for (std::size_t i = 0; i < a.combination.weights().size(); ++i) {
      CHECK(a.combination.weights()[i] == b.combination.weights()[i]);
    }
  }

  SUBCASE("bound violation rejected") {
    const DiskFunction target = DiskFunction::constant({1.5, 0.0});
    CHECK_THROWS_AS(marshall_approximate(target, 2, 0, budget, 1, grid),
                    std::invalid_argument);
  }
}

TEST_CASE("step1: record sequences approach the unit average") {
  const BoundaryGrid grid(10);

  SUBCASE("the constant 1 records 1 immediately") {
    const DiskFunction one = DiskFunction::constant({1.0, 0.0});
    const std::vector<Complex> mesh{{0.0, 0.0}, {0.5, 0.2}};
    const Step1Report rep = step1_demo(one, mesh, grid);
    CHECK(rep.best == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(rep.records.size() == 1);
    CHECK(!rep.quotient_reduced);
  }

  SUBCASE("a trivial quotient reduces and records 1") {
    const BoundaryFunction ones =
        BoundaryFunction::constant(grid, {1.0, 0.0});
    const QuotientFunction q(ones, ones);
    const std::vector<Complex> mesh{{0.0, 0.0}};
    const Step1Report rep = step1_demo(q, mesh);
    CHECK(rep.quotient_reduced);
    CHECK(rep.best == doctest::Approx(1.0).epsilon(1e-12));
  }

  SUBCASE("records on a Blaschke target improve with mesh refinement") {
    std::vector<DiskPoint> zeros{DiskPoint::from_complex({0.4, 0.0})};
    const BlaschkeProduct b(Complex(1.0, 0.0), zeros);
    const DiskFunction f = DiskFunction::blaschke(b);
    const BoundaryGrid fine(12);
    double prev = 0.0;
    for (double h : {0.4, 0.2, 0.1}) {
      const auto mesh = disk_mesh(h, 0.9);
      const Step1Report rep = step1_demo(f, mesh, fine);
      CHECK(rep.best >= prev - 1e-12);
      // unimodular correctors at each record
      for (const auto& rec : rep.records) {
        CHECK(std::abs(std::abs(rec.corrector) - 1.0) <= 1e-12);
      }
      prev = rep.best;
    }
    CHECK(prev > 0.8);
  }
}
