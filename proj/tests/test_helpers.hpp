#pragma once

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "disklab/numeric.hpp"

namespace disklab::testing {

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline double uniform(std::mt19937_64& g, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(g);
}

inline Complex random_disk(std::mt19937_64& g, double max_radius = 0.95) {
  const double r = std::sqrt(uniform(g, 0.0, 1.0)) * max_radius;
  const double t = uniform(g, 0.0, kTwoPi);
  return {r * std::cos(t), r * std::sin(t)};
}

inline Complex random_unimodular(std::mt19937_64& g) {
  const double t = uniform(g, 0.0, kTwoPi);
  return {std::cos(t), std::sin(t)};
}

inline std::vector<Complex> random_poly_coeffs(std::mt19937_64& g,
                                               std::size_t degree) {
  std::vector<Complex> c(degree + 1);
  for (auto& v : c) v = {uniform(g, -1.0, 1.0), uniform(g, -1.0, 1.0)};
  return c;
}

}  // namespace disklab::testing
