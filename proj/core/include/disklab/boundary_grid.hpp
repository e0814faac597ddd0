#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <vector>

#include "disklab/numeric.hpp"

namespace disklab {

/// Uniform dyadic grid on the unit circle: 2^m nodes theta_k = 2 pi k / 2^m.
/// The power-of-two size makes every cyclic group G_n, n <= m, act by exact
/// index shifts.
class BoundaryGrid {
 public:
  explicit BoundaryGrid(int log2_size);

  int log2_size() const { return log2_size_; }
  std::size_t size() const { return std::size_t{1} << log2_size_; }
  double theta(std::size_t k) const {
    return kTwoPi * static_cast<double>(k) / static_cast<double>(size());
  }
  Complex node(std::size_t k) const {
    const double t = theta(k);
    return {std::cos(t), std::sin(t)};
  }

  friend bool operator==(const BoundaryGrid&, const BoundaryGrid&) = default;

 private:
  int log2_size_;
};

/// Complex samples on a BoundaryGrid; the computational stand-in for an
/// element of L^inf of the circle. The discrete essential supremum is the
/// max of |values| (grid functions have no null sets).
class BoundaryFunction {
 public:
  BoundaryFunction(BoundaryGrid grid, std::vector<Complex> values);

  static BoundaryFunction constant(BoundaryGrid grid, Complex c);
  static BoundaryFunction sample(BoundaryGrid grid,
                                 const std::function<Complex(Complex)>& f);
  /// Indicator of the node index range [begin, end).
  static BoundaryFunction indicator(BoundaryGrid grid, std::size_t begin,
                                    std::size_t end);
  /// Indicator of the upper half circle, nodes [0, 2^{m-1}).
  static BoundaryFunction half_indicator(BoundaryGrid grid);

  const BoundaryGrid& grid() const { return grid_; }
  std::size_t size() const { return values_.size(); }
  Complex operator[](std::size_t k) const { return values_[k]; }
  Complex& operator[](std::size_t k) { return values_[k]; }
  const std::vector<Complex>& values() const { return values_; }

  double sup_norm() const;

  /// Cyclic shift by j nodes: output at node k is input at node (k - j) mod N.
  /// Realizes the boundary rotation psi_zeta for the grid-aligned
  /// zeta = e^{2 pi i j / N} exactly; sup-norm preserved exactly.
  BoundaryFunction rotated(std::size_t j) const;

  BoundaryFunction& operator+=(const BoundaryFunction& o);
  BoundaryFunction& operator-=(const BoundaryFunction& o);
  BoundaryFunction& operator*=(Complex c);
  friend BoundaryFunction operator+(BoundaryFunction a,
                                    const BoundaryFunction& b) {
    a += b;
    return a;
  }
  friend BoundaryFunction operator-(BoundaryFunction a,
                                    const BoundaryFunction& b) {
    a -= b;
    return a;
  }
  friend BoundaryFunction operator*(Complex c, BoundaryFunction f) {
    f *= c;
    return f;
  }

  /// Nodewise product.
  BoundaryFunction hadamard(const BoundaryFunction& o) const;

  /// CSV rows `k, re, im`; grid size inferred from row count on read
  /// (must be a power of two, at least 8).
  void write_csv(std::ostream& out) const;
  static BoundaryFunction read_csv(std::istream& in);

  void require_same_grid(const BoundaryFunction& o) const;

 private:
  BoundaryGrid grid_;
  std::vector<Complex> values_;
};

}  // namespace disklab
