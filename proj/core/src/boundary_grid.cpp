#include "disklab/boundary_grid.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace disklab {

BoundaryGrid::BoundaryGrid(int log2_size) : log2_size_(log2_size) {
  if (log2_size < 3 || log2_size > 26) {
    throw std::invalid_argument("BoundaryGrid: log2_size must be in [3, 26]");
  }
}

BoundaryFunction::BoundaryFunction(BoundaryGrid grid,
                                   std::vector<Complex> values)
    : grid_(grid), values_(std::move(values)) {
  if (values_.size() != grid_.size()) {
    throw std::invalid_argument("BoundaryFunction: value count != grid size");
  }
}

BoundaryFunction BoundaryFunction::constant(BoundaryGrid grid, Complex c) {
  return BoundaryFunction(grid, std::vector<Complex>(grid.size(), c));
}

BoundaryFunction BoundaryFunction::sample(
    BoundaryGrid grid, const std::function<Complex(Complex)>& f) {
  std::vector<Complex> v(grid.size());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = f(grid.node(k));
  return BoundaryFunction(grid, std::move(v));
}

BoundaryFunction BoundaryFunction::indicator(BoundaryGrid grid,
                                             std::size_t begin,
                                             std::size_t end) {
  if (begin > end || end > grid.size()) {
    throw std::invalid_argument("BoundaryFunction::indicator: bad range");
  }
  std::vector<Complex> v(grid.size(), Complex(0.0, 0.0));
  for (std::size_t k = begin; k < end; ++k) v[k] = Complex(1.0, 0.0);
  return BoundaryFunction(grid, std::move(v));
}

BoundaryFunction BoundaryFunction::half_indicator(BoundaryGrid grid) {
  return indicator(grid, 0, grid.size() / 2);
}

double BoundaryFunction::sup_norm() const {
  double m = 0.0;
  for (const Complex& v : values_) m = std::max(m, std::abs(v));
  return m;
}

BoundaryFunction BoundaryFunction::rotated(std::size_t j) const {
  const std::size_t n = values_.size();
  if (j >= n) {
    throw std::invalid_argument("BoundaryFunction::rotated: shift out of range");
  }
  std::vector<Complex> v(n);
  for (std::size_t k = 0; k < n; ++k) v[k] = values_[(k + n - j) % n];
  return BoundaryFunction(grid_, std::move(v));
}

void BoundaryFunction::require_same_grid(const BoundaryFunction& o) const {
  if (!(grid_ == o.grid_)) {
    throw std::invalid_argument("BoundaryFunction: grid mismatch");
  }
}

BoundaryFunction& BoundaryFunction::operator+=(const BoundaryFunction& o) {
  require_same_grid(o);
  for (std::size_t k = 0; k < values_.size(); ++k) values_[k] += o.values_[k];
  return *this;
}

BoundaryFunction& BoundaryFunction::operator-=(const BoundaryFunction& o) {
  require_same_grid(o);
  for (std::size_t k = 0; k < values_.size(); ++k) values_[k] -= o.values_[k];
  return *this;
}

BoundaryFunction& BoundaryFunction::operator*=(Complex c) {
  for (auto& v : values_) v *= c;
  return *this;
}

BoundaryFunction BoundaryFunction::hadamard(const BoundaryFunction& o) const {
  require_same_grid(o);
  std::vector<Complex> v(values_.size());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = values_[k] * o.values_[k];
  return BoundaryFunction(grid_, std::move(v));
}

void BoundaryFunction::write_csv(std::ostream& out) const {
  out.precision(17);
  for (std::size_t k = 0; k < values_.size(); ++k) {
    out << k << ',' << values_[k].real() << ',' << values_[k].imag() << '\n';
  }
}

BoundaryFunction BoundaryFunction::read_csv(std::istream& in) {
  std::vector<Complex> v;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream row(line);
    std::size_t k = 0;
    double re = 0.0, im = 0.0;
    if (!(row >> k >> re >> im)) {
      throw std::invalid_argument("BoundaryFunction CSV: bad row: " + line);
    }
    if (k != v.size()) {
      throw std::invalid_argument("BoundaryFunction CSV: rows out of order");
    }
    v.emplace_back(re, im);
  }
  const std::size_t n = v.size();
  if (n < 8 || (n & (n - 1)) != 0) {
    throw std::invalid_argument(
        "BoundaryFunction CSV: row count must be a power of two >= 8");
  }
  int m = 0;
  while ((std::size_t{1} << m) < n) ++m;
  return BoundaryFunction(BoundaryGrid(m), std::move(v));
}

}  // namespace disklab
