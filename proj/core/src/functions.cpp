#include "disklab/functions.hpp"

#include <cmath>
#include <stdexcept>

namespace disklab {

namespace {
Complex normalized(Complex z) {
  const double m = std::abs(z);
  return m == 0.0 ? Complex(1.0, 0.0) : z / m;
}
}  // namespace

DiskFunction::DiskFunction(Eval eval, double sup_bound, double boundary_radius)
    : eval_(std::move(eval)), bound_(sup_bound),
      boundary_radius_(boundary_radius) {
  if (!eval_) throw std::invalid_argument("DiskFunction: empty evaluator");
  if (!(sup_bound >= 0.0)) {
    throw std::invalid_argument("DiskFunction: bound must be >= 0");
  }
  if (!(boundary_radius > 0.0) || boundary_radius > 1.0) {
    throw std::invalid_argument("DiskFunction: boundary radius in (0, 1]");
  }
}

Complex DiskFunction::boundary_value(Complex unit_z) const {
  return eval_(boundary_radius_ * normalized(unit_z));
}

Complex DiskFunction::boundary_value(double theta) const {
  return eval_(boundary_radius_ * Complex(std::cos(theta), std::sin(theta)));
}

BoundaryFunction DiskFunction::sample(const BoundaryGrid& grid) const {
  std::vector<Complex> v(grid.size());
  double worst = 0.0;
  for (std::size_t k = 0; k < v.size(); ++k) {
    v[k] = boundary_value(grid.theta(k));
    worst = std::max(worst, std::abs(v[k]));
  }
  if (worst > bound_ + 1e-9) {
    throw std::domain_error("DiskFunction: samples exceed the declared bound");
  }
  return BoundaryFunction(grid, std::move(v));
}

DiskFunction DiskFunction::compose_inner(const MoebiusAutomorphism& phi) const {
  const DiskFunction self = *this;
  Eval ev = [self, phi](Complex z) {
    const Complex w = phi(z);
    // Interior points stay interior; circle points can land a rounding error
    // outside, where self's proxy protocol applies.
    return std::abs(w) < self.boundary_radius_ ? self(w)
                                               : self.boundary_value(w);
  };
  return DiskFunction(std::move(ev), bound_, 1.0);
}

DiskFunction DiskFunction::constant(Complex c) {
  return DiskFunction([c](Complex) { return c; }, std::abs(c));
}

DiskFunction DiskFunction::polynomial(std::vector<Complex> coeffs) {
  // Dense circle sample. The sampled max can sit below the true sup by
  // about (pi d / 2S)^2 / 2 relatively, so the declared bound is inflated
  // past that margin; otherwise a finer evaluation grid could breach it.
  const std::size_t samples = 512 * (coeffs.size() + 1);
  double bound = 0.0;
  for (std::size_t k = 0; k < samples; ++k) {
    const double t = kTwoPi * static_cast<double>(k) / samples;
    Complex z(std::cos(t), std::sin(t));
    Complex v(0.0, 0.0);
    for (std::size_t j = coeffs.size(); j-- > 0;) v = v * z + coeffs[j];
    bound = std::max(bound, std::abs(v));
  }
  return polynomial(std::move(coeffs), bound * (1.0 + 5e-5));
}

DiskFunction DiskFunction::polynomial(std::vector<Complex> coeffs,
                                      double bound) {
  return DiskFunction(
      [c = std::move(coeffs)](Complex z) {
        Complex v(0.0, 0.0);
        for (std::size_t j = c.size(); j-- > 0;) v = v * z + c[j];
        return v;
      },
      bound);
}

DiskFunction DiskFunction::blaschke(BlaschkeProduct b) {
  return DiskFunction([b = std::move(b)](Complex z) { return b(z); }, 1.0);
}

BoundaryFunction CircleFunction::sample(const BoundaryGrid& grid) const {
  std::vector<Complex> v(grid.size());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = eval_(grid.node(k));
  return BoundaryFunction(grid, std::move(v));
}

CircleFunction CircleFunction::constant(Complex c) {
  return CircleFunction([c](Complex) { return c; });
}

CircleFunction CircleFunction::boundary_of(const DiskFunction& f) {
  return CircleFunction([f](Complex z) { return f.boundary_value(z); });
}

CircleFunction CircleFunction::conjugate_of(const DiskFunction& f) {
  return CircleFunction(
      [f](Complex z) { return std::conj(f.boundary_value(z)); });
}

CircleFunction CircleFunction::unimodular_phase(
    std::function<double(double)> phase) {
  return CircleFunction([p = std::move(phase)](Complex z) {
    const double t = p(std::arg(z));
    return Complex(std::cos(t), std::sin(t));
  });
}

CircleFunction CircleFunction::times(const CircleFunction& o) const {
  const CircleFunction a = *this;
  const CircleFunction b = o;
  return CircleFunction([a, b](Complex z) { return a(z) * b(z); });
}

CircleFunction CircleFunction::compose_inner(
    const MoebiusAutomorphism& phi) const {
  const CircleFunction self = *this;
  return CircleFunction(
      [self, phi](Complex z) { return self(normalized(phi(z))); });
}

}  // namespace disklab
