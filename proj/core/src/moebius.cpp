#include "disklab/moebius.hpp"

#include <cmath>
#include <stdexcept>

namespace disklab {

MoebiusAutomorphism::MoebiusAutomorphism(Complex a, Complex lambda)
    : a_(a), lambda_(lambda) {
  if (std::abs(a_) >= 1.0) {
    throw std::invalid_argument("MoebiusAutomorphism: |a| must be < 1");
  }
  const double mod = std::abs(lambda_);
  if (std::abs(mod - 1.0) > kUnimodularConstructionTol) {
    throw std::invalid_argument(
        "MoebiusAutomorphism: |lambda| must be 1 within 1e-14");
  }
  lambda_ /= mod;  // renormalize exactly
}

MoebiusAutomorphism MoebiusAutomorphism::rotation(double angle) {
  // e^{i angle} z = lambda (0 - z)/(1 - 0) with lambda = -e^{i angle}.
  return MoebiusAutomorphism(Complex(0.0, 0.0),
                             -Complex(std::cos(angle), std::sin(angle)));
}

MoebiusAutomorphism MoebiusAutomorphism::inverse() const {
  // (lambda phi_a)^{-1}(w) = phi_a(conj(lambda) w) = conj(lambda) phi_{lambda a}(w).
  return MoebiusAutomorphism(lambda_ * a_, std::conj(lambda_));
}

MoebiusAutomorphism MoebiusAutomorphism::after(
    const MoebiusAutomorphism& q) const {
  // r = this∘q vanishes where q(z) = a, so r.a = q^{-1}(a).
  const Complex ra = q.inverse()(a_);
  // Fix lambda by matching one evaluation; phi_{ra}(1) is unimodular, so the
  // division is well conditioned for every ra.
  const Complex one(1.0, 0.0);
  const Complex phi_at_one = (ra - one) / (one - std::conj(ra));
  Complex rl = (*this)(q(one)) / phi_at_one;
  rl /= std::abs(rl);
  return MoebiusAutomorphism(ra, rl);
}

double pseudo_hyperbolic(Complex z, Complex w) {
  if (std::abs(z) >= 1.0 || std::abs(w) >= 1.0) {
    throw std::invalid_argument(
        "pseudo_hyperbolic: arguments must lie in the open disk");
  }
  // Quotient of moduli, not modulus of the quotient: |w-z| and |1-conj(z)w|
  // round identically to |z-w| and |1-conj(w)z|, so symmetry is exact.
  return std::abs(z - w) / std::abs(1.0 - std::conj(w) * z);
}

DiskPoint DiskPoint::from_polar_gap(double angle, double gap) {
  if (!(gap > 0.0) || !(gap <= 1.0)) {
    throw std::invalid_argument("DiskPoint: gap must lie in (0, 1]");
  }
  return DiskPoint(angle, gap);
}

DiskPoint DiskPoint::from_complex(Complex a) {
  const double mod = std::abs(a);
  if (mod >= 1.0) {
    throw std::invalid_argument("DiskPoint: |a| must be < 1");
  }
  const double angle = (mod == 0.0) ? 0.0 : std::arg(a);
  return DiskPoint(angle, 1.0 - mod);
}

double boundary_distance_sq(const DiskPoint& a, double zeta_angle) {
  const double g = a.gap();
  const double s = std::sin(0.5 * (zeta_angle - a.angle()));
  return g * g + 4.0 * (1.0 - g) * s * s;
}

double pseudo_hyperbolic(const DiskPoint& z, const DiskPoint& w) {
  // |z-w|^2      = (g2-g1)^2 + 4 p sin^2(d/2)
  // |1-conj(w)z|^2 = (g1+g2-g1 g2)^2 + 4 p sin^2(d/2),  p = (1-g1)(1-g2).
  const double g1 = z.gap();
  const double g2 = w.gap();
  const double p = (1.0 - g1) * (1.0 - g2);
  const double s = std::sin(0.5 * (z.angle() - w.angle()));
  const double cross = 4.0 * p * s * s;
  const double dg = g2 - g1;
  const double den = g1 + g2 - g1 * g2;
  return std::sqrt((dg * dg + cross) / (den * den + cross));
}

}  // namespace disklab
