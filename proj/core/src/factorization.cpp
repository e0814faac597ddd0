#include "disklab/factorization.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>

#include "disklab/numeric.hpp"

namespace disklab {

SingularMeasure::SingularMeasure(std::vector<Atom> atoms)
    : atoms_(std::move(atoms)) {
  for (const Atom& a : atoms_) {
    if (!(a.mass > 0.0)) {
      throw std::invalid_argument("SingularMeasure: masses must be > 0");
    }
  }
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    for (std::size_t j = i + 1; j < atoms_.size(); ++j) {
      const double d = std::remainder(atoms_[i].angle - atoms_[j].angle, kTwoPi);
      if (std::abs(d) < 1e-12) {
        throw std::invalid_argument("SingularMeasure: positions must be distinct");
      }
    }
  }
}

double SingularMeasure::total_mass() const {
  double s = 0.0;
  for (const Atom& a : atoms_) s += a.mass;
  return s;
}

SingularMeasure SingularMeasure::read_csv(std::istream& in) {
  std::vector<Atom> atoms;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream row(line);
    double theta = 0.0, mass = 0.0;
    if (!(row >> theta >> mass)) {
      throw std::invalid_argument("SingularMeasure CSV: bad row: " + line);
    }
    atoms.push_back({theta, mass});
  }
  return SingularMeasure(std::move(atoms));
}

Complex singular_inner_eval(const SingularMeasure& mu, Complex z) {
  if (std::abs(z) > 1.0 + 1e-12) {
    throw std::invalid_argument("singular_inner_eval: |z| must be <= 1");
  }
  Complex exponent(0.0, 0.0);
  for (const auto& atom : mu.atoms()) {
    const Complex zeta(std::cos(atom.angle), std::sin(atom.angle));
    const Complex diff = zeta - z;
    if (std::abs(diff) <= 1e-13) {
      throw std::domain_error("singular_inner_eval: z coincides with an atom");
    }
    exponent += atom.mass * (zeta + z) / diff;
  }
  return std::exp(-exponent);
}

DiskFunction singular_inner(SingularMeasure mu) {
  return DiskFunction(
      [mu = std::move(mu)](Complex z) { return singular_inner_eval(mu, z); },
      1.0);
}

OuterFunction::OuterFunction(const BoundaryFunction& logmod)
    : grid_(logmod.grid()), logmod_(logmod.size()),
      max_logmod_(-std::numeric_limits<double>::infinity()) {
  for (std::size_t k = 0; k < logmod.size(); ++k) {
    const Complex v = logmod[k];
    if (std::abs(v.imag()) > 1e-12) {
      throw std::invalid_argument("OuterFunction: logmod must be real-valued");
    }
    if (!std::isfinite(v.real())) {
      throw std::invalid_argument("OuterFunction: logmod must be finite");
    }
    logmod_[k] = v.real();
    max_logmod_ = std::max(max_logmod_, v.real());
  }
}

Complex OuterFunction::operator()(Complex z) const {
  if (std::abs(z) > radius_cap() * (1.0 + 1e-12)) {
    throw std::domain_error(
        "OuterFunction: evaluation radius capped at 1 - 1e-6");
  }
  // Truncated Herglotz kernel against the samples:
  //   k(theta, z) = 1 + 2 sum_{k=1}^{M-1} q^k + q^M,  q = z e^{-i theta},
  // whose node mean reproduces c_0 + 2 sum c_k z^k + c_M z^M exactly.
  const std::size_t n = logmod_.size();
  const std::size_t m = n / 2;
  CompensatedComplexSum s;
  for (std::size_t k = 0; k < n; ++k) {
    const double t = grid_.theta(k);
    const Complex q = z * Complex(std::cos(t), -std::sin(t));
    const Complex q_pow = std::pow(q, static_cast<double>(m - 1));
    // 1 + 2 sum_{k=1}^{M-1} q^k + q^M; the lone q^M picks up the real
    // Nyquist coefficient once.
    const Complex kernel =
        1.0 + 2.0 * q * (1.0 - q_pow) / (1.0 - q) + q_pow * q;
    s.add(logmod_[k] * kernel);
  }
  return std::exp(s.value() / static_cast<double>(n));
}

DiskFunction OuterFunction::as_disk_function() const {
  const OuterFunction self = *this;
  return DiskFunction([self](Complex z) { return self(z); },
                      std::exp(max_logmod_) * (1.0 + 1e-9), radius_cap());
}

InnerCheckReport inner_check(const BoundaryFunction& f) {
  double worst = 0.0;
  CompensatedSum total;
  for (std::size_t k = 0; k < f.size(); ++k) {
    const double dev = std::abs(std::abs(f[k]) - 1.0);
    worst = std::max(worst, dev);
    total.add(dev);
  }
  return {worst, total.value() / static_cast<double>(f.size())};
}

QuotientFunction::QuotientFunction(BoundaryFunction numerator,
                                   BoundaryFunction denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  num_.require_same_grid(den_);
  if (inner_check(den_).max_deviation > 1e-9) {
    throw std::invalid_argument(
        "QuotientFunction: denominator must be unimodular within 1e-9");
  }
}

QuotientFunction QuotientFunction::over_one(const BoundaryFunction& numerator) {
  return QuotientFunction(
      numerator, BoundaryFunction::constant(numerator.grid(), Complex(1.0, 0.0)));
}

QuotientFunction QuotientFunction::operator+(const QuotientFunction& o) const {
  return QuotientFunction(num_.hadamard(o.den_) + o.num_.hadamard(den_),
                          den_.hadamard(o.den_));
}

QuotientFunction QuotientFunction::operator*(const QuotientFunction& o) const {
  return QuotientFunction(num_.hadamard(o.num_), den_.hadamard(o.den_));
}

QuotientFunction QuotientFunction::scaled(Complex c) const {
  return QuotientFunction(c * num_, den_);
}

BoundaryFunction QuotientFunction::boundary_values() const {
  std::vector<Complex> v(num_.size());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = num_[k] / den_[k];
  return BoundaryFunction(num_.grid(), std::move(v));
}

}  // namespace disklab
