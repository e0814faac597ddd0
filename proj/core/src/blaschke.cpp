#include "disklab/blaschke.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace disklab {

namespace {

Complex blaschke_factor(const DiskPoint& zero, Complex z) {
  const Complex a = zero.value();
  const double mod = zero.modulus();
  if (mod == 0.0) return -z;  // |a|/a -> 1 convention at a = 0
  return (mod / a) * (a - z) / (1.0 - std::conj(a) * z);
}

Complex balanced_product(std::span<const DiskPoint> zeros, Complex z) {
  if (zeros.size() == 1) return blaschke_factor(zeros[0], z);
  const std::size_t half = zeros.size() / 2;
  return balanced_product(zeros.first(half), z) *
         balanced_product(zeros.subspan(half), z);
}

void require_count(std::span<const DiskPoint> zeros, std::size_t n,
                   const char* who) {
  if (n > zeros.size()) {
    throw std::invalid_argument(std::string(who) +
                                ": fewer zeros available than requested");
  }
}

}  // namespace

BlaschkeProduct::BlaschkeProduct(Complex lambda, std::vector<DiskPoint> zeros,
                                 double truncation_tail_bound)
    : lambda_(lambda), zeros_(std::move(zeros)),
      tail_bound_(truncation_tail_bound) {
  const double mod = std::abs(lambda_);
  if (std::abs(mod - 1.0) > kUnimodularConstructionTol) {
    throw std::invalid_argument("BlaschkeProduct: |lambda| must be 1");
  }
  lambda_ /= mod;
  if (tail_bound_ < 0.0) {
    throw std::invalid_argument("BlaschkeProduct: tail bound must be >= 0");
  }
}

Complex BlaschkeProduct::operator()(Complex z) const {
  if (zeros_.empty()) return lambda_;
  if (zeros_.size() <= 256) {
    Complex p = lambda_;
    for (const DiskPoint& a : zeros_) p *= blaschke_factor(a, z);
    return p;
  }
  return lambda_ * balanced_product(zeros_, z);
}

double BlaschkeProduct::condition_sum() const {
  return blaschke_condition(zeros_, zeros_.size());
}

double BlaschkeProduct::truncation_error_bound(double r) const {
  if (!(r >= 0.0) || !(r < 1.0)) {
    throw std::invalid_argument("truncation_error_bound: r must be in [0,1)");
  }
  return tail_bound_ * (1.0 + r) / (1.0 - r);
}

double blaschke_condition(std::span<const DiskPoint> zeros, std::size_t n) {
  require_count(zeros, n, "blaschke_condition");
  CompensatedSum s;
  for (std::size_t k = 0; k < n; ++k) s.add(zeros[k].gap());
  return s.value();
}

std::vector<double> frostman_terms(std::span<const DiskPoint> zeros,
                                   Complex zeta, std::size_t n) {
  require_count(zeros, n, "frostman_terms");
  if (std::abs(std::abs(zeta) - 1.0) > 1e-12) {
    throw std::invalid_argument("frostman_terms: |zeta| must be 1");
  }
  const double s = std::arg(zeta);
  std::vector<double> terms(n);
  for (std::size_t k = 0; k < n; ++k) {
    terms[k] = zeros[k].one_minus_sq() / boundary_distance_sq(zeros[k], s);
  }
  return terms;
}

double frostman_sum(std::span<const DiskPoint> zeros, Complex zeta,
                    std::size_t n) {
  CompensatedSum s;
  for (double t : frostman_terms(zeros, zeta, n)) s.add(t);
  return s.value();
}

std::vector<double> separation_products(std::span<const DiskPoint> zeros,
                                        std::size_t n) {
  require_count(zeros, n, "separation_products");
  if (n < 2) {
    throw std::invalid_argument("separation_products: need at least 2 zeros");
  }
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    double p = 1.0;
    for (std::size_t m = 0; m < n; ++m) {
      if (m != i) p *= pseudo_hyperbolic(zeros[i], zeros[m]);
    }
    out[i] = p;
  }
  return out;
}

std::vector<double> thin_ratio_test(std::span<const DiskPoint> zeros,
                                    std::size_t n) {
  require_count(zeros, n, "thin_ratio_test");
  std::vector<double> ratios;
  ratios.reserve(n > 0 ? n - 1 : 0);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (zeros[k + 1].gap() > zeros[k].gap()) {
      throw std::invalid_argument("thin_ratio_test: moduli must be nondecreasing");
    }
    ratios.push_back(zeros[k + 1].gap() / zeros[k].gap());
  }
  return ratios;
}

std::vector<DiskPoint> example1_zeros(std::size_t n) {
  if (n < 1) throw std::invalid_argument("example1_zeros: N must be >= 1");
  std::vector<DiskPoint> zeros;
  zeros.reserve(n);
  for (std::size_t k = 1; k <= n; ++k) {
    const double nn = static_cast<double>(k);
    const double n2 = nn * nn;
    const double inv = 1.0 / nn;
    const double angle = std::atan2(n2 * std::sin(inv), 1.0 + n2 * std::cos(inv));
    const double sh = std::sin(0.5 * inv);
    const double one_minus_sq = 4.0 * n2 * sh * sh / ((n2 + 1.0) * (n2 + 1.0));
    const double mod = std::sqrt(1.0 - one_minus_sq);
    zeros.push_back(DiskPoint::from_polar_gap(angle, one_minus_sq / (1.0 + mod)));
  }
  return zeros;
}

std::vector<DiskPoint> example2_zeros(std::size_t n) {
  if (n < 1) throw std::invalid_argument("example2_zeros: N must be >= 1");
  if (n > 10) {
    throw std::invalid_argument(
        "example2_zeros: gap 2^(-2^n) underflows double beyond n = 10");
  }
  std::vector<DiskPoint> zeros;
  zeros.reserve(n);
  for (std::size_t k = 1; k <= n; ++k) {
    zeros.push_back(
        DiskPoint::from_polar_gap(0.0, std::ldexp(1.0, -(1 << k))));
  }
  return zeros;
}

std::vector<DiskPoint> read_zero_list(std::istream& in) {
  std::vector<DiskPoint> zeros;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream row(line);
    double re = 0.0, im = 0.0;
    if (!(row >> re >> im)) {
      throw std::invalid_argument("zero list: bad row: " + line);
    }
    zeros.push_back(DiskPoint::from_complex(Complex(re, im)));
  }
  return zeros;
}

}  // namespace disklab
