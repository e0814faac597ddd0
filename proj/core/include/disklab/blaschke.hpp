#pragma once

#include <complex>
#include <span>
#include <vector>

#include "disklab/moebius.hpp"
#include "disklab/numeric.hpp"

namespace disklab {

/// Finite (or truncated infinite) Blaschke product
///
///   B(z) = lambda * prod_n (|a_n|/a_n) (a_n - z)/(1 - conj(a_n) z)
///
/// with the factor convention 1*(-z) at a_n = 0. Repetitions in the zero
/// list give multiplicities. When the product stands in for a truncation of
/// an infinite product, `truncation_tail_bound` certifies the omitted mass
/// sum_{n>N} (1 - |a_n|); it is 0 for genuinely finite products.
class BlaschkeProduct {
 public:
  BlaschkeProduct(Complex lambda, std::vector<DiskPoint> zeros,
                  double truncation_tail_bound = 0.0);

  static BlaschkeProduct constant(Complex lambda) {
    return BlaschkeProduct(lambda, {});
  }

  /// Product evaluated factor-by-factor in zero-list order; balanced
  /// pairwise multiplication kicks in above degree 256 to control rounding.
  Complex operator()(Complex z) const;

  std::size_t degree() const { return zeros_.size(); }
  Complex unimodular_factor() const { return lambda_; }
  const std::vector<DiskPoint>& zeros() const { return zeros_; }
  double truncation_tail_bound() const { return tail_bound_; }

  /// Blaschke-condition sum over the stored zeros, sum (1 - |a_n|).
  double condition_sum() const;

  /// |B_trunc(z) - B(z)| <= tail * (1+r)/(1-r) on |z| <= r, propagated from
  /// the certified tail bound.
  double truncation_error_bound(double r) const;

 private:
  Complex lambda_;
  std::vector<DiskPoint> zeros_;
  double tail_bound_;
};

/// Partial sum sum_{n<=N} (1 - |a_n|) of the Blaschke condition.
double blaschke_condition(std::span<const DiskPoint> zeros, std::size_t n);

/// Partial sum sum_{n<=N} (1 - |a_n|^2)/|zeta - a_n|^2 of the angular
/// derivative series at the boundary point zeta (|zeta| = 1 required).
double frostman_sum(std::span<const DiskPoint> zeros, Complex zeta,
                    std::size_t n);

/// The individual terms of the series above, n of them.
std::vector<double> frostman_terms(std::span<const DiskPoint> zeros,
                                   Complex zeta, std::size_t n);

/// For each n <= N the product prod_{m<=N, m!=n} rho(a_n, a_m). Entries
/// bounded away from 0 indicate an interpolating sequence; entries tending
/// to 1 indicate a thin one. Classification is left to the caller: the
/// limits are asymptotic, so the artifact reports evidence, not booleans.
std::vector<double> separation_products(std::span<const DiskPoint> zeros,
                                        std::size_t n);

/// Ratios (1-|a_{n+1}|)/(1-|a_n|) for n < N. Requires |a_n| nondecreasing;
/// throws std::invalid_argument otherwise.
std::vector<double> thin_ratio_test(std::span<const DiskPoint> zeros,
                                    std::size_t n);

/// a_n = 1/(n^2+1) + n^2 e^{i/n}/(n^2+1), n = 1..N. Gaps are computed from
/// 1-|a_n|^2 = 4 n^2 sin^2(1/(2n)) / (n^2+1)^2 to keep full relative
/// precision near the boundary.
std::vector<DiskPoint> example1_zeros(std::size_t n);

/// a_n = 1 - 2^{-2^n}, n = 1..N. The gap 2^{-2^n} underflows double
/// precision beyond n = 10; larger N is rejected.
std::vector<DiskPoint> example2_zeros(std::size_t n);

/// Reads one zero per line as `re im` (comma or space separated).
std::vector<DiskPoint> read_zero_list(std::istream& in);

}  // namespace disklab
