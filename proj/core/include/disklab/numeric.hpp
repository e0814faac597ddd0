#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <span>

namespace disklab {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Default comparison tolerance for floating-point identities.
inline constexpr double kDefaultTol = 1e-12;

/// Construction-time tolerance for unimodular parameters before renormalization.
inline constexpr double kUnimodularConstructionTol = 1e-14;

/// Neumaier-compensated running sum. Exact for inputs whose plain partial
/// sums are representable (integers, dyadic fixed-point data).
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

class CompensatedComplexSum {
 public:
  void add(Complex z) {
    re_.add(z.real());
    im_.add(z.imag());
  }
  Complex value() const { return {re_.value(), im_.value()}; }

 private:
  CompensatedSum re_;
  CompensatedSum im_;
};

inline double compensated_mean(std::span<const double> xs) {
  CompensatedSum s;
  for (double x : xs) s.add(x);
  return s.value() / static_cast<double>(xs.size());
}

inline Complex compensated_mean(std::span<const Complex> xs) {
  CompensatedComplexSum s;
  for (Complex x : xs) s.add(x);
  return s.value() / static_cast<double>(xs.size());
}

/// log^+ x = max(log x, 0) for x >= 0; log^+ 0 = 0.
inline double log_plus(double x) {
  return x > 1.0 ? std::log(x) : 0.0;
}

}  // namespace disklab
