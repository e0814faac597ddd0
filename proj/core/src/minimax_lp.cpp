#include "disklab/minimax_lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace disklab {

namespace {

constexpr double kPivotTol = 1e-11;      // reduced-cost optimality tolerance
constexpr double kRatioPivotTol = 1e-9;  // smallest acceptable pivot element
constexpr double kFeasTol = 1e-9;

class Tableau {
 public:
  // Columns 0..n-1 structural, n..n+m-1 artificial, last column rhs.
  Tableau(std::size_t m, std::size_t n, const std::vector<double>& a,
          const std::vector<double>& b)
      : m_(m), n_(n), width_(n + m + 1), t_((m + 1) * width_, 0.0),
        basis_(m) {
    for (std::size_t i = 0; i < m; ++i) {
      const double sign = b[i] < 0.0 ? -1.0 : 1.0;
      for (std::size_t j = 0; j < n; ++j) at(i, j) = sign * a[i * n + j];
      at(i, n + i) = 1.0;
      at(i, rhs()) = sign * b[i];
      basis_[i] = n + i;
    }
  }

  std::size_t rhs() const { return width_ - 1; }
  double& at(std::size_t i, std::size_t j) { return t_[i * width_ + j]; }
  double at(std::size_t i, std::size_t j) const { return t_[i * width_ + j]; }

  // Rebuild the objective row for costs c (artificials cost 0 unless phase 1).
  void set_objective(const std::vector<double>& cost) {
    for (std::size_t j = 0; j < width_; ++j) at(m_, j) = 0.0;
    for (std::size_t j = 0; j < n_ + m_; ++j) at(m_, j) = cost_of(cost, j);
    // Reduce against the current basis.
    for (std::size_t i = 0; i < m_; ++i) {
      const double cb = cost_of(cost, basis_[i]);
      if (cb == 0.0) continue;
      for (std::size_t j = 0; j < width_; ++j) at(m_, j) -= cb * at(i, j);
    }
  }

  // Returns false on unbounded.
  bool pivot_until_optimal(bool phase_one, int& iterations_left) {
    int degenerate_streak = 0;
    while (iterations_left-- > 0) {
      const std::size_t limit = phase_one ? n_ + m_ : n_;
      const bool bland = degenerate_streak >= 40;
      // Entering column: Dantzig; Bland under a degenerate streak.
      std::size_t enter = width_;
      if (!bland) {
        double best = -kPivotTol;
        for (std::size_t j = 0; j < limit; ++j) {
          if (at(m_, j) < best) {
            best = at(m_, j);
            enter = j;
          }
        }
      } else {
        for (std::size_t j = 0; j < limit; ++j) {
          if (at(m_, j) < -kPivotTol) {
            enter = j;
            break;
          }
        }
      }
      if (enter == width_) return true;  // optimal

      // Ratio test. Among near-ties prefer the largest pivot element (tiny
      // pivots poison the dense updates); under Bland, the lowest basis
      // index to guarantee termination.
      std::size_t leave = m_;
      double best_ratio = std::numeric_limits<double>::infinity();
      double best_pivot = 0.0;
      for (std::size_t i = 0; i < m_; ++i) {
        const double aij = at(i, enter);
        if (aij <= kRatioPivotTol) continue;
        const double ratio = at(i, rhs()) / aij;
        const bool strictly_better =
            ratio < best_ratio - 1e-9 * std::abs(best_ratio) - 1e-15;
        const bool tie =
            !strictly_better &&
            ratio <= best_ratio + 1e-9 * std::abs(best_ratio) + 1e-15;
        if (leave == m_ || strictly_better) {
          best_ratio = ratio;
          best_pivot = aij;
          leave = i;
        } else if (tie) {
          if ((!bland && aij > best_pivot) ||
              (bland && basis_[i] < basis_[leave])) {
            best_ratio = std::min(best_ratio, ratio);
            best_pivot = aij;
            leave = i;
          }
        }
      }
      if (leave == m_) return false;  // unbounded
      degenerate_streak = best_ratio < 1e-13 ? degenerate_streak + 1 : 0;
      pivot(leave, enter);
    }
    return true;  // caller checks iterations_left
  }

  void pivot(std::size_t row, std::size_t col) {
    const double p = at(row, col);
    for (std::size_t j = 0; j < width_; ++j) at(row, j) /= p;
    at(row, col) = 1.0;
    for (std::size_t i = 0; i <= m_; ++i) {
      if (i == row) continue;
      const double f = at(i, col);
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < width_; ++j) at(i, j) -= f * at(row, j);
      at(i, col) = 0.0;
    }
    basis_[row] = col;
  }

  // Pivot basic artificials out onto structural columns where possible.
  void expel_artificials() {
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < n_) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        if (std::abs(at(i, j)) > 1e-8) {
          pivot(i, j);
          break;
        }
      }
    }
  }

  std::size_t m_, n_, width_;
  std::vector<double> t_;
  std::vector<std::size_t> basis_;

 private:
  double cost_of(const std::vector<double>& cost, std::size_t j) const {
    return j < cost.size() ? cost[j] : 0.0;
  }
};

}  // namespace

LpResult solve_equality_lp(std::size_t m, std::size_t n, std::vector<double> a,
                           std::vector<double> b, std::vector<double> c,
                           int max_iterations) {
  if (a.size() != m * n || b.size() != m || c.size() != n) {
    throw std::invalid_argument("solve_equality_lp: dimension mismatch");
  }
  std::vector<double> row_sign(m, 1.0);
  for (std::size_t i = 0; i < m; ++i) {
    if (b[i] < 0.0) row_sign[i] = -1.0;
  }

  Tableau t(m, n, a, b);
  LpResult out;

  // Phase 1: drive the artificial mass to zero.
  std::vector<double> phase1_cost(n + m, 0.0);
  for (std::size_t j = n; j < n + m; ++j) phase1_cost[j] = 1.0;
  t.set_objective(phase1_cost);
  int iters = max_iterations;
  if (!t.pivot_until_optimal(true, iters)) {
    out.status = LpResult::Status::unbounded;  // cannot happen in phase 1
    return out;
  }
  if (iters <= 0) {
    out.status = LpResult::Status::iteration_limit;
    return out;
  }
  const double infeasibility = -t.at(m, t.rhs());
  if (infeasibility > kFeasTol) {
    out.status = LpResult::Status::infeasible;
    return out;
  }
  t.expel_artificials();

  // Phase 2 with the true costs; artificial columns stay out of pricing but
  // keep accumulating B^{-1} for the duals.
  t.set_objective(c);
  if (!t.pivot_until_optimal(false, iters)) {
    out.status = LpResult::Status::unbounded;
    return out;
  }
  if (iters <= 0) {
    out.status = LpResult::Status::iteration_limit;
    return out;
  }

  out.status = LpResult::Status::optimal;
  out.x.assign(n, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    if (t.basis_[i] < n) out.x[t.basis_[i]] = t.at(i, t.rhs());
  }
  // Recompute the objective from x; the objective-row cell accumulates
  // update error over long degenerate runs.
  double value = 0.0;
  for (std::size_t j = 0; j < n; ++j) value += c[j] * out.x[j];
  out.value = value;
  // y_i = c_B (B^{-1})_{:,i}; artificial column n+i holds B^{-1} e_i, and the
  // objective row holds 0 - c_B B^{-1} there (artificial costs are 0 now).
  out.duals.assign(m, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    out.duals[i] = -t.at(m, n + i) * row_sign[i];
  }
  return out;
}

namespace {

double true_objective(const std::vector<std::vector<Complex>>& atoms,
                      const std::vector<Complex>& target,
                      const std::vector<double>& w,
                      std::vector<Complex>* residuals = nullptr) {
  const std::size_t points = target.size();
  double worst = 0.0;
  if (residuals) residuals->assign(points, Complex(0.0, 0.0));
  for (std::size_t j = 0; j < points; ++j) {
    Complex v = -target[j];
    for (std::size_t i = 0; i < atoms.size(); ++i) v += w[i] * atoms[i][j];
    if (residuals) (*residuals)[j] = v;
    worst = std::max(worst, std::abs(v));
  }
  return worst;
}

}  // namespace

MinimaxResult minimize_max_modulus(
    const std::vector<std::vector<Complex>>& atoms,
    const std::vector<Complex>& target) {
  const std::size_t k = atoms.size();
  const std::size_t points = target.size();
  if (k == 0 || points == 0) {
    throw std::invalid_argument("minimize_max_modulus: empty problem");
  }
  for (const auto& row : atoms) {
    if (row.size() != points) {
      throw std::invalid_argument("minimize_max_modulus: ragged atom data");
    }
  }

  MinimaxResult best;
  auto consider = [&](const std::vector<double>& w) {
    const double v = true_objective(atoms, target, w);
    if (best.weights.empty() || v < best.value) {
      best.value = v;
      best.weights = w;
    }
  };
  // Seed candidates: uniform and the vertices.
  consider(std::vector<double>(k, 1.0 / static_cast<double>(k)));
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<double> e(k, 0.0);
    e[i] = 1.0;
    consider(e);
  }

  std::vector<std::vector<double>> dirs(points, {0.0, kTwoPi / 3, -kTwoPi / 3});

  // Kelley cuts halve the worst angular gap about once per round, so the
  // relaxation error (~gap^2/2 per point) needs tens of rounds for 1e-11.
  constexpr int kMaxRounds = 40;
  for (int round = 0; round < kMaxRounds; ++round) {
    best.rounds = round + 1;
    std::size_t cuts = 0;
    for (const auto& d : dirs) cuts += d.size();

    // Dual orientation: rows = K+1, columns = cuts + nu+ + nu- + K slacks.
    const std::size_t m = k + 1;
    const std::size_t n = cuts + 2 + k;
    std::vector<double> a(m * n, 0.0), b(m, 0.0), c(n, 0.0);
    b[0] = 1.0;
    std::size_t col = 0;
    for (std::size_t j = 0; j < points; ++j) {
      for (double alpha : dirs[j]) {
        const Complex e(std::cos(alpha), -std::sin(alpha));  // e^{-i alpha}
        a[0 * n + col] = 1.0;
        for (std::size_t i = 0; i < k; ++i) {
          a[(i + 1) * n + col] = (e * atoms[i][j]).real();
        }
        c[col] = (e * target[j]).real();
        ++col;
      }
    }
    const std::size_t nu_plus = col, nu_minus = col + 1;
    c[nu_plus] = -1.0;
    c[nu_minus] = 1.0;
    for (std::size_t i = 0; i < k; ++i) {
      a[(i + 1) * n + nu_plus] = -1.0;
      a[(i + 1) * n + nu_minus] = 1.0;
      a[(i + 1) * n + (nu_minus + 1 + i)] = -1.0;  // slack
    }

    const LpResult lp = solve_equality_lp(m, n, std::move(a), std::move(b),
                                          std::move(c));
    if (lp.status != LpResult::Status::optimal) break;
    const double round_bound = -lp.value;

    // Primal weights are the duals of rows 1..K; clean to the simplex.
    std::vector<double> w(k, 0.0);
    double sum = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
      w[i] = std::max(0.0, lp.duals[i + 1]);
      sum += w[i];
    }
    if (sum <= 0.0) break;
    for (double& wi : w) wi /= sum;

    std::vector<Complex> residuals;
    const double value = true_objective(atoms, target, w, &residuals);
    if (value < best.value) {
      best.value = value;
      best.weights = w;
    }
    // A valid relaxation never exceeds a feasible objective; a bound above
    // best.value means tableau drift, and must not declare convergence.
    if (round_bound <= best.value + 1e-7 * (1.0 + best.value)) {
      best.lp_bound = std::min(round_bound, best.value);
      if (best.value - best.lp_bound <=
          std::max(1e-13, 1e-11 * best.value)) {
        best.converged = true;
        break;
      }
    }
    // Deepest cuts: the current residual phases.
    for (std::size_t j = 0; j < points; ++j) {
      if (std::abs(residuals[j]) == 0.0) continue;
      const double alpha = std::arg(residuals[j]);
      bool fresh = true;
      for (double existing : dirs[j]) {
        if (std::abs(std::remainder(existing - alpha, kTwoPi)) < 1e-13) {
          fresh = false;
          break;
        }
      }
      if (fresh) dirs[j].push_back(alpha);
    }
  }
  return best;
}

}  // namespace disklab
