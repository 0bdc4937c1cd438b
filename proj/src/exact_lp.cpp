#include "radial/exact_lp.hpp"

#include "radial/error.hpp"

#include <optional>

namespace radial {

namespace {

class Tableau {
 public:
  // Columns: 0..n-1 structural, n..n+m-1 artificial; last column is the rhs.
  Tableau(const LinearProgram& lp)
      : m_(lp.rows), n_(lp.cols), width_(lp.cols + lp.rows + 1), t_(m_ * width_), basis_(m_) {
    for (std::size_t i = 0; i < m_; ++i) {
      const bool flip = lp.b[i] < 0;
      for (std::size_t j = 0; j < n_; ++j) cell(i, j) = flip ? Rational(-lp.at(i, j)) : lp.at(i, j);
      cell(i, n_ + i) = 1;
      rhs(i) = flip ? Rational(-lp.b[i]) : lp.b[i];
      basis_[i] = n_ + i;
    }
  }

  Rational& cell(std::size_t i, std::size_t j) { return t_[i * width_ + j]; }
  Rational& rhs(std::size_t i) { return t_[i * width_ + width_ - 1]; }

  // Maximises obj over the columns allowed by `usable`. Returns false if unbounded.
  bool optimise(const std::vector<Rational>& obj, const std::vector<bool>& usable) {
    for (;;) {
      // Reduced costs: obj_j - sum_i obj_basis(i) * cell(i, j).
      std::optional<std::size_t> entering;
      for (std::size_t j = 0; j + 1 < width_ && !entering; ++j) {
        if (!usable[j] || is_basic(j)) continue;
        Rational reduced = obj[j];
        for (std::size_t i = 0; i < m_; ++i) {
          if (obj[basis_[i]] != 0 && cell(i, j) != 0) reduced -= obj[basis_[i]] * cell(i, j);
        }
        if (reduced > 0) entering = j;
      }
      if (!entering) return true;

      std::optional<std::size_t> leaving;
      Rational best_ratio;
      for (std::size_t i = 0; i < m_; ++i) {
        const Rational& coef = cell(i, *entering);
        if (coef <= 0) continue;
        Rational ratio = rhs(i) / coef;
        if (!leaving || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[*leaving])) {
          leaving = i;
          best_ratio = std::move(ratio);
        }
      }
      if (!leaving) return false;
      pivot(*leaving, *entering);
    }
  }

  void pivot(std::size_t row, std::size_t col) {
    const Rational inv = 1 / cell(row, col);
    for (std::size_t j = 0; j < width_; ++j) {
      if (cell(row, j) != 0) cell(row, j) *= inv;
    }
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == row) continue;
      const Rational factor = cell(i, col);
      if (factor == 0) continue;
      for (std::size_t j = 0; j < width_; ++j) {
        if (cell(row, j) != 0) cell(i, j) -= factor * cell(row, j);
      }
    }
    basis_[row] = col;
  }

  bool is_basic(std::size_t col) const {
    for (std::size_t b : basis_) {
      if (b == col) return true;
    }
    return false;
  }

  std::size_t rows() const { return m_; }
  std::size_t structural() const { return n_; }
  std::size_t basis(std::size_t i) const { return basis_[i]; }

 private:
  std::size_t m_, n_, width_;
  std::vector<Rational> t_;
  std::vector<std::size_t> basis_;
};

}  // namespace

LpResult solve(const LinearProgram& lp) {
  if (lp.a.size() != lp.rows * lp.cols || lp.b.size() != lp.rows || lp.c.size() != lp.cols) {
    throw Error(ErrorCode::InvalidParameter, "linear program dimensions disagree");
  }
  Tableau t(lp);
  const std::size_t n = lp.cols;
  const std::size_t m = lp.rows;

  // Phase 1: maximise minus the sum of artificials.
  std::vector<Rational> phase1(n + m, Rational(0));
  for (std::size_t i = 0; i < m; ++i) phase1[n + i] = -1;
  std::vector<bool> all(n + m, true);
  t.optimise(phase1, all);
  for (std::size_t i = 0; i < m; ++i) {
    if (t.basis(i) >= n && t.rhs(i) != 0) return LpResult{LpStatus::Infeasible, 0, {}};
  }
  // Drive zero-valued artificials out of the basis where possible; rows where
  // that is impossible are redundant and stay pinned at zero.
  for (std::size_t i = 0; i < m; ++i) {
    if (t.basis(i) < n) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (t.cell(i, j) != 0 && !t.is_basic(j)) {
        t.pivot(i, j);
        break;
      }
    }
  }

  // Phase 2 over structural columns only.
  std::vector<Rational> phase2(n + m, Rational(0));
  for (std::size_t j = 0; j < n; ++j) phase2[j] = lp.c[j];
  std::vector<bool> structural(n + m, false);
  for (std::size_t j = 0; j < n; ++j) structural[j] = true;
  if (!t.optimise(phase2, structural)) return LpResult{LpStatus::Unbounded, 0, {}};

  LpResult result{LpStatus::Optimal, 0, std::vector<Rational>(n, Rational(0))};
  for (std::size_t i = 0; i < m; ++i) {
    if (t.basis(i) < n) result.x[t.basis(i)] = t.rhs(i);
  }
  for (std::size_t j = 0; j < n; ++j) result.value += lp.c[j] * result.x[j];
  return result;
}

std::vector<Rational> strictly_positive_kernel_vector(const std::vector<std::vector<int>>& rows,
                                                      std::size_t vars) {
  if (vars == 0) return {};
  // l = t * 1 + u with t, u >= 0; maximise t subject to M l = 0 and sum l = 1.
  // A positive kernel vector exists iff the optimum has t > 0.
  const std::size_t m = rows.size() + 1;
  const std::size_t n = vars + 1;
  LinearProgram lp(m, n);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != vars) throw Error(ErrorCode::InvalidParameter, "ragged equation row");
    long row_sum = 0;
    for (std::size_t k = 0; k < vars; ++k) {
      lp.at(r, k) = rows[r][k];
      row_sum += rows[r][k];
    }
    lp.at(r, vars) = row_sum;
    lp.b[r] = 0;
  }
  for (std::size_t k = 0; k < vars; ++k) lp.at(m - 1, k) = 1;
  lp.at(m - 1, vars) = static_cast<long>(vars);
  lp.b[m - 1] = 1;
  lp.c[vars] = 1;

  const LpResult res = solve(lp);
  if (res.status != LpStatus::Optimal || res.value <= 0) return {};
  std::vector<Rational> loads(vars);
  for (std::size_t k = 0; k < vars; ++k) loads[k] = res.x[vars] + res.x[k];
  return loads;
}

}  // namespace radial
