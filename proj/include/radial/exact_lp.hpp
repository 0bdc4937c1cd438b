#pragma once

#include "radial/rational.hpp"

#include <cstddef>
#include <vector>

namespace radial {

/// maximize c.x subject to A x = b, x >= 0, over exact rationals.
///
/// Dense two-phase simplex with Bland's rule, so it terminates on degenerate
/// problems. Meant for the handful-of-variables systems the identifiability
/// oracle produces; no attempt at sparsity or numerical scaling.
struct LinearProgram {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Rational> a;  // row-major, rows x cols
  std::vector<Rational> b;
  std::vector<Rational> c;

  LinearProgram(std::size_t m, std::size_t n) : rows(m), cols(n), a(m * n), b(m), c(n) {}

  Rational& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rational value;
  std::vector<Rational> x;
};

LpResult solve(const LinearProgram& lp);

/// Looks for l > 0 (componentwise) with M l = 0, where M is given as integer
/// rows over `vars` variables. Returns a witness normalised to sum 1, or an
/// empty vector when no strictly positive solution exists.
std::vector<Rational> strictly_positive_kernel_vector(const std::vector<std::vector<int>>& rows,
                                                      std::size_t vars);

}  // namespace radial
