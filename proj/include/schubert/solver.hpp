#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "schubert/polynomial.hpp"

namespace schubert {

struct SolverOptions {
  std::size_t node_budget = 100000;
};

struct SolverStats {
  std::size_t nodes = 0;
  std::size_t pivots = 0;
  std::size_t rank = 0;
};

// Finds lambda in N^k with sum_c lambda_c * columns[c] == target exactly, or
// returns nullopt when none exists.
//
// All arithmetic is over Q. The equality system (one row per monomial) is
// brought to reduced row echelon form first, which already decides affine
// solvability. Feasibility of lambda >= 0 is then tested by a phase-one
// simplex with Bland's rule, and integrality by depth-first branch and bound
// that splits on the lowest-index fractional column, floor branch first.
// Identical inputs always give identical answers.
//
// Throws BudgetExceeded, carrying a log of the visited nodes, when more than
// options.node_budget nodes are explored.
std::optional<std::vector<mpz_class>> solve_nonneg_integer(std::span<const Polynomial> columns,
                                                           const Polynomial& target,
                                                           const SolverOptions& options = {},
                                                           SolverStats* stats = nullptr);

} // namespace schubert
