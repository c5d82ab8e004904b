#include "schubert/solver.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

#include "schubert/errors.hpp"

namespace schubert {

namespace {

using Row = std::vector<mpq_class>;

struct EqualitySystem {
  std::vector<Row> rows; // coefficient part
  Row rhs;
};

// Gauss-Jordan elimination of [A | b]. Returns nullopt if some row reduces to
// 0 = nonzero, otherwise the independent rows.
std::optional<EqualitySystem> reduce(std::vector<Row> a, Row b, std::size_t columns) {
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < columns && pivot_row < a.size(); ++col) {
    std::size_t found = pivot_row;
    while (found < a.size() && a[found][col] == 0) ++found;
    if (found == a.size()) continue;
    std::swap(a[found], a[pivot_row]);
    std::swap(b[found], b[pivot_row]);
    const mpq_class scale = a[pivot_row][col];
    for (auto& entry : a[pivot_row]) entry /= scale;
    b[pivot_row] /= scale;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == pivot_row || a[r][col] == 0) continue;
      const mpq_class factor = a[r][col];
      for (std::size_t c = col; c < columns; ++c)
        if (a[pivot_row][c] != 0) a[r][c] -= factor * a[pivot_row][c];
      b[r] -= factor * b[pivot_row];
    }
    ++pivot_row;
  }
  for (std::size_t r = pivot_row; r < a.size(); ++r)
    if (b[r] != 0) return std::nullopt;
  a.resize(pivot_row);
  b.resize(pivot_row);
  return EqualitySystem{std::move(a), std::move(b)};
}

struct Bounds {
  std::vector<mpz_class> lower;
  std::vector<std::optional<mpz_class>> upper;
};

// Phase-one simplex for E (l + mu) = f, 0 <= mu <= u - l. Returns lambda = l + mu
// at a vertex, or nullopt if infeasible.
std::optional<std::vector<mpq_class>> lp_feasible(const EqualitySystem& system,
                                                  const Bounds& bounds, std::size_t k,
                                                  std::size_t& pivots) {
  std::vector<std::size_t> bounded;
  for (std::size_t c = 0; c < k; ++c) {
    if (!bounds.upper[c]) continue;
    if (*bounds.upper[c] < bounds.lower[c]) return std::nullopt;
    bounded.push_back(c);
  }
  const std::size_t eq_rows = system.rows.size();
  const std::size_t rows = eq_rows + bounded.size();
  const std::size_t slack0 = k;
  const std::size_t art0 = k + bounded.size();
  const std::size_t width = art0 + eq_rows;

  std::vector<Row> tab(rows, Row(width, mpq_class(0)));
  Row rhs(rows);
  std::vector<std::size_t> basis(rows);

  for (std::size_t r = 0; r < eq_rows; ++r) {
    mpq_class value = system.rhs[r];
    for (std::size_t c = 0; c < k; ++c)
      if (system.rows[r][c] != 0 && bounds.lower[c] != 0) value -= system.rows[r][c] * bounds.lower[c];
    const bool flip = value < 0;
    for (std::size_t c = 0; c < k; ++c) tab[r][c] = flip ? mpq_class(-system.rows[r][c]) : system.rows[r][c];
    rhs[r] = flip ? mpq_class(-value) : value;
    tab[r][art0 + r] = 1;
    basis[r] = art0 + r;
  }
  for (std::size_t b = 0; b < bounded.size(); ++b) {
    const std::size_t r = eq_rows + b;
    const std::size_t c = bounded[b];
    tab[r][c] = 1;
    tab[r][slack0 + b] = 1;
    rhs[r] = mpq_class(*bounds.upper[c] - bounds.lower[c]);
    basis[r] = slack0 + b;
  }

  // Reduced costs of the phase-one objective (sum of artificials); entering a
  // column with positive value lowers the objective.
  Row cost(width, mpq_class(0));
  mpq_class objective = 0;
  for (std::size_t r = 0; r < eq_rows; ++r) {
    for (std::size_t c = 0; c < art0; ++c)
      if (tab[r][c] != 0) cost[c] += tab[r][c];
    objective += rhs[r];
  }

  for (;;) {
    std::size_t entering = art0;
    for (std::size_t c = 0; c < art0; ++c)
      if (cost[c] > 0) {
        entering = c;
        break;
      }
    if (entering == art0) break;

    std::size_t leaving = rows;
    mpq_class best_ratio;
    for (std::size_t r = 0; r < rows; ++r) {
      if (tab[r][entering] <= 0) continue;
      mpq_class ratio = rhs[r] / tab[r][entering];
      if (leaving == rows || ratio < best_ratio ||
          (ratio == best_ratio && basis[r] < basis[leaving])) {
        leaving = r;
        best_ratio = ratio;
      }
    }
    if (leaving == rows) throw std::logic_error("phase-one simplex reported an unbounded ray");

    ++pivots;
    const mpq_class pivot = tab[leaving][entering];
    for (auto& entry : tab[leaving]) entry /= pivot;
    rhs[leaving] /= pivot;
    std::vector<std::size_t> support;
    for (std::size_t c = 0; c < width; ++c)
      if (tab[leaving][c] != 0) support.push_back(c);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == leaving || tab[r][entering] == 0) continue;
      const mpq_class factor = tab[r][entering];
      for (std::size_t c : support) tab[r][c] -= factor * tab[leaving][c];
      rhs[r] -= factor * rhs[leaving];
    }
    const mpq_class factor = cost[entering];
    for (std::size_t c : support) cost[c] -= factor * tab[leaving][c];
    objective -= factor * rhs[leaving];
    basis[leaving] = entering;
  }

  if (objective != 0) return std::nullopt;
  std::vector<mpq_class> lambda(k);
  for (std::size_t c = 0; c < k; ++c) lambda[c] = bounds.lower[c];
  for (std::size_t r = 0; r < rows; ++r)
    if (basis[r] < k) lambda[basis[r]] += rhs[r];
  return lambda;
}

mpz_class floor_of(const mpq_class& q) {
  mpz_class out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

} // namespace

std::optional<std::vector<mpz_class>> solve_nonneg_integer(std::span<const Polynomial> columns,
                                                           const Polynomial& target,
                                                           const SolverOptions& options,
                                                           SolverStats* stats) {
  SolverStats local;
  SolverStats& st = stats ? *stats : local;
  st = {};
  const std::size_t k = columns.size();

  std::map<Monomial, std::size_t, TermOrder> index;
  for (const auto& [m, c] : target.terms()) index.try_emplace(m, index.size());
  for (const auto& column : columns)
    for (const auto& [m, c] : column.terms()) index.try_emplace(m, index.size());

  std::vector<Row> a(index.size(), Row(k, mpq_class(0)));
  Row b(index.size(), mpq_class(0));
  for (const auto& [m, c] : target.terms()) b[index.at(m)] = c;
  for (std::size_t col = 0; col < k; ++col)
    for (const auto& [m, c] : columns[col].terms()) a[index.at(m)][col] = c;

  auto system = reduce(std::move(a), std::move(b), k);
  if (!system) return std::nullopt;
  st.rank = system->rows.size();

  std::vector<Bounds> stack;
  stack.push_back({std::vector<mpz_class>(k, mpz_class(0)), std::vector<std::optional<mpz_class>>(k)});
  std::ostringstream log;
  std::size_t logged = 0;
  constexpr std::size_t kLogLimit = 200;

  while (!stack.empty()) {
    Bounds node = std::move(stack.back());
    stack.pop_back();
    if (++st.nodes > options.node_budget) {
      throw BudgetExceeded("branch and bound exceeded " + std::to_string(options.node_budget) +
                               " nodes",
                           log.str());
    }
    auto relaxed = lp_feasible(*system, node, k, st.pivots);
    if (!relaxed) {
      if (logged++ < kLogLimit) log << "node " << st.nodes << ": infeasible\n";
      continue;
    }
    std::size_t fractional = k;
    for (std::size_t c = 0; c < k; ++c)
      if ((*relaxed)[c].get_den() != 1) {
        fractional = c;
        break;
      }
    if (fractional == k) {
      std::vector<mpz_class> solution(k);
      for (std::size_t c = 0; c < k; ++c) solution[c] = (*relaxed)[c].get_num();
      return solution;
    }
    const mpq_class& value = (*relaxed)[fractional];
    const mpz_class down = floor_of(value);
    if (logged++ < kLogLimit)
      log << "node " << st.nodes << ": branch on column " << fractional << " at " << value.get_str()
          << "\n";
    Bounds up_branch = node;
    up_branch.lower[fractional] = down + 1;
    Bounds down_branch = std::move(node);
    down_branch.upper[fractional] = down;
    stack.push_back(std::move(up_branch));
    stack.push_back(std::move(down_branch));
  }
  return std::nullopt;
}

} // namespace schubert
