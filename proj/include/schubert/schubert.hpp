#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "schubert/permutation.hpp"
#include "schubert/polynomial.hpp"

namespace schubert {

// S_w(x;y). Throws AmbientTooSmall unless w lies in S_n. The value does not
// depend on n; it is built from the dominant permutation reached by sorting
// the Lehmer code, whose polynomial is prod_{j <= lambda_i} (x_i - y_j), and
// descends by divided differences. Results are memoized process-wide.
Polynomial double_schubert(const Permutation& w, int n);
// Same polynomial with y renamed to t, i.e. S_w(x;t).
Polynomial double_schubert_xt(const Permutation& w, int n);

// Reference construction from the S_n top class prod_{i+j<=n}(x_i - y_j),
// descending through the smallest right ascent at every step. Unmemoized.
Polynomial double_schubert_from_top(const Permutation& w, int n);

// Dominant permutation reached from w by the code-sorting chain, together with
// the divided-difference indices to apply (rightmost acts first).
std::pair<Permutation, std::vector<int>> dominant_chain(const Permutation& w);

struct PipeDream {
  std::vector<std::pair<int, int>> crossings; // (row, column), 1-based
};

// Reduced pipe dreams for w inside the staircase {(i,j): i+j <= n}, found by
// brute force over crossing subsets. Reading each row right to left, rows top
// to bottom, crossing (i,j) contributes s_{i+j-1}.
std::vector<PipeDream> reduced_pipe_dreams(const Permutation& w, int n, int max_n = 6);
// sum over reduced pipe dreams of prod_{(i,j)} (x_i - y_j).
Polynomial pipe_dream_polynomial(const Permutation& w, int n, int max_n = 6);

// S_u(x;t) restricted to the fixed point w: x_i -> t_{w(i)}.
Polynomial localize(const Permutation& u, const Permutation& w, int n);

// Subword formula: sum over subwords of `word` that are reduced words for u
// of the product of roots s_{i_1}...s_{i_{k-1}}(alpha_{i_k}), alpha_i = t_{i+1} - t_i.
Polynomial billey(const Permutation& u, const Permutation& w, const ReducedWord& word);

// Root t_j - t_i for i < j.
Polynomial root_polynomial(const RootPair& root);

using Coefficients = std::map<Permutation, Polynomial>;

// Coefficients of P in the basis {S_w(x;t) : w in S_ambient}:
// c_w = (partial_w P) at x = t. Throws ResidualNonzero if the coefficients
// fail to reconstruct P.
Coefficients expand_in_t_basis(const Polynomial& p, int ambient);

struct ExpansionResult {
  Permutation u;
  Permutation v;
  int ambient = 0;
  Coefficients coefficients;
};

// Smallest m with u, v in S_m, plus one.
int initial_ambient(const Permutation& u, const Permutation& v);
inline constexpr int kAmbientGrowth = 4;

// Expands S_u(x;y) * S_v(x;t). With no ambient given, starts at
// initial_ambient and grows by one on ResidualNonzero up to kAmbientGrowth
// extra steps before rethrowing.
ExpansionResult expand_product(const Permutation& u, const Permutation& v,
                               std::optional<int> ambient = std::nullopt);

// c_{u,v}^w(y,t) via the skew operator: partial_{w/v} S_u(x;y) with x -> t.
Polynomial triple_coefficient_skew(const Permutation& u, const Permutation& v,
                                   const Permutation& w);

// c_{u,v}^w(y,t), computed by expansion and by the skew operator. Throws
// InternalMismatch if the two disagree.
Polynomial triple_coefficient(const Permutation& u, const Permutation& v, const Permutation& w,
                              std::optional<int> ambient = std::nullopt);

} // namespace schubert
