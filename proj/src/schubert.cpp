#include "schubert/schubert.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <shared_mutex>

#include "schubert/divided_difference.hpp"
#include "schubert/errors.hpp"

namespace schubert {

namespace {

void require_in(const Permutation& w, int n) {
  if (w.size() > n)
    throw AmbientTooSmall("permutation " + w.to_string() + " does not lie in S_" +
                          std::to_string(n));
}

// Published results are never modified, so readers only need a shared lock.
class SchubertMemo {
public:
  std::optional<Polynomial> find(const Permutation& w) const {
    std::shared_lock lock(mutex_);
    auto it = table_.find(w);
    if (it == table_.end()) return std::nullopt;
    return it->second;
  }

  void publish(const Permutation& w, const Polynomial& p) {
    std::unique_lock lock(mutex_);
    table_.try_emplace(w, p);
  }

private:
  mutable std::shared_mutex mutex_;
  std::map<Permutation, Polynomial> table_;
};

SchubertMemo& memo() {
  static SchubertMemo instance;
  return instance;
}

// Smallest i with code_i < code_{i+1}, or 0 when the code is a partition.
int first_code_ascent(const std::vector<int>& code) {
  for (std::size_t i = 0; i + 1 < code.size(); ++i)
    if (code[i] < code[i + 1]) return static_cast<int>(i) + 1;
  return 0;
}

Polynomial dominant_polynomial(const std::vector<int>& partition) {
  Polynomial p(1L);
  for (std::size_t i = 0; i < partition.size(); ++i)
    for (int j = 1; j <= partition[i]; ++j)
      p *= Polynomial::x(static_cast<int>(i) + 1) - Polynomial::y(j);
  return p;
}

Polynomial schubert_memoized(const Permutation& w) {
  if (auto hit = memo().find(w)) return *std::move(hit);
  const auto code = w.lehmer_code();
  Polynomial result;
  if (int i = first_code_ascent(code); i == 0)
    result = dominant_polynomial(code);
  else
    result = partial_i(i, schubert_memoized(w * Permutation::simple(i)));
  memo().publish(w, result);
  return result;
}

} // namespace

std::pair<Permutation, std::vector<int>> dominant_chain(const Permutation& w) {
  Permutation current = w;
  std::vector<int> indices;
  for (int i = first_code_ascent(current.lehmer_code()); i != 0;
       i = first_code_ascent(current.lehmer_code())) {
    indices.push_back(i);
    current = current * Permutation::simple(i);
  }
  return {current, indices};
}

Polynomial double_schubert(const Permutation& w, int n) {
  require_in(w, n);
  return schubert_memoized(w);
}

Polynomial double_schubert_xt(const Permutation& w, int n) {
  return rename_family(double_schubert(w, n), Family::Y, Family::T);
}

Polynomial double_schubert_from_top(const Permutation& w, int n) {
  require_in(w, n);
  Polynomial p(1L);
  for (int i = 1; i < n; ++i)
    for (int j = 1; i + j <= n; ++j) p *= Polynomial::x(i) - Polynomial::y(j);
  // Walk down from w_0 to w: collect ascents of w upward, then undo them.
  std::vector<int> path;
  Permutation current = w;
  const Permutation top = longest_element(n);
  while (current != top) {
    int i = 1;
    while (current(i) > current(i + 1)) ++i;
    path.push_back(i);
    current = current * Permutation::simple(i);
  }
  for (auto it = path.rbegin(); it != path.rend(); ++it) p = partial_i(*it, p);
  return p;
}

std::vector<PipeDream> reduced_pipe_dreams(const Permutation& w, int n, int max_n) {
  require_in(w, n);
  if (n > max_n)
    throw SearchSpaceTooLarge("pipe dream enumeration capped at n = " + std::to_string(max_n));
  // Cells in reading order: rows top to bottom, each row right to left.
  std::vector<std::pair<int, int>> cells;
  for (int i = 1; i < n; ++i)
    for (int j = n - i; j >= 1; --j) cells.emplace_back(i, j);

  const int length = w.length();
  std::vector<PipeDream> out;
  const std::uint64_t total = std::uint64_t{1} << cells.size();
  std::vector<int> word;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    if (std::popcount(mask) != length) continue;
    word.clear();
    for (std::size_t k = 0; k < cells.size(); ++k)
      if (mask >> k & 1U) word.push_back(cells[k].first + cells[k].second - 1);
    if (Permutation::from_word(std::span<const int>(word)) != w) continue;
    PipeDream dream;
    for (std::size_t k = 0; k < cells.size(); ++k)
      if (mask >> k & 1U) dream.crossings.push_back(cells[k]);
    std::sort(dream.crossings.begin(), dream.crossings.end());
    out.push_back(std::move(dream));
  }
  std::sort(out.begin(), out.end(),
            [](const PipeDream& a, const PipeDream& b) { return a.crossings < b.crossings; });
  return out;
}

Polynomial pipe_dream_polynomial(const Permutation& w, int n, int max_n) {
  Polynomial total;
  for (const auto& dream : reduced_pipe_dreams(w, n, max_n)) {
    Polynomial weight(1L);
    for (const auto& [i, j] : dream.crossings) weight *= Polynomial::x(i) - Polynomial::y(j);
    total += weight;
  }
  return total;
}

Polynomial localize(const Permutation& u, const Permutation& w, int n) {
  require_in(w, n);
  Polynomial p = double_schubert_xt(u, n);
  return p.map_variables([&w](Var v) { return v.family == Family::X ? Var::t(w(v.index)) : v; });
}

Polynomial root_polynomial(const RootPair& root) {
  return Polynomial::t(root.j) - Polynomial::t(root.i);
}

Polynomial billey(const Permutation& u, const Permutation& w, const ReducedWord& word) {
  if (!is_reduced_word_for(word, w))
    throw NotReduced("word is not a reduced word for " + w.to_string());
  // roots[k] = s_{i_1} ... s_{i_{k-1}} (alpha_{i_k}).
  std::vector<Polynomial> roots;
  Permutation prefix;
  for (int i : word) {
    roots.push_back(Polynomial::t(prefix(i + 1)) - Polynomial::t(prefix(i)));
    prefix = prefix * Permutation::simple(i);
  }
  const int target_length = u.length();
  Polynomial total;
  const std::uint64_t subsets = std::uint64_t{1} << word.size();
  std::vector<int> sub;
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    if (std::popcount(mask) != target_length) continue;
    sub.clear();
    for (std::size_t k = 0; k < word.size(); ++k)
      if (mask >> k & 1U) sub.push_back(word[k]);
    if (Permutation::from_word(std::span<const int>(sub)) != u) continue;
    Polynomial product(1L);
    for (std::size_t k = 0; k < word.size(); ++k)
      if (mask >> k & 1U) product *= roots[k];
    total += product;
  }
  return total;
}

Coefficients expand_in_t_basis(const Polynomial& p, int ambient) {
  Coefficients out;
  // Level-by-level walk: partial_{s_i w} P = partial_i partial_w P whenever
  // s_i w > w, and a zero node has only zero descendants.
  std::map<Permutation, Polynomial> level{{Permutation{}, p}};
  while (!level.empty()) {
    std::map<Permutation, Polynomial> next;
    for (const auto& [w, derived] : level) {
      Polynomial coefficient = rename_family(derived, Family::X, Family::T);
      if (!coefficient.is_zero()) out.emplace(w, std::move(coefficient));
      for (int i = 1; i < ambient; ++i) {
        if (w.has_left_descent(i)) continue;
        Permutation up = Permutation::simple(i) * w;
        if (next.contains(up)) continue;
        Polynomial d = partial_i(i, derived);
        if (!d.is_zero()) next.emplace(std::move(up), std::move(d));
      }
    }
    level = std::move(next);
  }

  Polynomial residual = p;
  for (const auto& [w, c] : out) residual -= c * double_schubert_xt(w, ambient);
  if (!residual.is_zero())
    throw ResidualNonzero("expansion in S_" + std::to_string(ambient) +
                          " leaves a nonzero residual");
  return out;
}

int initial_ambient(const Permutation& u, const Permutation& v) {
  return std::max(u.size(), v.size()) + 1;
}

ExpansionResult expand_product(const Permutation& u, const Permutation& v,
                               std::optional<int> ambient) {
  const int m = initial_ambient(u, v);
  const Polynomial product = double_schubert(u, m) * double_schubert_xt(v, m);
  if (ambient) {
    require_in(u, *ambient);
    require_in(v, *ambient);
    return {u, v, *ambient, expand_in_t_basis(product, *ambient)};
  }
  for (int size = m;; ++size) {
    try {
      return {u, v, size, expand_in_t_basis(product, size)};
    } catch (const ResidualNonzero&) {
      if (size >= m + kAmbientGrowth) throw;
    }
  }
}

Polynomial triple_coefficient_skew(const Permutation& u, const Permutation& v,
                                   const Permutation& w) {
  const Polynomial su = double_schubert(u, u.size());
  return rename_family(skew_partial(w, v, su), Family::X, Family::T);
}

Polynomial triple_coefficient(const Permutation& u, const Permutation& v, const Permutation& w,
                              std::optional<int> ambient) {
  const auto expansion = expand_product(u, v, ambient);
  auto it = expansion.coefficients.find(w);
  Polynomial by_expansion = it == expansion.coefficients.end() ? Polynomial{} : it->second;
  Polynomial by_skew = triple_coefficient_skew(u, v, w);
  if (by_expansion != by_skew)
    throw InternalMismatch("c_{" + u.to_string() + "," + v.to_string() + "}^{" + w.to_string() +
                           "}: expansion gives " + render(by_expansion) + ", skew operator gives " +
                           render(by_skew));
  return by_expansion;
}

} // namespace schubert
