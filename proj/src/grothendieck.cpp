#include "schubert/grothendieck.hpp"

#include <mutex>
#include <shared_mutex>

#include "schubert/divided_difference.hpp"
#include "schubert/errors.hpp"
#include "schubert/schubert.hpp"

namespace schubert {

namespace {

void require_in(const Permutation& w, int n) {
  if (w.size() > n)
    throw AmbientTooSmall("permutation " + w.to_string() + " does not lie in S_" +
                          std::to_string(n));
}

class GrothendieckMemo {
public:
  std::optional<LocalizedElement> find(const Permutation& w) const {
    std::shared_lock lock(mutex_);
    auto it = table_.find(w);
    if (it == table_.end()) return std::nullopt;
    return it->second;
  }

  void publish(const Permutation& w, const LocalizedElement& g) {
    std::unique_lock lock(mutex_);
    table_.try_emplace(w, g);
  }

private:
  mutable std::shared_mutex mutex_;
  std::map<Permutation, LocalizedElement> table_;
};

GrothendieckMemo& memo() {
  static GrothendieckMemo instance;
  return instance;
}

LocalizedElement x_ominus_y(int i, int j) {
  return LocalizedElement(Polynomial::x(i) - Polynomial::y(j), {{j, 1}}, {});
}

LocalizedElement grothendieck_memoized(const Permutation& w) {
  if (auto hit = memo().find(w)) return *std::move(hit);
  LocalizedElement result;
  auto code = w.lehmer_code();
  std::size_t ascent = 0;
  while (ascent + 1 < code.size() && code[ascent] >= code[ascent + 1]) ++ascent;
  if (ascent + 1 >= code.size()) {
    result = LocalizedElement(1L);
    for (std::size_t i = 0; i < code.size(); ++i)
      for (int j = 1; j <= code[i]; ++j) result *= x_ominus_y(static_cast<int>(i) + 1, j);
  } else {
    const int i = static_cast<int>(ascent) + 1;
    result = pi_i(i, grothendieck_memoized(w * Permutation::simple(i)));
  }
  memo().publish(w, result);
  return result;
}

LocalizedElement at_fixed_point(const LocalizedElement& g, const Permutation& v) {
  return g.map_numerator([&v](const Polynomial& p) {
    return p.map_variables([&v](Var var) { return var.family == Family::X ? Var::t(v(var.index)) : var; });
  });
}

} // namespace

LocalizedElement ominus(const LocalizedElement& a, const LocalizedElement& b) {
  const LocalizedElement unit = LocalizedElement(1L) + LocalizedElement(Polynomial::beta()) * b;
  return divide(a - b, unit);
}

LocalizedElement oplus(const LocalizedElement& a, const LocalizedElement& b) {
  return a + b + LocalizedElement(Polynomial::beta()) * a * b;
}

LocalizedElement double_grothendieck(const Permutation& w, int n) {
  require_in(w, n);
  return grothendieck_memoized(w);
}

LocalizedElement double_grothendieck_xt(const Permutation& w, int n) {
  return rename_family(double_grothendieck(w, n), Family::Y, Family::T);
}

LocalizedElement double_grothendieck_from_top(const Permutation& w, int n) {
  require_in(w, n);
  LocalizedElement g(1L);
  for (int i = 1; i < n; ++i)
    for (int j = 1; i + j <= n; ++j) g *= x_ominus_y(i, j);
  std::vector<int> path;
  Permutation current = w;
  const Permutation top = longest_element(n);
  while (current != top) {
    int i = 1;
    while (current(i) > current(i + 1)) ++i;
    path.push_back(i);
    current = current * Permutation::simple(i);
  }
  for (auto it = path.rbegin(); it != path.rend(); ++it) g = pi_i(*it, g);
  return g;
}

KCoefficients expand_in_t_basis_K(const LocalizedElement& p, int ambient) {
  KCoefficients out;
  for (const auto& v : all_permutations(ambient)) {
    LocalizedElement residual = at_fixed_point(p, v);
    for (const auto& [w, c] : out) {
      LocalizedElement local = at_fixed_point(double_grothendieck_xt(w, ambient), v);
      if (!local.is_zero()) residual -= c * local;
    }
    if (residual.is_zero()) continue;
    const LocalizedElement diagonal = at_fixed_point(double_grothendieck_xt(v, ambient), v);
    out.emplace(v, divide(residual, diagonal));
  }

  LocalizedElement check = p;
  for (const auto& [w, c] : out) check -= c * double_grothendieck_xt(w, ambient);
  if (!check.is_zero())
    throw ResidualNonzero("K-theoretic expansion in S_" + std::to_string(ambient) +
                          " leaves a nonzero residual");
  return out;
}

KExpansionResult expand_product_K(const Permutation& u, const Permutation& v,
                                  std::optional<int> ambient) {
  const int m = initial_ambient(u, v);
  const LocalizedElement product = double_grothendieck(u, m) * double_grothendieck_xt(v, m);
  if (ambient) {
    require_in(u, *ambient);
    require_in(v, *ambient);
    return {u, v, *ambient, expand_in_t_basis_K(product, *ambient)};
  }
  for (int size = m;; ++size) {
    try {
      return {u, v, size, expand_in_t_basis_K(product, size)};
    } catch (const ResidualNonzero&) {
      if (size >= m + kAmbientGrowth) throw;
    }
  }
}

LocalizedElement triple_coefficient_K(const Permutation& u, const Permutation& v,
                                      const Permutation& w, std::optional<int> ambient) {
  const auto expansion = expand_product_K(u, v, ambient);
  auto it = expansion.coefficients.find(w);
  return it == expansion.coefficients.end() ? LocalizedElement{} : it->second;
}

} // namespace schubert
