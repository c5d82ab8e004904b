#include "schubert/selftest.hpp"

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "schubert/divided_difference.hpp"
#include "schubert/errors.hpp"
#include "schubert/explore.hpp"
#include "schubert/grothendieck.hpp"
#include "schubert/positivity.hpp"
#include "schubert/schubert.hpp"

namespace schubert {

namespace {

using Check = std::pair<std::string, std::function<bool()>>;

bool permutation_group_laws() {
  for (const auto& u : all_permutations(4)) {
    if (!(u * u.inverse()).is_identity()) return false;
    if (u.inverse().length() != u.length()) return false;
    const auto word = canonical_reduced_word(u);
    if (static_cast<int>(word.size()) != u.length()) return false;
    if (Permutation::from_word(std::span<const int>(word)) != u) return false;
    if (parse_permutation(u.to_string()) != u) return false;
    for (const auto& v : all_permutations(3))
      if ((u * v).length() > u.length() + v.length()) return false;
  }
  return true;
}

bool reduced_words_and_bruhat() {
  const auto perms = all_permutations(4);
  for (const auto& w : perms) {
    for (const auto& word : all_reduced_words(w))
      if (!is_reduced_word_for(word, w)) return false;
    if (!bruhat_leq(Permutation{}, w) || !bruhat_leq(w, longest_element(4))) return false;
    for (const auto& u : perms)
      if (bruhat_leq(u, w) && bruhat_leq(w, u) && u != w) return false;
  }
  return true;
}

bool polynomial_render_round_trip() {
  for (const auto& w : all_permutations(4)) {
    const auto p = double_schubert(w, 4);
    if (parse_polynomial(render(p)) != p) return false;
  }
  return true;
}

bool divided_difference_laws() {
  const auto perms = all_permutations(3);
  for (const auto& w : perms) {
    const auto f = double_schubert(w, 4);
    const auto g = double_schubert_xt(w, 4) + Polynomial::x(1);
    for (int i = 1; i <= 3; ++i) {
      if (!partial_i(i, partial_i(i, f)).is_zero()) return false;
      // twisted Leibniz rule
      const auto lhs = partial_i(i, f * g);
      const auto rhs = partial_i(i, f) * g +
                       apply_perm_x(Permutation::simple(i), f) * partial_i(i, g);
      if (lhs != rhs) return false;
    }
    Polynomial sum;
    for (const auto& v : perms) {
      const auto skew = skew_partial(w, v, f);
      if (!bruhat_leq(v, w) && !skew.is_zero()) return false;
      sum += skew * partial_w(v, g);
    }
    if (sum != partial_w(w, f * g)) return false;
  }
  return true;
}

bool schubert_oracles() {
  for (const auto& w : all_permutations(4)) {
    if (pipe_dream_polynomial(w, 4) != double_schubert(w, 4)) return false;
    for (const auto& u : all_permutations(3)) {
      const auto word = canonical_reduced_word(w);
      if (billey(u, w, word) != localize(u, w, 4)) return false;
    }
  }
  return true;
}

bool expansion_reconstructs() {
  const auto perms = all_permutations(3);
  for (const auto& u : perms)
    for (const auto& v : perms) {
      const auto result = expand_product(u, v);
      Polynomial sum;
      for (const auto& [w, c] : result.coefficients)
        sum += c * double_schubert_xt(w, result.ambient);
      if (sum != double_schubert(u, 3) * double_schubert_xt(v, 3)) return false;
      for (const auto& [w, c] : result.coefficients)
        if (triple_coefficient_skew(u, v, w) != c) return false;
    }
  return true;
}

bool grothendieck_reduces() {
  for (const auto& w : all_permutations(4))
    if (beta_zero(double_grothendieck(w, 4)) != double_schubert(w, 4)) return false;
  const auto perms = all_permutations(3);
  for (const auto& u : perms)
    for (const auto& v : perms) {
      const auto k = expand_product_K(u, v);
      const auto h = expand_product(u, v);
      for (const auto& [w, c] : k.coefficients) {
        auto it = h.coefficients.find(w);
        const Polynomial expected = it == h.coefficients.end() ? Polynomial{} : it->second;
        if (beta_zero(c) != expected) return false;
      }
    }
  return true;
}

bool certificates_verify() {
  for (int n : {2, 3}) {
    ExploreOptions options;
    options.n = n;
    const auto report = explore(options);
    for (const auto& record : report.records)
      if (record.outcome != OutcomeKind::Certified) return false;
  }
  ExploreOptions options;
  options.n = 2;
  options.mode = ExploreMode::Grothendieck;
  for (const auto& record : explore(options).records)
    if (record.outcome != OutcomeKind::Certified) return false;
  return true;
}

bool localization_certifies() {
  const auto perms = all_permutations(3);
  for (const auto& u : perms)
    for (const auto& w : perms) {
      const auto outcome = certify_billey(localize(u, w, 3), inversion_pairs(w, 3));
      if (outcome.kind != OutcomeKind::Certified) return false;
    }
  return true;
}

} // namespace

bool run_selftest(std::ostream& out) {
  const std::vector<Check> checks = {
      {"permutations: group laws and canonical words", permutation_group_laws},
      {"permutations: reduced words and Bruhat order", reduced_words_and_bruhat},
      {"polynomials: render/parse round trip", polynomial_render_round_trip},
      {"divided_differences: nilpotence, Leibniz, skew Leibniz", divided_difference_laws},
      {"schubert: pipe dreams and subword formula", schubert_oracles},
      {"schubert: expansion reconstructs the product", expansion_reconstructs},
      {"grothendieck: beta = 0 reduction", grothendieck_reduces},
      {"positivity: S_2, S_3 sweep and S_2 K-sweep certified", certificates_verify},
      {"positivity: localizations positive in inversion roots", localization_certifies},
  };
  bool all = true;
  for (const auto& [name, check] : checks) {
    bool ok = false;
    std::string detail;
    try {
      ok = check();
    } catch (const std::exception& e) {
      detail = std::string(" (") + e.what() + ")";
    }
    out << (ok ? "PASS " : "FAIL ") << name << detail << '\n';
    all = all && ok;
  }
  return all;
}

} // namespace schubert
