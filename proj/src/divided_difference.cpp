#include "schubert/divided_difference.hpp"

#include "schubert/errors.hpp"

namespace schubert {

Polynomial apply_perm_x(const Permutation& w, const Polynomial& f) {
  if (w.is_identity()) return f;
  return f.map_variables([&w](Var v) { return v.family == Family::X ? Var::x(w(v.index)) : v; });
}

Polynomial partial_i(int i, const Polynomial& f) {
  if (i < 1) throw Error("divided difference index must be >= 1");
  const Var xi = Var::x(i);
  const Var xj = Var::x(i + 1);
  Polynomial out;
  // Monomial by monomial: for a > b,
  //   d_i(x_i^a x_{i+1}^b) = sum_{k=0}^{a-b-1} x_i^{a-1-k} x_{i+1}^{b+k},
  // with the mirrored negative sum for a < b and zero for a = b.
  for (const auto& [m, c] : f.terms()) {
    const int a = m.exponent(xi);
    const int b = m.exponent(xj);
    if (a == b) continue;
    std::vector<Monomial::Entry> rest;
    for (const auto& entry : m.entries())
      if (entry.first != xi && entry.first != xj) rest.push_back(entry);
    const Monomial base = Monomial::from_entries(std::move(rest));
    const int lo = std::min(a, b);
    const int hi = std::max(a, b);
    const mpz_class sign = a > b ? c : mpz_class(-c);
    for (int k = 0; k < hi - lo; ++k) {
      Monomial term = base * Monomial(xi, hi - 1 - k) * Monomial(xj, lo + k);
      out.add_term(term, sign);
    }
  }
  return out;
}

Polynomial partial_word(const ReducedWord& word, const Polynomial& f) {
  Polynomial out = f;
  for (auto it = word.rbegin(); it != word.rend() && !out.is_zero(); ++it) out = partial_i(*it, out);
  return out;
}

Polynomial partial_w(const Permutation& w, const Polynomial& f) {
  return partial_word(canonical_reduced_word(w), f);
}

LocalizedElement pi_i(int i, const LocalizedElement& f) {
  return f.map_numerator([i](const Polynomial& p) {
    return partial_i(i, (Polynomial(1L) + Polynomial::beta() * Polynomial::x(i + 1)) * p);
  });
}

Polynomial skew_partial(const Permutation& w, const Permutation& v, const Polynomial& f) {
  if (w.is_identity()) return v.is_identity() ? f : Polynomial{};
  if (v.length() > w.length()) return {};
  int i = 1;
  while (!w.has_left_descent(i)) ++i;
  const Permutation s = Permutation::simple(i);
  const Permutation rest = s * w;
  Polynomial out = partial_i(i, skew_partial(rest, v, f));
  if (v.has_left_descent(i)) out += apply_perm_x(s, skew_partial(rest, s * v, f));
  return out;
}

} // namespace schubert
