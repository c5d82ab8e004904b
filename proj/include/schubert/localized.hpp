#pragma once

#include <map>
#include <string>

#include "schubert/polynomial.hpp"

namespace schubert {

// numerator / (prod_j (1+b*y_j)^{denom_y[j]} * prod_i (1+b*t_i)^{denom_t[i]}).
//
// The public constructor always reduces: no recorded factor divides the
// numerator and zero has empty denominators. Since the denominator factors are
// distinct irreducibles, reduced form is unique and == is exact equality.
class LocalizedElement {
public:
  using Exponents = std::map<int, int>;

  LocalizedElement() = default;
  LocalizedElement(Polynomial numerator); // NOLINT(google-explicit-constructor)
  LocalizedElement(long constant) : LocalizedElement(Polynomial(constant)) {} // NOLINT
  LocalizedElement(Polynomial numerator, Exponents denom_y, Exponents denom_t);

  // Keeps the given representation as is; only frac_reduce normalizes it.
  static LocalizedElement unreduced(Polynomial numerator, Exponents denom_y, Exponents denom_t);

  const Polynomial& numerator() const { return numerator_; }
  const Exponents& denom_y() const { return denom_y_; }
  const Exponents& denom_t() const { return denom_t_; }
  Polynomial denominator() const;

  bool is_zero() const { return numerator_.is_zero(); }
  bool is_polynomial() const { return denom_y_.empty() && denom_t_.empty(); }

  LocalizedElement operator-() const;
  friend LocalizedElement operator+(const LocalizedElement& a, const LocalizedElement& b);
  friend LocalizedElement operator-(const LocalizedElement& a, const LocalizedElement& b);
  friend LocalizedElement operator*(const LocalizedElement& a, const LocalizedElement& b);
  LocalizedElement& operator+=(const LocalizedElement& b) { return *this = *this + b; }
  LocalizedElement& operator-=(const LocalizedElement& b) { return *this = *this - b; }
  LocalizedElement& operator*=(const LocalizedElement& b) { return *this = *this * b; }
  friend bool operator==(const LocalizedElement&, const LocalizedElement&) = default;

  // Applies `f` to the numerator; the caller guarantees f leaves y, t, beta alone.
  template <typename F> LocalizedElement map_numerator(F&& f) const {
    return LocalizedElement(f(numerator_), denom_y_, denom_t_);
  }

private:
  Polynomial numerator_;
  Exponents denom_y_;
  Exponents denom_t_;
};

// 1 + b*v for v = y_j or t_i.
Polynomial unit_factor(Var v);

LocalizedElement frac_reduce(const LocalizedElement& a);
// Sets beta = 0; every denominator factor becomes 1.
Polynomial beta_zero(const LocalizedElement& a);

// a / b. Succeeds when b's numerator is (a divisor of a's numerator) times
// allowed unit factors; throws NotDivisible otherwise.
LocalizedElement divide(const LocalizedElement& a, const LocalizedElement& b);

// Relabels `from` as `to` throughout; renaming y to t moves every (1+b*y_j)
// factor onto (1+b*t_j).
LocalizedElement rename_family(const LocalizedElement& a, Family from, Family to);

// "<num> / ((1+b*y1)^2*(1+b*t3))"; plain render() when the denominator is 1.
std::string render(const LocalizedElement& a);

} // namespace schubert
