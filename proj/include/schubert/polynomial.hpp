#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace schubert {

// Variable families, declared in precedence order x < t < y < beta, so that
// differences render as "x1 - y1" and "t2 - y1".
enum class Family : std::uint8_t { X = 0, T = 1, Y = 2, Beta = 3 };

struct Var {
  Family family = Family::X;
  int index = 0; // >= 1 for x, y, t; 0 for beta

  static Var x(int i) { return {Family::X, i}; }
  static Var y(int i) { return {Family::Y, i}; }
  static Var t(int i) { return {Family::T, i}; }
  static Var beta() { return {Family::Beta, 0}; }

  std::string name() const;
  friend auto operator<=>(const Var&, const Var&) = default;
};

// Sparse power product; entries sorted by Var, exponents positive.
class Monomial {
public:
  using Entry = std::pair<Var, int>;

  Monomial() = default;
  explicit Monomial(Var v, int exponent = 1);
  // Entries need not be sorted; zero exponents are dropped, repeats merged.
  static Monomial from_entries(std::vector<Entry> entries);

  const std::vector<Entry>& entries() const { return entries_; }
  int degree() const;
  int exponent(Var v) const;
  bool is_one() const { return entries_.empty(); }

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  // Precondition: divisor.divides(*this).
  Monomial operator/(const Monomial& divisor) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

private:
  std::vector<Entry> entries_;
};

// Graded lexicographic order: higher total degree first, then the monomial
// with the larger exponent at the first differing variable (x1, x2, ...,
// t1, ..., y1, ..., beta) comes first. This is a strict "comes before"
// relation, i.e. a descending monomial order.
struct TermOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

// Exact polynomial in Z[x, y, t, beta]. Terms are kept in TermOrder, so
// iteration starts at the leading term and zero is the empty map.
class Polynomial {
public:
  using Terms = std::map<Monomial, mpz_class, TermOrder>;

  Polynomial() = default;
  Polynomial(long constant); // NOLINT(google-explicit-constructor)
  Polynomial(const mpz_class& constant); // NOLINT(google-explicit-constructor)
  Polynomial(Var v); // NOLINT(google-explicit-constructor)
  Polynomial(const Monomial& m, const mpz_class& coefficient);

  static Polynomial x(int i) { return Var::x(i); }
  static Polynomial y(int i) { return Var::y(i); }
  static Polynomial t(int i) { return Var::t(i); }
  static Polynomial beta() { return Var::beta(); }

  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Total degree; -1 stands in for the degree of 0.
  int degree() const;
  int degree_in(Var v) const;
  int degree_in(Family family) const;
  bool contains(Family family) const;
  // Largest index of a variable of `family` present, 0 if none.
  int max_index(Family family) const;
  bool is_homogeneous() const;
  // Homogeneous in the given families jointly (other variables ignored).
  std::optional<int> homogeneous_degree(std::initializer_list<Family> families) const;
  const std::pair<const Monomial, mpz_class>& leading_term() const { return *terms_.begin(); }
  mpz_class coefficient(const Monomial& m) const;
  mpz_class constant_term() const { return coefficient(Monomial{}); }

  void add_term(const Monomial& m, const mpz_class& coefficient);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const mpz_class& scalar);
  Polynomial operator-() const;

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const mpz_class& s) { return a *= s; }
  friend Polynomial operator*(Polynomial a, long s) { return a *= mpz_class(s); }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  Polynomial pow(int exponent) const;

  // Relabels variables one by one; `rename` must be injective on the
  // variables present for the result to stay a relabeling.
  Polynomial map_variables(const std::function<Var(Var)>& rename) const;

private:
  Terms terms_;
};

// Simultaneous substitution of variables by polynomials.
Polynomial substitute(const Polynomial& p, const std::map<Var, Polynomial>& images);
// Replaces every variable of family `from` by the same index in `to`.
Polynomial rename_family(const Polynomial& p, Family from, Family to);
// Sets every variable of `family` to zero.
Polynomial zero_family(const Polynomial& p, Family family);
mpz_class evaluate(const Polynomial& p, const std::function<mpz_class(Var)>& value);

// Exact quotient p / q. Throws NotDivisible when q does not divide p.
Polynomial exact_divide(const Polynomial& p, const Polynomial& q);
std::optional<Polynomial> try_divide(const Polynomial& p, const Polynomial& q);

// Grammar: expr ::= term (('+'|'-') term)*, term ::= factor ('*' factor)*,
// factor ::= integer | var | var '^' N | '(' expr ')', var ::= xN | yN | tN | b.
// Integers may carry a leading '-'; a leading sign on the whole expression
// is also accepted so that render() output always parses.
Polynomial parse_polynomial(std::string_view text);
std::string render(const Polynomial& p);

} // namespace schubert
