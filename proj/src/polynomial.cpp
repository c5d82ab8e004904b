#include "schubert/polynomial.hpp"

#include <algorithm>
#include <cctype>

#include "schubert/errors.hpp"

namespace schubert {

std::string Var::name() const {
  switch (family) {
  case Family::X: return "x" + std::to_string(index);
  case Family::Y: return "y" + std::to_string(index);
  case Family::T: return "t" + std::to_string(index);
  case Family::Beta: return "b";
  }
  return "?";
}

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(Var v, int exponent) {
  if (exponent > 0) entries_.emplace_back(v, exponent);
}

Monomial Monomial::from_entries(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  Monomial m;
  for (const auto& [v, e] : entries) {
    if (!m.entries_.empty() && m.entries_.back().first == v)
      m.entries_.back().second += e;
    else
      m.entries_.emplace_back(v, e);
  }
  std::erase_if(m.entries_, [](const Entry& entry) { return entry.second == 0; });
  return m;
}

int Monomial::degree() const {
  int d = 0;
  for (const auto& entry : entries_) d += entry.second;
  return d;
}

int Monomial::exponent(Var v) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), v,
                             [](const Entry& e, Var key) { return e.first < key; });
  return it != entries_.end() && it->first == v ? it->second : 0;
}

bool Monomial::divides(const Monomial& other) const {
  auto it = other.entries_.begin();
  for (const auto& [v, e] : entries_) {
    while (it != other.entries_.end() && it->first < v) ++it;
    if (it == other.entries_.end() || it->first != v || it->second < e) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  out.entries_.reserve(entries_.size() + other.entries_.size());
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() || b != other.entries_.end()) {
    if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
      out.entries_.push_back(*a++);
    } else if (a == entries_.end() || b->first < a->first) {
      out.entries_.push_back(*b++);
    } else {
      out.entries_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  return out;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  Monomial out;
  auto d = divisor.entries_.begin();
  for (const auto& [v, e] : entries_) {
    int remaining = e;
    if (d != divisor.entries_.end() && d->first == v) remaining -= (d++)->second;
    if (remaining > 0) out.entries_.emplace_back(v, remaining);
  }
  return out;
}

bool TermOrder::operator()(const Monomial& a, const Monomial& b) const {
  const int da = a.degree();
  const int db = b.degree();
  if (da != db) return da > db;
  const auto& ea = a.entries();
  const auto& eb = b.entries();
  for (std::size_t k = 0; k < ea.size() && k < eb.size(); ++k) {
    if (ea[k].first != eb[k].first) return ea[k].first < eb[k].first;
    if (ea[k].second != eb[k].second) return ea[k].second > eb[k].second;
  }
  // Equal degree and a common prefix means the entry lists are identical.
  return false;
}

// -------------------------------------------------------------- Polynomial

Polynomial::Polynomial(long constant) {
  if (constant != 0) terms_.emplace(Monomial{}, mpz_class(constant));
}

Polynomial::Polynomial(const mpz_class& constant) {
  if (constant != 0) terms_.emplace(Monomial{}, constant);
}

Polynomial::Polynomial(Var v) { terms_.emplace(Monomial(v), mpz_class(1)); }

Polynomial::Polynomial(const Monomial& m, const mpz_class& coefficient) {
  if (coefficient != 0) terms_.emplace(m, coefficient);
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

int Polynomial::degree() const {
  return terms_.empty() ? -1 : terms_.begin()->first.degree();
}

int Polynomial::degree_in(Var v) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(v));
  return d;
}

int Polynomial::degree_in(Family family) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [m, c] : terms_) {
    int partial = 0;
    for (const auto& [v, e] : m.entries())
      if (v.family == family) partial += e;
    d = std::max(d, partial);
  }
  return d;
}

bool Polynomial::contains(Family family) const {
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m.entries())
      if (v.family == family) return true;
  return false;
}

int Polynomial::max_index(Family family) const {
  int best = 0;
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m.entries())
      if (v.family == family) best = std::max(best, v.index);
  return best;
}

bool Polynomial::is_homogeneous() const {
  for (const auto& [m, c] : terms_)
    if (m.degree() != degree()) return false;
  return true;
}

std::optional<int> Polynomial::homogeneous_degree(std::initializer_list<Family> families) const {
  std::optional<int> degree;
  for (const auto& [m, c] : terms_) {
    int d = 0;
    for (const auto& [v, e] : m.entries())
      if (std::find(families.begin(), families.end(), v.family) != families.end()) d += e;
    if (degree && *degree != d) return std::nullopt;
    degree = d;
  }
  return degree ? degree : std::optional<int>(0);
}

mpz_class Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const mpz_class& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial& Polynomial::operator*=(const mpz_class& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= scalar;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Polynomial Polynomial::pow(int exponent) const {
  Polynomial result(1L);
  for (int k = 0; k < exponent; ++k) result *= *this;
  return result;
}

Polynomial Polynomial::map_variables(const std::function<Var(Var)>& rename) const {
  Polynomial out;
  for (const auto& [m, c] : terms_) {
    std::vector<Monomial::Entry> entries;
    entries.reserve(m.entries().size());
    for (const auto& [v, e] : m.entries()) entries.emplace_back(rename(v), e);
    out.add_term(Monomial::from_entries(std::move(entries)), c);
  }
  return out;
}

// ------------------------------------------------------------- Free helpers

Polynomial substitute(const Polynomial& p, const std::map<Var, Polynomial>& images) {
  Polynomial out;
  // Powers are cached per (variable, exponent) within one call.
  std::map<std::pair<Var, int>, Polynomial> powers;
  for (const auto& [m, c] : p.terms()) {
    Polynomial term(c);
    Monomial untouched;
    for (const auto& [v, e] : m.entries()) {
      auto it = images.find(v);
      if (it == images.end()) {
        untouched = untouched * Monomial(v, e);
        continue;
      }
      auto key = std::make_pair(v, e);
      auto cached = powers.find(key);
      if (cached == powers.end()) cached = powers.emplace(key, it->second.pow(e)).first;
      term *= cached->second;
      if (term.is_zero()) break;
    }
    if (!untouched.is_one()) term *= Polynomial(untouched, 1);
    out += term;
  }
  return out;
}

Polynomial rename_family(const Polynomial& p, Family from, Family to) {
  return p.map_variables([from, to](Var v) { return v.family == from ? Var{to, v.index} : v; });
}

Polynomial zero_family(const Polynomial& p, Family family) {
  Polynomial out;
  for (const auto& [m, c] : p.terms()) {
    bool keeps = std::none_of(m.entries().begin(), m.entries().end(),
                              [family](const auto& entry) { return entry.first.family == family; });
    if (keeps) out.add_term(m, c);
  }
  return out;
}

mpz_class evaluate(const Polynomial& p, const std::function<mpz_class(Var)>& value) {
  mpz_class total = 0;
  for (const auto& [m, c] : p.terms()) {
    mpz_class term = c;
    for (const auto& [v, e] : m.entries()) {
      mpz_class power;
      mpz_pow_ui(power.get_mpz_t(), value(v).get_mpz_t(), static_cast<unsigned long>(e));
      term *= power;
    }
    total += term;
  }
  return total;
}

std::optional<Polynomial> try_divide(const Polynomial& p, const Polynomial& q) {
  if (q.is_zero()) return std::nullopt;
  const auto& [lead_m, lead_c] = q.leading_term();
  Polynomial remainder = p;
  Polynomial quotient;
  // With a monomial order, q | p forces lt(q) | lt(remainder) at every step.
  while (!remainder.is_zero()) {
    const auto& [rm, rc] = remainder.leading_term();
    if (!lead_m.divides(rm) || !mpz_divisible_p(rc.get_mpz_t(), lead_c.get_mpz_t()))
      return std::nullopt;
    mpz_class factor_c = rc / lead_c;
    Monomial factor_m = rm / lead_m;
    quotient.add_term(factor_m, factor_c);
    for (const auto& [m, c] : q.terms()) remainder.add_term(m * factor_m, -(c * factor_c));
  }
  return quotient;
}

Polynomial exact_divide(const Polynomial& p, const Polynomial& q) {
  if (q.is_zero()) throw NotDivisible("division by the zero polynomial");
  auto quotient = try_divide(p, q);
  if (!quotient) throw NotDivisible("(" + render(p) + ") is not divisible by (" + render(q) + ")");
  return *std::move(quotient);
}

// ------------------------------------------------------------------ Parsing

namespace {

class Parser {
public:
  explicit Parser(std::string_view text) : text_(text) {}

  Polynomial parse() {
    Polynomial result = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return result;
  }

private:
  [[noreturn]] void fail(const std::string& message) const { throw SyntaxError(message, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool at_digit() {
    skip_space();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  std::string digits() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return std::string(text_.substr(start, pos_ - start));
  }

  int small_number() {
    std::string d = digits();
    if (d.size() > 6) fail("index or exponent too large");
    return std::stoi(d);
  }

  Polynomial expr() {
    Polynomial result;
    bool negate = false;
    if (peek('-') && !next_is_integer()) {
      ++pos_;
      negate = true;
    } else if (peek('+')) {
      ++pos_;
    }
    Polynomial first = term();
    result = negate ? -first : first;
    for (;;) {
      if (peek('+')) {
        ++pos_;
        result += term();
      } else if (peek('-')) {
        ++pos_;
        result -= term();
      } else {
        break;
      }
    }
    return result;
  }

  bool next_is_integer() {
    std::size_t look = pos_ + 1;
    while (look < text_.size() && std::isspace(static_cast<unsigned char>(text_[look]))) ++look;
    return look < text_.size() && std::isdigit(static_cast<unsigned char>(text_[look]));
  }

  Polynomial term() {
    Polynomial result = factor();
    while (peek('*')) {
      ++pos_;
      result *= factor();
    }
    return result;
  }

  Polynomial factor() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
      bool negative = c == '-';
      if (negative) ++pos_;
      if (!at_digit()) fail("expected a number after '-'");
      mpz_class value(digits());
      return Polynomial(negative ? mpz_class(-value) : value);
    }
    Var v;
    if (c == 'b') {
      ++pos_;
      v = Var::beta();
    } else if (c == 'x' || c == 'y' || c == 't') {
      ++pos_;
      if (!at_digit()) fail("expected a variable index");
      int index = small_number();
      if (index < 1) fail("variable indices start at 1");
      v = Var{c == 'x' ? Family::X : c == 'y' ? Family::Y : Family::T, index};
    } else {
      fail("unexpected character '" + std::string(1, c) + "'");
    }
    int exponent = 1;
    if (peek('^')) {
      ++pos_;
      exponent = small_number();
    }
    return Polynomial(Monomial(v, exponent), 1);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string render_monomial(const Monomial& m) {
  std::string out;
  for (const auto& [v, e] : m.entries()) {
    if (!out.empty()) out += '*';
    out += v.name();
    if (e > 1) out += '^' + std::to_string(e);
  }
  return out;
}

} // namespace

Polynomial parse_polynomial(std::string_view text) { return Parser(text).parse(); }

std::string render(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const bool negative = c < 0;
    mpz_class magnitude = abs(c);
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    if (m.is_one()) {
      out += magnitude.get_str();
    } else {
      if (magnitude != 1) out += magnitude.get_str() + "*";
      out += render_monomial(m);
    }
    first = false;
  }
  return out;
}

} // namespace schubert
