#include "schubert/localized.hpp"

#include <algorithm>
#include <set>

#include "schubert/errors.hpp"

namespace schubert {

namespace {

Polynomial factor_power(Family family, int index, int exponent) {
  return unit_factor(Var{family, index}).pow(exponent);
}

// Strips every factor (1+b*v)^e from p for v of `family`, e bounded by `limit`
// when given. Returns the stripped exponents.
LocalizedElement::Exponents strip_units(Polynomial& p, Family family,
                                        const LocalizedElement::Exponents* limit) {
  LocalizedElement::Exponents stripped;
  if (p.is_zero()) return stripped;
  std::set<int> candidates;
  if (limit) {
    for (const auto& [index, e] : *limit) candidates.insert(index);
  } else {
    for (const auto& [m, c] : p.terms())
      for (const auto& [v, e] : m.entries())
        if (v.family == family) candidates.insert(v.index);
  }
  for (int index : candidates) {
    int cap = limit ? limit->at(index) : p.degree();
    const Polynomial unit = unit_factor(Var{family, index});
    while (stripped[index] < cap) {
      auto q = try_divide(p, unit);
      if (!q) break;
      p = *std::move(q);
      ++stripped[index];
    }
    if (stripped[index] == 0) stripped.erase(index);
  }
  return stripped;
}

void subtract(LocalizedElement::Exponents& from, const LocalizedElement::Exponents& amount) {
  for (const auto& [index, e] : amount)
    if ((from[index] -= e) == 0) from.erase(index);
}

} // namespace

Polynomial unit_factor(Var v) { return Polynomial(1L) + Polynomial::beta() * Polynomial(v); }

LocalizedElement::LocalizedElement(Polynomial numerator) : numerator_(std::move(numerator)) {}

LocalizedElement::LocalizedElement(Polynomial numerator, Exponents denom_y, Exponents denom_t)
    : numerator_(std::move(numerator)), denom_y_(std::move(denom_y)), denom_t_(std::move(denom_t)) {
  std::erase_if(denom_y_, [](const auto& entry) { return entry.second == 0; });
  std::erase_if(denom_t_, [](const auto& entry) { return entry.second == 0; });
  if (numerator_.is_zero()) {
    denom_y_.clear();
    denom_t_.clear();
    return;
  }
  subtract(denom_y_, strip_units(numerator_, Family::Y, &denom_y_));
  subtract(denom_t_, strip_units(numerator_, Family::T, &denom_t_));
}

LocalizedElement LocalizedElement::unreduced(Polynomial numerator, Exponents denom_y,
                                             Exponents denom_t) {
  LocalizedElement out;
  out.numerator_ = std::move(numerator);
  out.denom_y_ = std::move(denom_y);
  out.denom_t_ = std::move(denom_t);
  return out;
}

Polynomial LocalizedElement::denominator() const {
  Polynomial d(1L);
  for (const auto& [j, e] : denom_y_) d *= factor_power(Family::Y, j, e);
  for (const auto& [i, e] : denom_t_) d *= factor_power(Family::T, i, e);
  return d;
}

LocalizedElement LocalizedElement::operator-() const {
  LocalizedElement out = *this;
  out.numerator_ = -out.numerator_;
  return out;
}

namespace {

// Brings a and b over the least common denominator; returns the scaled
// numerators together with the common exponents.
struct CommonForm {
  Polynomial a;
  Polynomial b;
  LocalizedElement::Exponents y;
  LocalizedElement::Exponents t;
};

CommonForm common_form(const LocalizedElement& a, const LocalizedElement& b) {
  CommonForm out{a.numerator(), b.numerator(), a.denom_y(), a.denom_t()};
  for (const auto& [j, e] : b.denom_y()) out.y[j] = std::max(out.y[j], e);
  for (const auto& [i, e] : b.denom_t()) out.t[i] = std::max(out.t[i], e);
  const auto scale = [](Polynomial& p, const LocalizedElement::Exponents& have,
                        const LocalizedElement::Exponents& want, Family family) {
    for (const auto& [index, e] : want) {
      auto it = have.find(index);
      int missing = e - (it == have.end() ? 0 : it->second);
      if (missing > 0) p *= factor_power(family, index, missing);
    }
  };
  scale(out.a, a.denom_y(), out.y, Family::Y);
  scale(out.a, a.denom_t(), out.t, Family::T);
  scale(out.b, b.denom_y(), out.y, Family::Y);
  scale(out.b, b.denom_t(), out.t, Family::T);
  return out;
}

} // namespace

LocalizedElement operator+(const LocalizedElement& a, const LocalizedElement& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.is_polynomial() && b.is_polynomial()) return LocalizedElement(a.numerator_ + b.numerator_);
  auto common = common_form(a, b);
  return LocalizedElement(common.a + common.b, std::move(common.y), std::move(common.t));
}

LocalizedElement operator-(const LocalizedElement& a, const LocalizedElement& b) { return a + (-b); }

LocalizedElement operator*(const LocalizedElement& a, const LocalizedElement& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_polynomial() && b.is_polynomial()) return LocalizedElement(a.numerator_ * b.numerator_);
  auto y = a.denom_y_;
  auto t = a.denom_t_;
  for (const auto& [j, e] : b.denom_y_) y[j] += e;
  for (const auto& [i, e] : b.denom_t_) t[i] += e;
  return LocalizedElement(a.numerator_ * b.numerator_, std::move(y), std::move(t));
}

LocalizedElement frac_reduce(const LocalizedElement& a) {
  return LocalizedElement(a.numerator(), a.denom_y(), a.denom_t());
}

Polynomial beta_zero(const LocalizedElement& a) { return zero_family(a.numerator(), Family::Beta); }

LocalizedElement divide(const LocalizedElement& a, const LocalizedElement& b) {
  if (b.is_zero()) throw NotDivisible("division by zero in the localized ring");
  Polynomial scaled = a.numerator() * b.denominator();
  if (auto q = try_divide(scaled, b.numerator()))
    return LocalizedElement(*std::move(q), a.denom_y(), a.denom_t());

  // Peel unit factors off the divisor; they move into the denominator.
  Polynomial core = b.numerator();
  auto extra_y = strip_units(core, Family::Y, nullptr);
  auto extra_t = strip_units(core, Family::T, nullptr);
  auto q = try_divide(scaled, core);
  if (!q)
    throw NotDivisible("(" + render(a) + ") is not divisible by (" + render(b) + ")");
  auto y = a.denom_y();
  auto t = a.denom_t();
  for (const auto& [j, e] : extra_y) y[j] += e;
  for (const auto& [i, e] : extra_t) t[i] += e;
  return LocalizedElement(*std::move(q), std::move(y), std::move(t));
}

LocalizedElement rename_family(const LocalizedElement& a, Family from, Family to) {
  Polynomial numerator = rename_family(a.numerator(), from, to);
  LocalizedElement::Exponents y;
  LocalizedElement::Exponents t;
  const auto route = [&](Family family, const LocalizedElement::Exponents& source) {
    Family target = family == from ? to : family;
    if (target != Family::Y && target != Family::T)
      throw DenominatorShapeViolation("cannot rename denominator variables into family " +
                                      Var{target, 1}.name());
    auto& sink = target == Family::Y ? y : t;
    for (const auto& [index, e] : source) sink[index] += e;
  };
  route(Family::Y, a.denom_y());
  route(Family::T, a.denom_t());
  return LocalizedElement(std::move(numerator), std::move(y), std::move(t));
}

std::string render(const LocalizedElement& a) {
  if (a.is_polynomial()) return render(a.numerator());
  std::string numerator = render(a.numerator());
  if (a.numerator().size() > 1) numerator = "(" + numerator + ")";
  std::string denominator;
  const auto emit = [&denominator](const std::string& var, int index, int e) {
    if (!denominator.empty()) denominator += '*';
    denominator += "(1+b*" + var + std::to_string(index) + ")";
    if (e > 1) denominator += "^" + std::to_string(e);
  };
  for (const auto& [j, e] : a.denom_y()) emit("y", j, e);
  for (const auto& [i, e] : a.denom_t()) emit("t", i, e);
  return numerator + " / (" + denominator + ")";
}

} // namespace schubert
