#include "schubert/positivity.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>

#include "schubert/errors.hpp"

namespace schubert {

std::string to_string(DifferenceMode mode) {
  switch (mode) {
  case DifferenceMode::Schubert: return "schubert";
  case DifferenceMode::KTheory: return "ktheory";
  case DifferenceMode::Root: return "root";
  }
  return "?";
}

DifferenceMode difference_mode_from_string(const std::string& text) {
  if (text == "schubert") return DifferenceMode::Schubert;
  if (text == "ktheory") return DifferenceMode::KTheory;
  if (text == "root") return DifferenceMode::Root;
  throw Error("unknown certificate mode '" + text + "'");
}

std::string to_string(OutcomeKind kind) {
  switch (kind) {
  case OutcomeKind::Certified: return "Certified";
  case OutcomeKind::InfeasibleComplete: return "InfeasibleComplete";
  case OutcomeKind::InconclusiveAtBounds: return "InconclusiveAtBounds";
  case OutcomeKind::DenominatorShapeViolation: return "DenominatorShapeViolation";
  }
  return "?";
}

Polynomial difference_polynomial(DifferencePair pair, DifferenceMode mode) {
  if (mode == DifferenceMode::Root) return Polynomial::t(pair.j) - Polynomial::t(pair.i);
  return Polynomial::t(pair.i) - Polynomial::y(pair.j);
}

namespace {

std::size_t binomial_capped(std::size_t n, std::size_t k, std::size_t cap) {
  // C(n, k), saturating just above cap.
  mpz_class value;
  mpz_bin_uiui(value.get_mpz_t(), n, k);
  return value > cap ? cap + 1 : value.get_ui();
}

// Multisets (as sorted index sequences) of sizes in [min_size, max_size] over
// `allowed`, subject to per-variable multiplicity caps. `t_of`/`y_of` project
// a pair onto its two capped variables; caps absent from the maps are 0.
struct Caps {
  std::map<int, int> first;
  std::map<int, int> second;
};

std::vector<std::vector<int>> capped_multisets(const std::vector<DifferencePair>& allowed,
                                               int min_size, int max_size, const Caps* caps,
                                               std::size_t cap_count) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  std::map<int, int> used_first;
  std::map<int, int> used_second;
  std::function<void(std::size_t)> grow = [&](std::size_t start) {
    if (static_cast<int>(current.size()) >= min_size) {
      out.push_back(current);
      if (out.size() > cap_count)
        throw SearchSpaceTooLarge("more than " + std::to_string(cap_count) + " candidate monomials");
    }
    if (static_cast<int>(current.size()) == max_size) return;
    for (std::size_t k = start; k < allowed.size(); ++k) {
      const auto& pair = allowed[k];
      if (caps) {
        if (used_first[pair.i] >= caps->first.at(pair.i)) continue;
        if (used_second[pair.j] >= caps->second.at(pair.j)) continue;
        ++used_first[pair.i];
        ++used_second[pair.j];
      }
      current.push_back(static_cast<int>(k));
      grow(k);
      current.pop_back();
      if (caps) {
        --used_first[pair.i];
        --used_second[pair.j];
      }
    }
  };
  grow(0);
  // Emit by size, then lexicographically, so the column order is canonical.
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

std::vector<DifferencePair> pairs_of(const std::vector<int>& indices,
                                     const std::vector<DifferencePair>& allowed) {
  std::vector<DifferencePair> pairs;
  for (int k : indices) pairs.push_back(allowed[k]);
  return pairs;
}

Polynomial monomial_product(const std::vector<DifferencePair>& pairs, DifferenceMode mode) {
  Polynomial p(1L);
  for (const auto& pair : pairs) p *= difference_polynomial(pair, mode);
  return p;
}

CertifyOutcome certified(Certificate certificate) {
  CertifyOutcome out;
  out.kind = OutcomeKind::Certified;
  out.certificate = std::move(certificate);
  return out;
}

CertifyOutcome infeasible(std::string reason) {
  CertifyOutcome out;
  out.kind = OutcomeKind::InfeasibleComplete;
  out.reason = std::move(reason);
  return out;
}

// Solves for an N-combination of `columns`; builds the certificate from the
// matching `monomials`/`beta_powers`.
std::optional<Certificate> search(DifferenceMode mode, const std::vector<Polynomial>& columns,
                                  const std::vector<std::vector<DifferencePair>>& monomials,
                                  const std::vector<int>& beta_powers, const Polynomial& target,
                                  const CertifyOptions& options) {
  auto solution = solve_nonneg_integer(columns, target, options.solver);
  if (!solution) return std::nullopt;
  Certificate certificate;
  certificate.mode = mode;
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if ((*solution)[c] == 0) continue;
    certificate.terms.push_back({monomials[c], beta_powers[c], (*solution)[c]});
  }
  return certificate;
}

void require_no(const Polynomial& p, Family family, const char* what) {
  if (p.contains(family))
    throw NotHomogeneous(std::string("coefficient involves ") + what + ": " + render(p));
}

} // namespace

std::vector<std::vector<DifferencePair>> enumerate_difference_monomials(
    int degree, const std::vector<DifferencePair>& allowed, std::size_t cap) {
  if (degree < 0) throw Error("monomial degree must be >= 0");
  if (degree > 0 && allowed.empty()) return {};
  const std::size_t count =
      degree == 0 ? 1 : binomial_capped(allowed.size() + degree - 1, degree, cap);
  if (count > cap)
    throw SearchSpaceTooLarge("C(" + std::to_string(allowed.size() + degree - 1) + ", " +
                              std::to_string(degree) + ") exceeds the cap of " +
                              std::to_string(cap));
  std::vector<std::vector<DifferencePair>> out;
  for (const auto& indices : capped_multisets(allowed, degree, degree, nullptr, cap))
    out.push_back(pairs_of(indices, allowed));
  return out;
}

CertifyOutcome certify_schubert(const Polynomial& c, int ambient, const CertifyOptions& options) {
  require_no(c, Family::X, "x");
  require_no(c, Family::Beta, "beta");
  const auto degree = c.homogeneous_degree({Family::T, Family::Y});
  if (!degree) throw NotHomogeneous("coefficient is not homogeneous: " + render(c));

  if (c.is_zero()) return certified({DifferenceMode::Schubert, {}, {}});
  if (!quick_screen(c, ambient, 64)) return infeasible("negative at a point with every t_i >= every y_j");

  // A product of differences using t_i (resp. y_j) e times has t_i-degree e
  // with a leading coefficient that is positive at t = 1, y = 0, so those
  // leading parts cannot cancel: no representation uses t_i or y_j more often
  // than its degree in c.
  Caps caps;
  std::vector<DifferencePair> allowed;
  for (int i = 1; i <= ambient; ++i) caps.first[i] = std::max(0, c.degree_in(Var::t(i)));
  for (int j = 1; j <= ambient; ++j) caps.second[j] = std::max(0, c.degree_in(Var::y(j)));
  for (int i = 1; i <= ambient; ++i)
    for (int j = 1; j <= ambient; ++j)
      if (caps.first[i] > 0 && caps.second[j] > 0) allowed.push_back({i, j});

  std::vector<Polynomial> columns;
  std::vector<std::vector<DifferencePair>> monomials;
  for (const auto& indices : capped_multisets(allowed, *degree, *degree, &caps, options.search_cap)) {
    monomials.push_back(pairs_of(indices, allowed));
    columns.push_back(monomial_product(monomials.back(), DifferenceMode::Schubert));
  }
  auto certificate = search(DifferenceMode::Schubert, columns, monomials,
                            std::vector<int>(columns.size(), 0), c, options);
  if (!certificate)
    return infeasible("no N-combination of degree-" + std::to_string(*degree) +
                      " monomials in t_i - y_j");
  certificate->target.coefficient = render(c);
  if (!verify_certificate(*certificate, c))
    throw InternalMismatch("solver returned a certificate that does not verify");
  return certified(*std::move(certificate));
}

CertifyOutcome certify_billey(const Polynomial& loc, const std::set<RootPair>& inversions,
                              const CertifyOptions& options) {
  require_no(loc, Family::X, "x");
  require_no(loc, Family::Y, "y");
  require_no(loc, Family::Beta, "beta");
  if (!loc.is_homogeneous()) throw NotHomogeneous("localization is not homogeneous: " + render(loc));
  if (loc.is_zero()) return certified({DifferenceMode::Root, {}, {}});

  std::vector<DifferencePair> allowed;
  for (const auto& root : inversions) allowed.push_back({root.i, root.j});
  std::vector<std::vector<DifferencePair>> monomials =
      enumerate_difference_monomials(loc.degree(), allowed, options.search_cap);
  std::vector<Polynomial> columns;
  for (const auto& m : monomials) columns.push_back(monomial_product(m, DifferenceMode::Root));

  auto certificate = search(DifferenceMode::Root, columns, monomials,
                            std::vector<int>(columns.size(), 0), loc, options);
  if (!certificate) return infeasible("no N-combination of monomials in the inversion roots");
  certificate->target.coefficient = render(loc);
  if (!verify_certificate(*certificate, loc))
    throw InternalMismatch("solver returned a certificate that does not verify");
  return certified(*std::move(certificate));
}

SearchBounds default_k_bounds(int degree) { return {degree + 4, 6}; }

namespace {

CertifyOutcome certify_grothendieck_within(const LocalizedElement& c, int ambient,
                                           SearchBounds bounds, const CertifyOptions& options) {
  const Polynomial& numerator = c.numerator();
  // Grading with deg(beta) = -1 makes t (-) y homogeneous of degree 1, so a
  // term beta^k * (monomial of size z) has degree z - k.
  std::set<int> degrees;
  for (const auto& [m, coefficient] : numerator.terms()) {
    int d = 0;
    for (const auto& [v, e] : m.entries()) d += v.family == Family::Beta ? -e : e;
    degrees.insert(d);
  }

  // As a function of t_i a term has degree equal to the multiplicity of t_i,
  // and as a function of Y_j = 1/(1+b*y_j) degree equal to that of y_j, with
  // leading parts positive at b = 1, t = 1, y = 0; hence the caps.
  Caps caps;
  std::vector<DifferencePair> allowed;
  for (int i = 1; i <= ambient; ++i) caps.first[i] = std::max(0, numerator.degree_in(Var::t(i)));
  for (int j = 1; j <= ambient; ++j) {
    auto it = c.denom_y().find(j);
    caps.second[j] = it == c.denom_y().end() ? 0 : it->second;
  }
  for (int i = 1; i <= ambient; ++i)
    for (int j = 1; j <= ambient; ++j)
      if (caps.first[i] > 0 && caps.second[j] > 0) allowed.push_back({i, j});

  int total_y = 0;
  for (const auto& [j, e] : caps.second) total_y += e;
  const int min_degree = std::max(0, *degrees.begin());
  const int top = std::min(bounds.max_z_degree, total_y);

  std::vector<Polynomial> columns;
  std::vector<std::vector<DifferencePair>> monomials;
  std::vector<int> beta_powers;
  const auto all = top >= 0 ? capped_multisets(allowed, 0, top, &caps, options.search_cap)
                            : std::vector<std::vector<int>>{};
  std::size_t next = 0;
  for (int z_limit = min_degree; z_limit <= top; ++z_limit) {
    const std::size_t before = columns.size();
    for (; next < all.size() && static_cast<int>(all[next].size()) <= z_limit; ++next) {
      const auto pairs = pairs_of(all[next], allowed);
      const int z = static_cast<int>(pairs.size());
      for (int d : degrees) {
        const int k = z - d;
        if (k < 0 || k > bounds.max_beta_power) continue;
        Polynomial column = Polynomial::beta().pow(k) * monomial_product(pairs, DifferenceMode::Schubert);
        std::map<int, int> used;
        for (const auto& pair : pairs) ++used[pair.j];
        for (const auto& [j, e] : c.denom_y()) column *= unit_factor(Var::y(j)).pow(e - used[j]);
        columns.push_back(std::move(column));
        monomials.push_back(pairs);
        beta_powers.push_back(k);
      }
    }
    if (columns.size() == before && z_limit != min_degree) continue;
    if (auto certificate = search(DifferenceMode::KTheory, columns, monomials, beta_powers,
                                  numerator, options)) {
      certificate->target.coefficient = render(c);
      if (!verify_certificate(*certificate, c))
        throw InternalMismatch("solver returned a certificate that does not verify");
      CertifyOutcome out = certified(*std::move(certificate));
      out.bounds = bounds;
      return out;
    }
  }
  CertifyOutcome out;
  out.kind = OutcomeKind::InconclusiveAtBounds;
  out.bounds = bounds;
  out.reason = "no certificate with at most " + std::to_string(bounds.max_z_degree) +
               " differences and beta power at most " + std::to_string(bounds.max_beta_power);
  return out;
}

} // namespace

CertifyOutcome certify_grothendieck(const LocalizedElement& c, int ambient, SearchBounds bounds,
                                    const CertifyOptions& options, bool grow_once) {
  if (!c.denom_t().empty()) {
    CertifyOutcome out;
    out.kind = OutcomeKind::DenominatorShapeViolation;
    out.reason = "denominator contains (1+b*t_i) factors: " + render(c);
    return out;
  }
  require_no(c.numerator(), Family::X, "x");
  if (c.is_zero()) {
    CertifyOutcome out = certified({DifferenceMode::KTheory, {}, {}});
    out.bounds = bounds;
    return out;
  }
  CertifyOutcome out = certify_grothendieck_within(c, ambient, bounds, options);
  if (out.kind == OutcomeKind::InconclusiveAtBounds && grow_once) {
    bounds = {2 * bounds.max_z_degree, 2 * bounds.max_beta_power};
    out = certify_grothendieck_within(c, ambient, bounds, options);
  }
  return out;
}

bool verify_certificate(const Certificate& certificate, const Polynomial& target) {
  if (certificate.mode == DifferenceMode::KTheory)
    return verify_certificate(certificate, LocalizedElement(target));
  Polynomial total;
  for (const auto& term : certificate.terms) {
    if (term.lambda <= 0 || term.beta != 0) return false;
    Polynomial product(term.lambda);
    for (const auto& pair : term.pairs) {
      if (certificate.mode == DifferenceMode::Root && pair.i >= pair.j) return false;
      product *= difference_polynomial(pair, certificate.mode);
    }
    total += product;
  }
  return total == target;
}

bool verify_certificate(const Certificate& certificate, const LocalizedElement& target) {
  if (certificate.mode != DifferenceMode::KTheory)
    return target.is_polynomial() && verify_certificate(certificate, target.numerator());
  LocalizedElement total;
  for (const auto& term : certificate.terms) {
    if (term.lambda <= 0 || term.beta < 0) return false;
    LocalizedElement product(Polynomial(term.lambda) * Polynomial::beta().pow(term.beta));
    for (const auto& pair : term.pairs)
      product *= LocalizedElement(Polynomial::t(pair.i) - Polynomial::y(pair.j), {{pair.j, 1}}, {});
    total += product;
  }
  return total == target;
}

bool quick_screen(const Polynomial& c, int ambient, std::size_t samples) {
  if (c.is_zero()) return true;
  const int ys = std::max(ambient, c.max_index(Family::Y));
  const int ts = std::max(ambient, c.max_index(Family::T));
  std::mt19937 rng(0x5eedU);
  std::uniform_int_distribution<int> draw(0, 4);
  std::vector<mpz_class> y(ys + 1);
  std::vector<mpz_class> t(ts + 1);
  for (std::size_t s = 0; s <= samples; ++s) {
    // Sample 0 is t = 1, y = 0, where every difference equals 1.
    int top = 0;
    for (int j = 1; j <= ys; ++j) {
      int value = s == 0 ? 0 : draw(rng);
      y[j] = value;
      top = std::max(top, value);
    }
    for (int i = 1; i <= ts; ++i) t[i] = s == 0 ? 1 : top + draw(rng);
    const mpz_class value = evaluate(c, [&](Var v) -> mpz_class {
      if (v.family == Family::Y) return y[v.index];
      if (v.family == Family::T) return t[v.index];
      return 0;
    });
    if (value < 0) return false;
  }
  return true;
}

nlohmann::ordered_json to_json(const Certificate& certificate) {
  nlohmann::ordered_json target = nlohmann::ordered_json::object();
  if (certificate.target.u) target["u"] = certificate.target.u->to_string();
  if (certificate.target.v) target["v"] = certificate.target.v->to_string();
  if (certificate.target.w) target["w"] = certificate.target.w->to_string();
  target["coefficient"] = certificate.target.coefficient;

  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& term : certificate.terms) {
    nlohmann::ordered_json pairs = nlohmann::ordered_json::array();
    for (const auto& pair : term.pairs) pairs.push_back({pair.i, pair.j});
    nlohmann::ordered_json entry;
    entry["pairs"] = std::move(pairs);
    entry["beta"] = term.beta;
    if (term.lambda.fits_slong_p())
      entry["lambda"] = term.lambda.get_si();
    else
      entry["lambda"] = term.lambda.get_str();
    terms.push_back(std::move(entry));
  }

  nlohmann::ordered_json out;
  out["mode"] = to_string(certificate.mode);
  out["target"] = std::move(target);
  out["terms"] = std::move(terms);
  return out;
}

Certificate certificate_from_json(const nlohmann::ordered_json& json) {
  Certificate certificate;
  certificate.mode = difference_mode_from_string(json.at("mode").get<std::string>());
  const auto& target = json.at("target");
  if (target.contains("u")) certificate.target.u = parse_permutation(target["u"].get<std::string>());
  if (target.contains("v")) certificate.target.v = parse_permutation(target["v"].get<std::string>());
  if (target.contains("w")) certificate.target.w = parse_permutation(target["w"].get<std::string>());
  certificate.target.coefficient = target.at("coefficient").get<std::string>();
  for (const auto& entry : json.at("terms")) {
    CertificateTerm term;
    for (const auto& pair : entry.at("pairs"))
      term.pairs.push_back({pair.at(0).get<int>(), pair.at(1).get<int>()});
    term.beta = entry.at("beta").get<int>();
    const auto& lambda = entry.at("lambda");
    term.lambda = lambda.is_string() ? mpz_class(lambda.get<std::string>())
                                     : mpz_class(lambda.get<long>());
    certificate.terms.push_back(std::move(term));
  }
  return certificate;
}

} // namespace schubert
