#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "json.hpp"
#include "schubert/localized.hpp"
#include "schubert/permutation.hpp"
#include "schubert/polynomial.hpp"
#include "schubert/solver.hpp"

namespace schubert {

// How a pair (i, j) is read:
//   Schubert  t_i - y_j
//   KTheory   t_i (-) y_j = (t_i - y_j) / (1 + b*y_j)
//   Root      t_j - t_i, i < j
enum class DifferenceMode { Schubert, KTheory, Root };

std::string to_string(DifferenceMode mode);
DifferenceMode difference_mode_from_string(const std::string& text);

struct DifferencePair {
  int i = 0;
  int j = 0;
  friend auto operator<=>(const DifferencePair&, const DifferencePair&) = default;
};

Polynomial difference_polynomial(DifferencePair pair, DifferenceMode mode);

struct CertificateTerm {
  std::vector<DifferencePair> pairs; // multiset, sorted
  int beta = 0;
  mpz_class lambda = 1;
  friend bool operator==(const CertificateTerm&, const CertificateTerm&) = default;
};

// What a certificate is about: (u, v, w) for structure constants, (u, w) for
// localizations, plus the rendered coefficient itself.
struct CertificateTarget {
  std::optional<Permutation> u;
  std::optional<Permutation> v;
  std::optional<Permutation> w;
  std::string coefficient;
  friend bool operator==(const CertificateTarget&, const CertificateTarget&) = default;
};

struct Certificate {
  DifferenceMode mode = DifferenceMode::Schubert;
  CertificateTarget target;
  std::vector<CertificateTerm> terms;
  friend bool operator==(const Certificate&, const Certificate&) = default;
};

enum class OutcomeKind { Certified, InfeasibleComplete, InconclusiveAtBounds, DenominatorShapeViolation };
std::string to_string(OutcomeKind kind);

struct SearchBounds {
  int max_z_degree = 0;
  int max_beta_power = 0;
  friend bool operator==(const SearchBounds&, const SearchBounds&) = default;
};

struct CertifyOutcome {
  OutcomeKind kind = OutcomeKind::InfeasibleComplete;
  std::optional<Certificate> certificate;  // Certified only
  std::optional<SearchBounds> bounds;      // bounds searched, K-theory mode
  std::string reason;
};

struct CertifyOptions {
  std::size_t search_cap = 1000000; // columns per solver call
  SolverOptions solver;
};

// Multisets of `degree` elements of `allowed`, as non-decreasing index
// sequences in lexicographic order. Throws SearchSpaceTooLarge when the count
// C(|allowed| + degree - 1, degree) exceeds `cap`.
std::vector<std::vector<DifferencePair>> enumerate_difference_monomials(
    int degree, const std::vector<DifferencePair>& allowed, std::size_t cap = 1000000);

// c in N[t_i - y_j], i, j <= ambient. Because c is homogeneous, every
// representation uses monomials of degree deg(c) only, so a failed search is
// a proof of non-membership (InfeasibleComplete).
CertifyOutcome certify_schubert(const Polynomial& c, int ambient, const CertifyOptions& options = {});

// loc in N[t_j - t_i : (i,j) in inversions]; complete for the same reason.
CertifyOutcome certify_billey(const Polynomial& loc, const std::set<RootPair>& inversions,
                              const CertifyOptions& options = {});

// c in N[b][t_i (-) y_j] with monomial size <= max_z_degree and beta power
// <= max_beta_power. Never claims infeasibility: an unsuccessful search is
// InconclusiveAtBounds. With `grow_once`, the bounds are doubled once before
// giving up.
CertifyOutcome certify_grothendieck(const LocalizedElement& c, int ambient, SearchBounds bounds,
                                    const CertifyOptions& options = {}, bool grow_once = true);

// Default K-theory bounds for a coefficient of expected degree `degree`.
SearchBounds default_k_bounds(int degree);

// Re-expands the certificate with polynomial arithmetic only and compares.
bool verify_certificate(const Certificate& certificate, const Polynomial& target);
bool verify_certificate(const Certificate& certificate, const LocalizedElement& target);

// Necessary condition for membership in N[t_i - y_j]: c >= 0 whenever every
// t_i is at least every y_j. Evaluates deterministic pseudo-random points;
// false means c is certainly not certifiable.
bool quick_screen(const Polynomial& c, int ambient, std::size_t samples);

// {"mode": ..., "target": {...}, "terms": [{"pairs": [[i,j],...], "beta": k, "lambda": n}]}
nlohmann::ordered_json to_json(const Certificate& certificate);
Certificate certificate_from_json(const nlohmann::ordered_json& json);

} // namespace schubert
