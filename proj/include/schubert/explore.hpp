#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "schubert/cache.hpp"
#include "schubert/positivity.hpp"

namespace schubert {

enum class ExploreMode { Schubert, Grothendieck };

struct ExploreOptions {
  int n = 2;
  ExploreMode mode = ExploreMode::Schubert;
  int jobs = 1;
  // K-theory bounds; default_k_bounds(degree) per coefficient when unset.
  std::optional<SearchBounds> bounds;
  CertifyOptions certify;
  const ResultCache* cache = nullptr;
  int max_n_schubert = 4;
  int max_n_grothendieck = 3;
};

struct ExploreRecord {
  Permutation u;
  Permutation v;
  Permutation w;
  std::string coefficient;
  OutcomeKind outcome = OutcomeKind::InfeasibleComplete;
  std::optional<Certificate> certificate;
  std::optional<SearchBounds> bounds;
  std::string reason;
};

struct ExploreReport {
  int n = 0;
  ExploreMode mode = ExploreMode::Schubert;
  std::optional<SearchBounds> bounds;
  std::vector<ExploreRecord> records; // sorted by (u, v, w)
  std::map<OutcomeKind, std::size_t> summary;
  long wall_clock_ms = 0;
};

// Expands the product for every (u, v) in S_n x S_n and certifies every
// nonzero coefficient. Work is spread over `jobs` threads; the result does
// not depend on the thread count apart from wall_clock_ms.
ExploreReport explore(const ExploreOptions& options);

// 0 all certified, 1 something inconclusive, 3 a positivity theorem violated
// (InfeasibleComplete in Schubert mode or a denominator shape violation).
int explore_exit_code(const ExploreReport& report);

nlohmann::ordered_json to_json(const ExploreRecord& record);
nlohmann::ordered_json to_json(const ExploreReport& report);

// Certifies one coefficient the way `explore` does; used by `certify`.
ExploreRecord certify_triple(const Permutation& u, const Permutation& v, const Permutation& w,
                             ExploreMode mode, std::optional<SearchBounds> bounds,
                             const CertifyOptions& options);

} // namespace schubert
