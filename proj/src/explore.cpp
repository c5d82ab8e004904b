#include "schubert/explore.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <thread>

#include "schubert/errors.hpp"
#include "schubert/grothendieck.hpp"
#include "schubert/schubert.hpp"

namespace schubert {

namespace {

const char* mode_name(ExploreMode mode) {
  return mode == ExploreMode::Schubert ? "schubert" : "grothendieck";
}

nlohmann::ordered_json bounds_json(const SearchBounds& bounds) {
  nlohmann::ordered_json out;
  out["max_z_degree"] = bounds.max_z_degree;
  out["max_beta_power"] = bounds.max_beta_power;
  return out;
}

OutcomeKind outcome_from_string(const std::string& text) {
  for (auto kind : {OutcomeKind::Certified, OutcomeKind::InfeasibleComplete,
                    OutcomeKind::InconclusiveAtBounds, OutcomeKind::DenominatorShapeViolation})
    if (to_string(kind) == text) return kind;
  throw Error("unknown outcome '" + text + "'");
}

ExploreRecord record_from_json(const nlohmann::ordered_json& json) {
  ExploreRecord record;
  record.u = parse_permutation(json.at("u").get<std::string>());
  record.v = parse_permutation(json.at("v").get<std::string>());
  record.w = parse_permutation(json.at("w").get<std::string>());
  record.coefficient = json.at("coefficient").get<std::string>();
  record.outcome = outcome_from_string(json.at("outcome").get<std::string>());
  if (json.contains("certificate")) record.certificate = certificate_from_json(json["certificate"]);
  if (json.contains("bounds"))
    record.bounds = SearchBounds{json["bounds"].at("max_z_degree").get<int>(),
                                 json["bounds"].at("max_beta_power").get<int>()};
  if (json.contains("reason")) record.reason = json["reason"].get<std::string>();
  return record;
}

ExploreRecord make_record(const Permutation& u, const Permutation& v, const Permutation& w,
                          std::string coefficient, CertifyOutcome outcome) {
  ExploreRecord record{u, v, w, std::move(coefficient), outcome.kind, std::move(outcome.certificate),
                       outcome.bounds, std::move(outcome.reason)};
  if (record.certificate) record.certificate->target = {u, v, w, record.coefficient};
  return record;
}

ExploreRecord certify_coefficient(const Permutation& u, const Permutation& v, const Permutation& w,
                                  const Polynomial& c, int ambient, const CertifyOptions& options) {
  try {
    return make_record(u, v, w, render(c), certify_schubert(c, ambient, options));
  } catch (const BudgetExceeded& e) {
    return make_record(u, v, w, render(c), {OutcomeKind::InconclusiveAtBounds, {}, {}, e.what()});
  } catch (const SearchSpaceTooLarge& e) {
    return make_record(u, v, w, render(c), {OutcomeKind::InconclusiveAtBounds, {}, {}, e.what()});
  }
}

ExploreRecord certify_coefficient_k(const Permutation& u, const Permutation& v,
                                    const Permutation& w, const LocalizedElement& c, int ambient,
                                    std::optional<SearchBounds> bounds,
                                    const CertifyOptions& options) {
  const SearchBounds used =
      bounds ? *bounds : default_k_bounds(std::max(0, u.length() + v.length() - w.length()));
  try {
    return make_record(u, v, w, render(c), certify_grothendieck(c, ambient, used, options));
  } catch (const BudgetExceeded& e) {
    return make_record(u, v, w, render(c), {OutcomeKind::InconclusiveAtBounds, {}, used, e.what()});
  } catch (const SearchSpaceTooLarge& e) {
    return make_record(u, v, w, render(c), {OutcomeKind::InconclusiveAtBounds, {}, used, e.what()});
  }
}

std::vector<ExploreRecord> run_pair(const Permutation& u, const Permutation& v,
                                    const ExploreOptions& options) {
  std::vector<ExploreRecord> records;
  if (options.mode == ExploreMode::Schubert) {
    const auto expansion = expand_product(u, v);
    for (const auto& [w, c] : expansion.coefficients)
      records.push_back(certify_coefficient(u, v, w, c, expansion.ambient, options.certify));
  } else {
    const auto expansion = expand_product_K(u, v);
    for (const auto& [w, c] : expansion.coefficients)
      records.push_back(certify_coefficient_k(u, v, w, c, expansion.ambient, options.bounds,
                                              options.certify));
  }
  return records;
}

std::string pair_request(const Permutation& u, const Permutation& v, const ExploreOptions& options) {
  std::string request = std::string("explore-pair mode=") + mode_name(options.mode) +
                        " u=" + u.to_string() + " v=" + v.to_string();
  if (options.bounds)
    request += " zdeg=" + std::to_string(options.bounds->max_z_degree) +
               " bdeg=" + std::to_string(options.bounds->max_beta_power);
  request += " budget=" + std::to_string(options.certify.solver.node_budget);
  return request;
}

std::vector<ExploreRecord> run_pair_cached(const Permutation& u, const Permutation& v,
                                           const ExploreOptions& options) {
  if (!options.cache) return run_pair(u, v, options);
  const std::string request = pair_request(u, v, options);
  if (auto hit = options.cache->get(request)) {
    auto json = nlohmann::ordered_json::parse(*hit, nullptr, false);
    if (json.is_array()) {
      try {
        std::vector<ExploreRecord> records;
        for (const auto& entry : json) records.push_back(record_from_json(entry));
        return records;
      } catch (const std::exception&) {
        // Fall through and recompute; the entry is overwritten below.
      }
    }
  }
  auto records = run_pair(u, v, options);
  nlohmann::ordered_json json = nlohmann::ordered_json::array();
  for (const auto& record : records) json.push_back(to_json(record));
  options.cache->put(request, json.dump());
  return records;
}

} // namespace

ExploreRecord certify_triple(const Permutation& u, const Permutation& v, const Permutation& w,
                             ExploreMode mode, std::optional<SearchBounds> bounds,
                             const CertifyOptions& options) {
  if (mode == ExploreMode::Schubert) {
    const auto expansion = expand_product(u, v);
    auto it = expansion.coefficients.find(w);
    const Polynomial c = it == expansion.coefficients.end() ? Polynomial{} : it->second;
    if (c != triple_coefficient_skew(u, v, w))
      throw InternalMismatch("expansion and skew operator disagree on c_{" + u.to_string() + "," +
                             v.to_string() + "}^{" + w.to_string() + "}");
    return certify_coefficient(u, v, w, c, expansion.ambient, options);
  }
  const auto expansion = expand_product_K(u, v);
  auto it = expansion.coefficients.find(w);
  const LocalizedElement c = it == expansion.coefficients.end() ? LocalizedElement{} : it->second;
  return certify_coefficient_k(u, v, w, c, expansion.ambient, bounds, options);
}

ExploreReport explore(const ExploreOptions& options) {
  const int cap = options.mode == ExploreMode::Schubert ? options.max_n_schubert
                                                         : options.max_n_grothendieck;
  if (options.n < 1 || options.n > cap)
    throw Error("explore supports 1 <= n <= " + std::to_string(cap) + " in " +
                mode_name(options.mode) + " mode");
  const auto start = std::chrono::steady_clock::now();

  const auto perms = all_permutations(options.n);
  std::vector<std::pair<Permutation, Permutation>> pairs;
  for (const auto& u : perms)
    for (const auto& v : perms) pairs.emplace_back(u, v);

  std::vector<std::vector<ExploreRecord>> results(pairs.size());
  std::vector<std::exception_ptr> failures(pairs.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t k = next++; k < pairs.size(); k = next++) {
      try {
        results[k] = run_pair_cached(pairs[k].first, pairs[k].second, options);
      } catch (...) {
        failures[k] = std::current_exception();
      }
    }
  };
  const int jobs = std::max(1, std::min<int>(options.jobs, static_cast<int>(pairs.size())));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }
  for (const auto& failure : failures)
    if (failure) std::rethrow_exception(failure);

  ExploreReport report;
  report.n = options.n;
  report.mode = options.mode;
  report.bounds = options.bounds;
  for (auto& batch : results)
    for (auto& record : batch) report.records.push_back(std::move(record));
  std::sort(report.records.begin(), report.records.end(), [](const auto& a, const auto& b) {
    return std::tie(a.u, a.v, a.w) < std::tie(b.u, b.v, b.w);
  });
  for (auto kind : {OutcomeKind::Certified, OutcomeKind::InfeasibleComplete,
                    OutcomeKind::InconclusiveAtBounds, OutcomeKind::DenominatorShapeViolation})
    report.summary[kind] = 0;
  for (const auto& record : report.records) ++report.summary[record.outcome];
  report.wall_clock_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();
  return report;
}

int explore_exit_code(const ExploreReport& report) {
  const auto count = [&report](OutcomeKind kind) {
    auto it = report.summary.find(kind);
    return it == report.summary.end() ? std::size_t{0} : it->second;
  };
  if (count(OutcomeKind::DenominatorShapeViolation) > 0) return 3;
  if (report.mode == ExploreMode::Schubert && count(OutcomeKind::InfeasibleComplete) > 0) return 3;
  if (count(OutcomeKind::InconclusiveAtBounds) > 0 || count(OutcomeKind::InfeasibleComplete) > 0)
    return 1;
  return 0;
}

nlohmann::ordered_json to_json(const ExploreRecord& record) {
  nlohmann::ordered_json out;
  out["u"] = record.u.to_string();
  out["v"] = record.v.to_string();
  out["w"] = record.w.to_string();
  out["coefficient"] = record.coefficient;
  out["outcome"] = to_string(record.outcome);
  if (record.certificate) out["certificate"] = to_json(*record.certificate);
  if (record.bounds) out["bounds"] = bounds_json(*record.bounds);
  if (!record.reason.empty()) out["reason"] = record.reason;
  return out;
}

nlohmann::ordered_json to_json(const ExploreReport& report) {
  nlohmann::ordered_json parameters;
  parameters["n"] = report.n;
  parameters["mode"] = mode_name(report.mode);
  parameters["bounds"] = report.bounds ? bounds_json(*report.bounds) : nlohmann::ordered_json();

  nlohmann::ordered_json records = nlohmann::ordered_json::array();
  for (const auto& record : report.records) records.push_back(to_json(record));

  nlohmann::ordered_json summary;
  summary["records"] = report.records.size();
  for (const auto& [kind, count] : report.summary) summary[to_string(kind)] = count;

  nlohmann::ordered_json out;
  out["tool"] = "schubert-workbench";
  out["version"] = kToolVersion;
  out["convention"] = kConventionVersion;
  out["parameters"] = std::move(parameters);
  out["records"] = std::move(records);
  out["summary"] = std::move(summary);
  out["wall_clock_ms"] = report.wall_clock_ms;
  return out;
}

} // namespace schubert
