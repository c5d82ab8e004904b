#include "schubert/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <memory>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "schubert/cache.hpp"
#include "schubert/divided_difference.hpp"
#include "schubert/errors.hpp"
#include "schubert/explore.hpp"
#include "schubert/grothendieck.hpp"
#include "schubert/schubert.hpp"
#include "schubert/selftest.hpp"

namespace schubert {

namespace {

struct Settings {
  bool json = false;
  int jobs = 1;
  std::string cache_dir;
  std::size_t node_budget = SolverOptions{}.node_budget;
  int max_n_schubert = ExploreOptions{}.max_n_schubert;
  int max_n_grothendieck = ExploreOptions{}.max_n_grothendieck;

  // command arguments
  std::string perm, u, v, w, input, word, vars = "xy", out_file;
  int n = 0;
  bool groth = false;
  std::optional<int> zdeg_max, bdeg_max;
};

int outcome_exit_code(OutcomeKind kind, ExploreMode mode) {
  switch (kind) {
  case OutcomeKind::Certified: return kExitOk;
  case OutcomeKind::InconclusiveAtBounds: return kExitInconclusive;
  case OutcomeKind::InfeasibleComplete:
    return mode == ExploreMode::Schubert ? kExitViolation : kExitInconclusive;
  case OutcomeKind::DenominatorShapeViolation: return kExitViolation;
  }
  return kExitViolation;
}

class Runner {
public:
  Runner(const Settings& settings, std::ostream& out) : s_(settings), out_(out) {
    if (!s_.cache_dir.empty()) cache_ = std::make_unique<ResultCache>(s_.cache_dir);
  }

  // Prints `result` as text, or as a JSON object with the arguments.
  void emit(nlohmann::ordered_json arguments, const std::string& result) {
    if (!s_.json) {
      out_ << result << '\n';
      return;
    }
    arguments["result"] = result;
    out_ << arguments.dump(2) << '\n';
  }

  int poly() {
    const auto w = parse_permutation(s_.perm);
    if (s_.vars != "xy" && s_.vars != "xt") throw CLI::ValidationError("--vars must be xy or xt");
    const auto p = s_.vars == "xy" ? double_schubert(w, s_.n) : double_schubert_xt(w, s_.n);
    emit({{"command", "poly"}, {"perm", w.to_string()}, {"n", s_.n}, {"vars", s_.vars}}, render(p));
    return kExitOk;
  }

  int groth() {
    const auto w = parse_permutation(s_.perm);
    emit({{"command", "groth"}, {"perm", w.to_string()}, {"n", s_.n}},
         render(double_grothendieck(w, s_.n)));
    return kExitOk;
  }

  int coeff() {
    const auto u = parse_permutation(s_.u), v = parse_permutation(s_.v),
               w = parse_permutation(s_.w);
    const std::string result =
        s_.groth ? render(triple_coefficient_K(u, v, w)) : render(triple_coefficient(u, v, w));
    emit({{"command", "coeff"},
          {"u", u.to_string()},
          {"v", v.to_string()},
          {"w", w.to_string()},
          {"mode", s_.groth ? "grothendieck" : "schubert"}},
         result);
    return kExitOk;
  }

  int skewdd() {
    const auto w = parse_permutation(s_.w), v = parse_permutation(s_.v);
    const auto f = parse_polynomial(s_.input);
    emit({{"command", "skewdd"}, {"w", w.to_string()}, {"v", v.to_string()}, {"input", render(f)}},
         render(skew_partial(w, v, f)));
    return kExitOk;
  }

  int billey_cmd() {
    const auto u = parse_permutation(s_.u), w = parse_permutation(s_.w);
    ReducedWord word = canonical_reduced_word(w);
    if (!s_.word.empty()) {
      word.clear();
      std::stringstream in(s_.word);
      for (std::string token; std::getline(in, token, ',');) {
        if (token.empty() || !std::all_of(token.begin(), token.end(), ::isdigit))
          throw CLI::ValidationError("--word must be comma-separated positive integers");
        word.push_back(std::stoi(token));
      }
    }
    nlohmann::ordered_json word_json = word;
    emit({{"command", "billey"}, {"u", u.to_string()}, {"w", w.to_string()}, {"word", word_json}},
         render(billey(u, w, word)));
    return kExitOk;
  }

  int localize_cmd() {
    const auto u = parse_permutation(s_.u), w = parse_permutation(s_.w);
    const int n = std::max(u.size(), w.size());
    emit({{"command", "localize"}, {"u", u.to_string()}, {"w", w.to_string()}},
         render(localize(u, w, n)));
    return kExitOk;
  }

  int certify() {
    const auto u = parse_permutation(s_.u), v = parse_permutation(s_.v),
               w = parse_permutation(s_.w);
    const ExploreMode mode = s_.groth ? ExploreMode::Grothendieck : ExploreMode::Schubert;
    std::optional<SearchBounds> bounds;
    if (s_.zdeg_max || s_.bdeg_max) {
      const auto fallback = default_k_bounds(std::max(0, u.length() + v.length() - w.length()));
      bounds = SearchBounds{s_.zdeg_max.value_or(fallback.max_z_degree),
                            s_.bdeg_max.value_or(fallback.max_beta_power)};
    }
    const std::string request = "certify mode=" + std::string(s_.groth ? "grothendieck" : "schubert") +
                                " u=" + u.to_string() + " v=" + v.to_string() +
                                " w=" + w.to_string() + bounds_key(bounds);
    std::optional<nlohmann::ordered_json> json;
    if (cache_)
      if (auto hit = cache_->get(request)) json = nlohmann::ordered_json::parse(*hit);
    if (!json) {
      json = to_json(certify_triple(u, v, w, mode, bounds, certify_options()));
      if (cache_) cache_->put(request, json->dump());
    }
    out_ << json->dump(2) << '\n';
    const std::string outcome = (*json)["outcome"].get<std::string>();
    for (auto kind : {OutcomeKind::Certified, OutcomeKind::InfeasibleComplete,
                      OutcomeKind::InconclusiveAtBounds, OutcomeKind::DenominatorShapeViolation})
      if (to_string(kind) == outcome) return outcome_exit_code(kind, mode);
    return kExitViolation;
  }

  int explore_cmd() {
    ExploreOptions options;
    options.n = s_.n;
    options.mode = s_.groth ? ExploreMode::Grothendieck : ExploreMode::Schubert;
    options.jobs = std::max(1, s_.jobs);
    options.certify = certify_options();
    options.cache = cache_.get();
    options.max_n_schubert = s_.max_n_schubert;
    options.max_n_grothendieck = s_.max_n_grothendieck;
    const int cap = s_.groth ? s_.max_n_grothendieck : s_.max_n_schubert;
    if (s_.n < 1 || s_.n > cap)
      throw CLI::ValidationError("--n must lie in [1, " + std::to_string(cap) + "]");
    if (s_.zdeg_max || s_.bdeg_max)
      options.bounds = SearchBounds{s_.zdeg_max.value_or(default_k_bounds(0).max_z_degree),
                                    s_.bdeg_max.value_or(default_k_bounds(0).max_beta_power)};

    const auto report = explore(options);
    const auto json = to_json(report);
    if (s_.out_file.empty()) {
      out_ << json.dump(2) << '\n';
    } else {
      write_file_atomically(s_.out_file, json.dump(2) + "\n");
      if (s_.json) {
        out_ << json["summary"].dump(2) << '\n';
      } else {
        out_ << "records " << report.records.size();
        for (const auto& [kind, count] : report.summary) out_ << ", " << to_string(kind) << ' ' << count;
        out_ << '\n';
      }
    }
    return explore_exit_code(report);
  }

  int selftest() { return run_selftest(out_) ? kExitOk : kExitViolation; }

private:
  CertifyOptions certify_options() const {
    CertifyOptions options;
    options.solver.node_budget = s_.node_budget;
    return options;
  }

  std::string bounds_key(const std::optional<SearchBounds>& bounds) const {
    std::string key = " budget=" + std::to_string(s_.node_budget);
    if (bounds)
      key += " zdeg=" + std::to_string(bounds->max_z_degree) +
             " bdeg=" + std::to_string(bounds->max_beta_power);
    return key;
  }

  const Settings& s_;
  std::ostream& out_;
  std::unique_ptr<ResultCache> cache_;
};

} // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Settings s;
  CLI::App app{"Triple Schubert calculus workbench", "schubert"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "key=value settings file; flags take precedence");
  app.add_flag("--json", s.json, "Machine-readable output");
  app.add_option("--jobs", s.jobs, "Worker threads for explore")->envname("SCHUBERT_JOBS")->check(CLI::PositiveNumber);
  app.add_option("--cache", s.cache_dir, "Result cache directory")->envname("SCHUBERT_CACHE");
  app.add_option("--node-budget", s.node_budget, "Branch-and-bound node budget per solve");
  app.add_option("--max-n-schubert", s.max_n_schubert, "Largest n accepted by explore");
  app.add_option("--max-n-groth", s.max_n_grothendieck, "Largest n accepted by explore --groth");

  auto* poly = app.add_subcommand("poly", "Double Schubert polynomial S_w(x;y)");
  poly->add_option("--perm", s.perm)->required();
  poly->add_option("--n", s.n)->required();
  poly->add_option("--vars", s.vars, "xy or xt")->check(CLI::IsMember({"xy", "xt"}));

  auto* groth = app.add_subcommand("groth", "Double Grothendieck polynomial G_w(x;y)");
  groth->add_option("--perm", s.perm)->required();
  groth->add_option("--n", s.n)->required();

  auto* coeff = app.add_subcommand("coeff", "Structure constant c_{u,v}^w(y,t)");
  coeff->add_option("--u", s.u)->required();
  coeff->add_option("--v", s.v)->required();
  coeff->add_option("--w", s.w)->required();
  coeff->add_flag("--groth", s.groth, "K-theoretic structure constant");

  auto* skewdd = app.add_subcommand("skewdd", "Skew divided difference of a polynomial");
  skewdd->add_option("--w", s.w)->required();
  skewdd->add_option("--v", s.v)->required();
  skewdd->add_option("--input", s.input)->required();

  auto* billey_cmd = app.add_subcommand("billey", "Localization by the subword formula");
  billey_cmd->add_option("--u", s.u)->required();
  billey_cmd->add_option("--w", s.w)->required();
  billey_cmd->add_option("--word", s.word, "Reduced word of w, e.g. 1,2,1");

  auto* localize_cmd = app.add_subcommand("localize", "Localization S_u(wt;t)");
  localize_cmd->add_option("--u", s.u)->required();
  localize_cmd->add_option("--w", s.w)->required();

  auto* certify = app.add_subcommand("certify", "Positivity certificate for one coefficient");
  certify->add_option("--u", s.u)->required();
  certify->add_option("--v", s.v)->required();
  certify->add_option("--w", s.w)->required();
  certify->add_flag("--groth", s.groth);
  certify->add_option("--zdeg-max", s.zdeg_max)->check(CLI::NonNegativeNumber);
  certify->add_option("--bdeg-max", s.bdeg_max)->check(CLI::NonNegativeNumber);

  auto* explore = app.add_subcommand("explore", "Certify every coefficient over S_n x S_n");
  explore->add_option("--n", s.n)->required();
  explore->add_flag("--groth", s.groth);
  explore->add_option("--jobs", s.jobs)->check(CLI::PositiveNumber);
  explore->add_option("--out", s.out_file, "Report file, written atomically");
  explore->add_option("--zdeg-max", s.zdeg_max)->check(CLI::NonNegativeNumber);
  explore->add_option("--bdeg-max", s.bdeg_max)->check(CLI::NonNegativeNumber);

  auto* selftest = app.add_subcommand("selftest", "Run the invariant checks of every module");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    Runner runner(s, out);
    if (*poly) return runner.poly();
    if (*groth) return runner.groth();
    if (*coeff) return runner.coeff();
    if (*skewdd) return runner.skewdd();
    if (*billey_cmd) return runner.billey_cmd();
    if (*localize_cmd) return runner.localize_cmd();
    if (*certify) return runner.certify();
    if (*explore) return runner.explore_cmd();
    if (*selftest) return runner.selftest();
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const SyntaxError& e) {
    err << "error: " << e.what() << " at position " << e.position() << '\n';
    return kExitUsage;
  } catch (const NotAPermutation& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NotReduced& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const AmbientTooSmall& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitInconclusive;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitViolation;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "io error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::ios_base::failure& e) {
    err << "io error: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitUsage;
}

} // namespace schubert
