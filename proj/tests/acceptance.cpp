// Acceptance suite: one PASS/FAIL line per criterion; exit status 0 iff all pass.
// Optional argv[1]: path of the schubert executable, used to compare the
// output of two separate processes.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "json.hpp"
#include "oracles.hpp"
#include "schubert/cache.hpp"
#include "schubert/cli.hpp"
#include "schubert/divided_difference.hpp"
#include "schubert/explore.hpp"
#include "schubert/grothendieck.hpp"
#include "schubert/positivity.hpp"
#include "schubert/schubert.hpp"

using namespace schubert;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt_seconds(double s) {
  std::ostringstream out;
  out.precision(2);
  out << std::fixed << s << "s";
  return out.str();
}

Polynomial coefficient_or_zero(const Coefficients& c, const Permutation& w) {
  auto it = c.find(w);
  return it == c.end() ? Polynomial{} : it->second;
}

Verdict theorem_sweep() {
  Verdict v;
  const auto start = std::chrono::steady_clock::now();
  ExploreOptions options;
  options.n = 3;
  const auto report = explore(options);
  const double elapsed = seconds_since(start);
  std::set<std::pair<Permutation, Permutation>> pairs;
  for (const auto& record : report.records) {
    pairs.insert({record.u, record.v});
    if (record.outcome != OutcomeKind::Certified) {
      v.fail("outcome " + to_string(record.outcome) + " for " + record.u.to_string() + " " +
             record.v.to_string() + " " + record.w.to_string());
      continue;
    }
    const auto target = parse_polynomial(record.coefficient);
    if (target.is_zero()) v.fail("zero coefficient recorded");
    if (!record.certificate || !verify_certificate(*record.certificate, target))
      v.fail("certificate does not verify for " + record.w.to_string());
  }
  // every pair with a nonzero product contributes; S_u * S_v is never zero
  if (pairs.size() != 36) v.fail(std::to_string(pairs.size()) + " pairs seen, expected 36");
  if (report.summary.at(OutcomeKind::InfeasibleComplete) != 0) v.fail("InfeasibleComplete present");
  if (elapsed >= 120) v.fail("runtime " + fmt_seconds(elapsed));
  if (v.pass)
    v.detail = std::to_string(report.records.size()) + " coefficients certified in " + fmt_seconds(elapsed);
  return v;
}

Verdict skew_specialization() {
  Verdict v;
  const auto perms = all_permutations(3);
  int checked = 0;
  for (const auto& u : perms) {
    const auto single = zero_family(double_schubert(u, 3), Family::Y);
    for (const auto& vv : perms)
      for (const auto& w : perms) {
        const auto skew = skew_partial(w, vv, single);
        for (const auto& [m, c] : skew.terms())
          if (c < 0) v.fail("negative coefficient in skew image for " + w.to_string() + "/" + vv.to_string());
        const auto c = rename_family(zero_family(triple_coefficient(u, vv, w), Family::Y), Family::T, Family::X);
        if (c != skew) v.fail("mismatch at u=" + u.to_string() + " v=" + vv.to_string() + " w=" + w.to_string());
        ++checked;
      }
  }
  if (v.pass) v.detail = std::to_string(checked) + " triples exact";
  return v;
}

Verdict reconstruction() {
  Verdict v;
  const auto check = [&](const Permutation& u, const Permutation& w2) {
    const auto result = expand_product(u, w2);
    Polynomial sum;
    for (const auto& [w, c] : result.coefficients) sum += c * double_schubert_xt(w, w.size());
    const int n = std::max(u.size(), w2.size());
    if (sum != double_schubert(u, n) * double_schubert_xt(w2, n))
      v.fail("reconstruction fails for " + u.to_string() + " " + w2.to_string());
  };
  const auto s3 = all_permutations(3);
  for (const auto& u : s3)
    for (const auto& w : s3) check(u, w);
  std::mt19937 rng(2024);
  for (int k = 0; k < 200; ++k) {
    const auto u = oracle::random_permutation(rng, 4);
    const auto w = oracle::random_permutation(rng, 4);
    check(u, w);
  }
  if (v.pass) v.detail = "36 pairs in S_3 and 200 random pairs in S_4 exact";
  return v;
}

Verdict pipe_dream_oracle() {
  Verdict v;
  for (const auto& w : all_permutations(4))
    if (pipe_dream_polynomial(w, 4) != double_schubert(w, 4)) v.fail("mismatch at " + w.to_string());
  if (v.pass) v.detail = "24 permutations exact";
  return v;
}

Verdict localization_formula() {
  Verdict v;
  const auto s4 = all_permutations(4);
  std::size_t words = 0;
  for (const auto& u : s4)
    for (const auto& w : s4) {
      const auto loc = localize(u, w, 4);
      for (const auto& word : all_reduced_words(w)) {
        ++words;
        if (billey(u, w, word) != loc) v.fail("subword formula differs at " + u.to_string() + " " + w.to_string());
      }
    }
  const auto s3 = all_permutations(3);
  for (const auto& u : s3)
    for (const auto& w : s3) {
      const auto inversions = inversion_pairs(w, 3);
      const auto outcome = certify_billey(localize(u, w, 3), inversions);
      if (outcome.kind != OutcomeKind::Certified) {
        v.fail("not certified: " + u.to_string() + " at " + w.to_string());
        continue;
      }
      for (const auto& term : outcome.certificate->terms)
        for (const auto& pair : term.pairs)
          if (!inversions.count({pair.i, pair.j})) v.fail("root outside the inversion set");
    }
  if (v.pass) v.detail = std::to_string(words) + " (u, w, word) cases equal; 36 localizations certified";
  return v;
}

Verdict tau_inversions() {
  Verdict v;
  for (int n = 1; n <= 3; ++n) {
    std::set<std::string> rendered, expected;
    std::map<Var, Polynomial> rename;
    for (int j = 1; j <= n; ++j) rename[Var::t(n + j)] = Polynomial::y(j);
    for (const auto& root : inversion_pairs(tau(n), 2 * n))
      rendered.insert(render(substitute(root_polynomial(root), rename)));
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) expected.insert(render(Polynomial::y(j) - Polynomial::t(i)));
    if (rendered != expected) v.fail("n=" + std::to_string(n));
  }
  if (v.pass) v.detail = "n = 1, 2, 3 exact";
  return v;
}

Verdict k_reduction() {
  Verdict v;
  for (const auto& w : all_permutations(4))
    if (beta_zero(double_grothendieck(w, 4)) != double_schubert(w, 4)) v.fail("G_w at beta=0, w=" + w.to_string());
  const auto s3 = all_permutations(3);
  for (const auto& u : s3)
    for (const auto& vv : s3)
      for (const auto& w : s3)
        if (beta_zero(triple_coefficient_K(u, vv, w)) != triple_coefficient(u, vv, w))
          v.fail("K-coefficient at beta=0 for " + u.to_string() + " " + vv.to_string() + " " + w.to_string());
  if (v.pass) v.detail = "24 polynomials and 216 triples exact";
  return v;
}

Verdict k_evidence() {
  Verdict v;
  const auto start = std::chrono::steady_clock::now();
  const auto dir = std::filesystem::temp_directory_path() / ("schubert-acceptance-" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  std::map<int, std::map<OutcomeKind, std::size_t>> summaries;
  for (int n : {2, 3}) {
    ExploreOptions options;
    options.n = n;
    options.mode = ExploreMode::Grothendieck;
    ExploreReport report;
    try {
      report = explore(options);
    } catch (const std::exception& e) {
      v.fail(std::string("explore crashed: ") + e.what());
      continue;
    }
    const auto path = dir / ("groth-" + std::to_string(n) + ".json");
    const auto text = to_json(report).dump(2) + "\n";
    write_file_atomically(path, text);
    std::ifstream in(path);
    std::string back((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (back != text) v.fail("report artifact not written intact");
    for (const auto& record : report.records)
      if (record.outcome != OutcomeKind::Certified && record.outcome != OutcomeKind::InconclusiveAtBounds)
        v.fail("outcome " + to_string(record.outcome));
    if (n == 2 && report.summary.at(OutcomeKind::Certified) != report.records.size())
      v.fail("S_2 not fully certified");
    summaries[n] = report.summary;
  }
  std::filesystem::remove_all(dir);

  const auto s1 = Permutation::simple(1);
  const auto d = ominus(LocalizedElement(Polynomial::t(1)), LocalizedElement(Polynomial::y(1)));
  const auto expansion = expand_product_K(s1, Permutation{});
  const KCoefficients expected = {{Permutation{}, d}, {s1, LocalizedElement(1) + LocalizedElement(Polynomial::beta()) * d}};
  if (expansion.coefficients != expected) v.fail("u=s_1, v=id expansion differs");
  for (const auto& [w, c] : expansion.coefficients)
    if (certify_grothendieck(c, expansion.ambient, default_k_bounds(1 - w.length())).kind != OutcomeKind::Certified)
      v.fail("u=s_1, v=id instance not certified");

  const double elapsed = seconds_since(start);
  if (elapsed >= 600) v.fail("runtime " + fmt_seconds(elapsed));
  if (v.pass) {
    std::ostringstream out;
    for (const auto& [n, summary] : summaries)
      out << "S_" << n << ": " << summary.at(OutcomeKind::Certified) << " certified, "
          << summary.at(OutcomeKind::InconclusiveAtBounds) << " inconclusive; ";
    out << fmt_seconds(elapsed);
    v.detail = out.str();
  }
  return v;
}

Verdict stability() {
  Verdict v;
  std::mt19937 rng(99);
  for (int k = 0; k < 100; ++k) {
    const auto u = oracle::random_permutation(rng, 4);
    const auto vv = oracle::random_permutation(rng, 4);
    const auto w = oracle::random_permutation(rng, 4);
    const auto base = expand_product(u, vv);
    const auto grown = expand_product(u, vv, base.ambient + 1);
    if (coefficient_or_zero(base.coefficients, w) != coefficient_or_zero(grown.coefficients, w))
      v.fail("coefficient changes for " + u.to_string() + " " + vv.to_string() + " " + w.to_string());
  }
  if (v.pass) v.detail = "100 random triples unchanged";
  return v;
}

std::string strip_clock(const std::string& text) {
  auto json = nlohmann::ordered_json::parse(text);
  json.erase("wall_clock_ms");
  return json.dump();
}

std::string capture(const std::string& command) {
  std::string out;
  if (FILE* pipe = ::popen(command.c_str(), "r")) {
    char buffer[4096];
    for (std::size_t n; (n = std::fread(buffer, 1, sizeof buffer, pipe)) > 0;) out.append(buffer, n);
    ::pclose(pipe);
  }
  return out;
}

Verdict determinism(const std::string& executable) {
  Verdict v;
  const std::vector<std::vector<std::string>> commands = {
      {"certify", "--u", "2,1,3", "--v", "2,1,3", "--w", "2,1,3"},
      {"certify", "--u", "1,3,2", "--v", "2,3,1", "--w", "3,2,1"},
      {"certify", "--u", "2,3,1", "--v", "1,3,2", "--w", "3,2,1", "--groth"},
      {"explore", "--n", "3"},
      {"explore", "--n", "3", "--jobs", "3"},
      {"explore", "--n", "2", "--groth"},
  };
  for (const auto& args : commands) {
    std::string joined;
    for (const auto& a : args) joined += " " + a;
    std::ostringstream first, second, err;
    dispatch(args, first, err);
    dispatch(args, second, err);
    if (strip_clock(first.str()) != strip_clock(second.str())) v.fail("in-process runs differ:" + joined);
    if (!executable.empty()) {
      const auto a = capture(executable + joined);
      const auto b = capture(executable + joined);
      if (a.empty() || strip_clock(a) != strip_clock(b) || strip_clock(a) != strip_clock(first.str()))
        v.fail("separate processes differ:" + joined);
    }
  }
  std::ostringstream serial, parallel, err;
  dispatch({"explore", "--n", "3", "--groth", "--jobs", "1"}, serial, err);
  dispatch({"explore", "--n", "3", "--groth", "--jobs", "4"}, parallel, err);
  if (strip_clock(serial.str()) != strip_clock(parallel.str())) v.fail("jobs=1 and jobs=4 differ");
  if (v.pass)
    v.detail = std::to_string(commands.size()) + " commands byte-identical" +
               (executable.empty() ? " (in process)" : " (in process and across processes)");
  return v;
}

} // namespace

int main(int argc, char** argv) {
  const std::string executable = argc > 1 ? argv[1] : "";
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"1 theorem sweep over S_3 x S_3", theorem_sweep},
      {"2 skew operator equals specialized coefficient on S_3^3", skew_specialization},
      {"3 product reconstruction", reconstruction},
      {"4 pipe dreams equal double Schubert polynomials on S_4", pipe_dream_oracle},
      {"5 subword formula and inversion-root positivity", localization_formula},
      {"6 inversion set of tau", tau_inversions},
      {"7 K-theory reduces to cohomology at beta = 0", k_reduction},
      {"8 K-theory conjecture evidence on S_2 and S_3", k_evidence},
      {"9 stability under ambient growth", stability},
      {"10 deterministic JSON output", [&] { return determinism(executable); }},
  };
  bool all = true;
  for (const auto& [name, check] : criteria) {
    Verdict v;
    try {
      v = check();
    } catch (const std::exception& e) {
      v.fail(std::string("exception: ") + e.what());
    }
    std::cout << (v.pass ? "PASS " : "FAIL ") << "criterion " << name << ": " << v.detail << std::endl;
    all = all && v.pass;
  }
  return all ? 0 : 1;
}
