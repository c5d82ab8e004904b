#include "doctest.h"
#include "oracles.hpp"

#include "schubert/divided_difference.hpp"
#include "schubert/errors.hpp"
#include "schubert/schubert.hpp"

using namespace schubert;
using oracle::perm;

namespace tests {

namespace {

const Polynomial x1 = Polynomial::x(1), x2 = Polynomial::x(2), y1 = Polynomial::y(1),
                 y2 = Polynomial::y(2), t1 = Polynomial::t(1), t2 = Polynomial::t(2),
                 t3 = Polynomial::t(3);

Polynomial x_to_t(const Polynomial& p) { return rename_family(p, Family::X, Family::T); }

} // namespace

TEST_CASE("double Schubert examples") {
  CHECK(double_schubert(Permutation::simple(1), 2) == x1 - y1);
  for (int n = 1; n <= 4; ++n) CHECK(double_schubert(Permutation{}, n) == Polynomial(1));
  CHECK(double_schubert(perm({2, 3, 1}), 3) == (x1 - y1) * (x2 - y1));
  CHECK_THROWS_AS(double_schubert(perm({3, 1, 2}), 2), AmbientTooSmall);
}

TEST_CASE("top class and descent chain agree with the dominant construction") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& w : all_permutations(n))
      REQUIRE(double_schubert(w, n) == double_schubert_from_top(w, n));
}

TEST_CASE("pipe dream examples") {
  const auto dreams = reduced_pipe_dreams(perm({2, 3, 1}), 3);
  REQUIRE(dreams.size() == 1);
  CHECK(dreams[0].crossings == std::vector<std::pair<int, int>>{{1, 1}, {2, 1}});
  CHECK(pipe_dream_polynomial(perm({2, 3, 1}), 3) == (x1 - y1) * (x2 - y1));
  CHECK(reduced_pipe_dreams(Permutation{}, 3).size() == 1);
  CHECK(pipe_dream_polynomial(Permutation{}, 3) == Polynomial(1));
  CHECK(reduced_pipe_dreams(perm({1, 3, 2}), 3).size() == 2);
  CHECK(pipe_dream_polynomial(perm({1, 3, 2}), 3) == (x1 - y2) + (x2 - y1));
}

TEST_CASE("pipe dreams agree with divided differences on S_4") {
  for (const auto& w : all_permutations(4)) REQUIRE(pipe_dream_polynomial(w, 4) == double_schubert(w, 4));
}

TEST_CASE("divided differences move down the basis") {
  for (const auto& w : all_permutations(4))
    for (int i = 1; i < 4; ++i) {
      const auto ws = w * Permutation::simple(i);
      const auto expected = ws.length() < w.length() ? double_schubert(ws, 4) : Polynomial{};
      REQUIRE(partial_i(i, double_schubert(w, 4)) == expected);
    }
}

TEST_CASE("S_w(t;t) vanishes except at the identity") {
  for (const auto& w : all_permutations(4))
    CHECK(x_to_t(double_schubert_xt(w, 4)) == Polynomial(w.is_identity() ? 1 : 0));
}

TEST_CASE("localization examples") {
  const auto s1 = Permutation::simple(1);
  CHECK(localize(s1, s1, 2) == t2 - t1);
  for (const auto& w : all_permutations(3)) CHECK(localize(Permutation{}, w, 3) == Polynomial(1));
  CHECK(localize(perm({3, 1, 2}), s1, 3).is_zero());
}

TEST_CASE("subword formula examples") {
  const auto s1 = Permutation::simple(1), s2 = Permutation::simple(2);
  CHECK(billey(s1, s1, {1}) == t2 - t1);
  CHECK(billey(s2, perm({2, 3, 1}), {1, 2}) == t3 - t1);
  CHECK(billey(s2, perm({2, 3, 1}), {1, 2}) == localize(perm({1, 3, 2}), perm({2, 3, 1}), 3));
  CHECK(billey(s1, s2, {2}).is_zero());
  CHECK_THROWS_AS(billey(s1, perm({2, 3, 1}), {2, 1}), NotReduced);
}

TEST_CASE("localization vanishing and subword formula on S_4") {
  const auto perms = all_permutations(4);
  for (const auto& u : perms)
    for (const auto& w : perms) {
      const auto loc = localize(u, w, 4);
      if (!oracle::bruhat_tableau(u, w)) REQUIRE(loc.is_zero());
      for (const auto& word : all_reduced_words(w)) REQUIRE(billey(u, w, word) == loc);
    }
}

TEST_CASE("expansion examples") {
  const auto s1 = Permutation::simple(1);
  CHECK(expand_in_t_basis(double_schubert_xt(s1, 2), 3) == Coefficients{{s1, Polynomial(1)}});
  CHECK(expand_in_t_basis((x1 - y1) * (x1 - t1), 3) ==
        Coefficients{{perm({3, 1, 2}), Polynomial(1)}, {perm({2, 1, 3}), t2 - y1}});
  CHECK(expand_in_t_basis(Polynomial(1), 2) == Coefficients{{Permutation{}, Polynomial(1)}});
  CHECK_THROWS_AS(expand_in_t_basis(x1 * x1, 2), ResidualNonzero);
}

TEST_CASE("triple coefficient examples") {
  const auto s1 = Permutation::simple(1);
  CHECK(triple_coefficient(s1, s1, perm({2, 1, 3})) == t2 - y1);
  CHECK(triple_coefficient(s1, s1, Permutation{}).is_zero());
  const auto classical = zero_family(zero_family(triple_coefficient(s1, s1, perm({3, 1, 2})), Family::Y), Family::T);
  CHECK(classical == Polynomial(1));
}

TEST_CASE("expansion agrees with the peeling oracle on S_3 x S_3") {
  const auto perms = all_permutations(3);
  for (const auto& u : perms)
    for (const auto& v : perms) {
      const auto product = double_schubert(u, 3) * double_schubert_xt(v, 3);
      REQUIRE(expand_product(u, v).coefficients == oracle::expand_by_peeling(product));
    }
}

TEST_CASE("frozen structure constants") {
  // values computed by the peeling oracle; c_{u,w}^w also equals S_u(wt;y)
  const auto c = [](const char* u, const char* v, const char* w) {
    return render(triple_coefficient(parse_permutation(u), parse_permutation(v), parse_permutation(w)));
  };
  CHECK(c("1,3,2", "1,3,2", "1,3,2") == "t1 + t3 - y1 - y2");
  CHECK(c("2,3,1", "2,1", "2,1") == "t1*t2 - t1*y1 - t2*y1 + y1^2");
  CHECK(c("2,1", "1,3,2", "1,3,2") == "t1 - y1");
  CHECK(c("2,1", "1,3,2", "2,3,1") == "1");
  CHECK(c("2,1", "1,3,2", "3,1,2") == "1");
  CHECK(c("2,3,1", "3,1,2", "3,2,1") == "t3 - y1");
  CHECK(c("1,3,2", "3,1,2", "3,1,2") == "t1 + t3 - y1 - y2");
  CHECK(c("3,2,1", "3,2,1", "3,2,1") ==
        "t2*t3^2 - t2*t3*y1 - t2*t3*y2 + t2*y1*y2 - t3^2*y1 + t3*y1^2 + t3*y1*y2 - y1^2*y2");
  for (const auto& u : all_permutations(3))
    for (const auto& w : all_permutations(3))
      CHECK(triple_coefficient(u, w, w) == substitute(double_schubert(u, 3), {{Var::x(1), Polynomial::t(w(1))},
                                                                            {Var::x(2), Polynomial::t(w(2))},
                                                                            {Var::x(3), Polynomial::t(w(3))}}));
}

TEST_CASE("structure constants are homogeneous of the expected degree") {
  const auto perms = all_permutations(3);
  for (const auto& u : perms)
    for (const auto& v : perms) {
      const auto result = expand_product(u, v);
      for (const auto& [w, c] : result.coefficients) {
        REQUIRE_FALSE(c.is_zero());
        REQUIRE(c.homogeneous_degree({Family::Y, Family::T}) == u.length() + v.length() - w.length());
      }
      for (const auto& w : perms)
        if (u.length() + v.length() < w.length()) REQUIRE(triple_coefficient(u, v, w).is_zero());
    }
}

TEST_CASE("skew route equals extraction route on S_3 cubed") {
  const auto perms = all_permutations(3);
  for (const auto& u : perms)
    for (const auto& v : perms) {
      const auto result = expand_product(u, v);
      for (const auto& w : perms) {
        auto it = result.coefficients.find(w);
        const Polynomial expected = it == result.coefficients.end() ? Polynomial{} : it->second;
        REQUIRE(triple_coefficient_skew(u, v, w) == expected);
      }
    }
}

TEST_CASE("reconstruction on random S_4 pairs") {
  std::mt19937 rng(31);
  for (int k = 0; k < 40; ++k) {
    const auto u = oracle::random_permutation(rng, 4), v = oracle::random_permutation(rng, 4);
    const auto result = expand_product(u, v);
    Polynomial sum;
    for (const auto& [w, c] : result.coefficients) sum += c * double_schubert_xt(w, w.size());
    REQUIRE(sum == double_schubert(u, 4) * double_schubert_xt(v, 4));
  }
}

TEST_CASE("stability under ambient growth") {
  std::mt19937 rng(32);
  for (int k = 0; k < 20; ++k) {
    const auto u = oracle::random_permutation(rng, 4), v = oracle::random_permutation(rng, 4);
    const auto base = expand_product(u, v);
    const auto grown = expand_product(u, v, base.ambient + 1);
    REQUIRE(base.coefficients == grown.coefficients);
    const auto w = oracle::random_permutation(rng, 4);
    REQUIRE(double_schubert(w, 4) == double_schubert(w, 5));
  }
}

} // namespace tests
