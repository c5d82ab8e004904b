#pragma once

#include <compare>
#include <cstddef>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace schubert {

/*
  Element of S_infinity, stored as the one-line notation of its smallest
  window [w(1), ..., w(m)]; every k > m is a fixed point. Because the window
  is always trimmed, two permutations are equal iff their windows are.

  Products compose right to left: (u * v)(i) = u(v(i)).
*/
class Permutation {
public:
  Permutation() = default;

  // Throws NotAPermutation unless one_line is a rearrangement of 1..m.
  static Permutation from_one_line(std::span<const int> one_line);
  static Permutation from_one_line(std::initializer_list<int> one_line);
  // Product s_{i_1} s_{i_2} ... s_{i_k}; the word need not be reduced.
  static Permutation from_word(std::span<const int> letters);
  static Permutation simple(int i);
  static Permutation from_lehmer_code(std::span<const int> code);

  const std::vector<int>& window() const { return window_; }
  // Smallest m with this permutation in S_m (at least 1).
  int size() const { return window_.empty() ? 1 : static_cast<int>(window_.size()); }
  bool is_identity() const { return window_.empty(); }

  int operator()(int i) const;
  // One-line notation padded with fixed points up to n (n >= size()).
  std::vector<int> one_line(int n) const;

  Permutation inverse() const;
  int length() const;
  std::vector<int> lehmer_code() const;
  // Right descents {i : w(i) > w(i+1)}.
  std::set<int> descents() const;
  bool has_left_descent(int i) const;
  bool has_right_descent(int i) const { return (*this)(i) > (*this)(i + 1); }

  std::string to_string() const; // "3,1,2"; identity renders as "1"

  friend Permutation operator*(const Permutation& u, const Permutation& v);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  // Lexicographic on one-line notation (windows padded by fixed points).
  friend std::strong_ordering operator<=>(const Permutation& u, const Permutation& v);

private:
  explicit Permutation(std::vector<int> window);
  void trim();

  std::vector<int> window_;
};

using ReducedWord = std::vector<int>;

// Positive root e_j - e_i for i < j, rendered as t_j - t_i.
struct RootPair {
  int i = 0;
  int j = 0;
  friend auto operator<=>(const RootPair&, const RootPair&) = default;
};

// Peels the smallest left descent repeatedly: w = s_{i_1} w', i_1 minimal.
ReducedWord canonical_reduced_word(const Permutation& w);
// Throws TooManyWords if w has more than `limit` reduced words.
std::set<ReducedWord> all_reduced_words(const Permutation& w, std::size_t limit = 100000);
bool is_reduced_word_for(std::span<const int> word, const Permutation& w);

bool bruhat_leq(const Permutation& u, const Permutation& v);

// Pairs (i,j), i < j <= ambient, with w^{-1}(i) > w^{-1}(j).
std::set<RootPair> inversion_pairs(const Permutation& w, int ambient);
std::set<RootPair> noninversion_pairs(const Permutation& w, int ambient);

Permutation longest_element(int n);
// tau(i) = n+i and tau(n+i) = i for 1 <= i <= n.
Permutation tau(int n);

// All of S_n, ordered by length and then lexicographically.
std::vector<Permutation> all_permutations(int n);

// Accepts "3,1,2" or a word "s1 s2" (also "s1*s2"); "id" and "1" are the identity.
Permutation parse_permutation(const std::string& text);

} // namespace schubert
