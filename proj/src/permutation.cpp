#include "schubert/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "schubert/errors.hpp"

namespace schubert {

Permutation::Permutation(std::vector<int> window) : window_(std::move(window)) {
  trim();
}

void Permutation::trim() {
  while (!window_.empty() && window_.back() == static_cast<int>(window_.size()))
    window_.pop_back();
}

Permutation Permutation::from_one_line(std::span<const int> one_line) {
  const auto m = static_cast<int>(one_line.size());
  std::vector<bool> seen(m + 1, false);
  for (std::size_t k = 0; k < one_line.size(); ++k) {
    int value = one_line[k];
    if (value < 1 || value > m)
      throw NotAPermutation("value " + std::to_string(value) + " outside 1.." +
                            std::to_string(m));
    if (seen[value])
      throw NotAPermutation("duplicate value " + std::to_string(value));
    seen[value] = true;
  }
  return Permutation(std::vector<int>(one_line.begin(), one_line.end()));
}

Permutation Permutation::from_one_line(std::initializer_list<int> one_line) {
  return from_one_line(std::span<const int>(one_line.begin(), one_line.size()));
}

Permutation Permutation::simple(int i) {
  if (i < 1) throw NotAPermutation("simple generator index must be >= 1");
  std::vector<int> w(i + 1);
  std::iota(w.begin(), w.end(), 1);
  std::swap(w[i - 1], w[i]);
  return Permutation(std::move(w));
}

Permutation Permutation::from_word(std::span<const int> letters) {
  int n = 1;
  for (int i : letters) {
    if (i < 1) throw NotAPermutation("simple generator index must be >= 1");
    n = std::max(n, i + 1);
  }
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  // Right multiplication by s_i swaps positions i and i+1.
  for (int i : letters) std::swap(w[i - 1], w[i]);
  return Permutation(std::move(w));
}

Permutation Permutation::from_lehmer_code(std::span<const int> code) {
  const auto m = static_cast<int>(code.size());
  std::vector<int> available(m);
  std::iota(available.begin(), available.end(), 1);
  std::vector<int> w;
  w.reserve(m);
  for (int i = 0; i < m; ++i) {
    int c = code[i];
    if (c < 0 || c > m - 1 - i)
      throw InvalidCode("code entry " + std::to_string(i + 1) + " = " +
                        std::to_string(c) + " exceeds " + std::to_string(m - 1 - i));
    w.push_back(available[c]);
    available.erase(available.begin() + c);
  }
  return Permutation(std::move(w));
}

int Permutation::operator()(int i) const {
  if (i >= 1 && i <= static_cast<int>(window_.size())) return window_[i - 1];
  return i;
}

std::vector<int> Permutation::one_line(int n) const {
  std::vector<int> w(std::max<int>(n, static_cast<int>(window_.size())));
  for (int i = 1; i <= static_cast<int>(w.size()); ++i) w[i - 1] = (*this)(i);
  return w;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(window_.size());
  for (std::size_t k = 0; k < window_.size(); ++k)
    inv[window_[k] - 1] = static_cast<int>(k) + 1;
  return Permutation(std::move(inv));
}

int Permutation::length() const {
  int inversions = 0;
  for (std::size_t a = 0; a < window_.size(); ++a)
    for (std::size_t b = a + 1; b < window_.size(); ++b)
      if (window_[a] > window_[b]) ++inversions;
  return inversions;
}

std::vector<int> Permutation::lehmer_code() const {
  std::vector<int> code(window_.size(), 0);
  for (std::size_t a = 0; a < window_.size(); ++a)
    for (std::size_t b = a + 1; b < window_.size(); ++b)
      if (window_[b] < window_[a]) ++code[a];
  return code;
}

std::set<int> Permutation::descents() const {
  std::set<int> out;
  for (std::size_t k = 0; k + 1 < window_.size(); ++k)
    if (window_[k] > window_[k + 1]) out.insert(static_cast<int>(k) + 1);
  return out;
}

bool Permutation::has_left_descent(int i) const {
  // s_i w < w iff i+1 appears before i in one-line notation.
  const auto pos = [this](int value) {
    auto it = std::find(window_.begin(), window_.end(), value);
    return it == window_.end() ? value : static_cast<int>(it - window_.begin()) + 1;
  };
  return pos(i) > pos(i + 1);
}

std::string Permutation::to_string() const {
  if (window_.empty()) return "1";
  std::string out;
  for (std::size_t k = 0; k < window_.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(window_[k]);
  }
  return out;
}

Permutation operator*(const Permutation& u, const Permutation& v) {
  const int n = std::max(u.size(), v.size());
  std::vector<int> w(n);
  for (int i = 1; i <= n; ++i) w[i - 1] = u(v(i));
  return Permutation(std::move(w));
}

std::strong_ordering operator<=>(const Permutation& u, const Permutation& v) {
  const int n = std::max(u.size(), v.size());
  for (int i = 1; i <= n; ++i)
    if (auto c = u(i) <=> v(i); c != 0) return c;
  return std::strong_ordering::equal;
}

ReducedWord canonical_reduced_word(const Permutation& w) {
  ReducedWord word;
  Permutation rest = w;
  while (!rest.is_identity()) {
    int i = 1;
    while (!rest.has_left_descent(i)) ++i;
    word.push_back(i);
    rest = Permutation::simple(i) * rest;
  }
  return word;
}

namespace {

void collect_words(const Permutation& w, ReducedWord& prefix, std::set<ReducedWord>& out,
                   std::size_t limit) {
  if (w.is_identity()) {
    out.insert(prefix);
    if (out.size() > limit)
      throw TooManyWords("more than " + std::to_string(limit) + " reduced words");
    return;
  }
  for (int i = 1; i < w.size(); ++i) {
    if (!w.has_left_descent(i)) continue;
    prefix.push_back(i);
    collect_words(Permutation::simple(i) * w, prefix, out, limit);
    prefix.pop_back();
  }
}

} // namespace

std::set<ReducedWord> all_reduced_words(const Permutation& w, std::size_t limit) {
  std::set<ReducedWord> out;
  ReducedWord prefix;
  collect_words(w, prefix, out, limit);
  return out;
}

bool is_reduced_word_for(std::span<const int> word, const Permutation& w) {
  for (int i : word)
    if (i < 1) return false;
  return static_cast<int>(word.size()) == w.length() && Permutation::from_word(word) == w;
}

bool bruhat_leq(const Permutation& u, const Permutation& v) {
  if (u.length() > v.length()) return false;
  // Subword property: u <= v iff u is the product of some subword of a
  // reduced word for v. Track every product reachable by a subword.
  std::set<Permutation> reachable{Permutation{}};
  for (int i : canonical_reduced_word(v)) {
    const auto s = Permutation::simple(i);
    std::vector<Permutation> grown;
    for (const auto& p : reachable) grown.push_back(p * s);
    reachable.insert(grown.begin(), grown.end());
  }
  return reachable.contains(u);
}

std::set<RootPair> inversion_pairs(const Permutation& w, int ambient) {
  const auto inv = w.inverse();
  std::set<RootPair> out;
  for (int i = 1; i <= ambient; ++i)
    for (int j = i + 1; j <= ambient; ++j)
      if (inv(i) > inv(j)) out.insert({i, j});
  return out;
}

std::set<RootPair> noninversion_pairs(const Permutation& w, int ambient) {
  const auto inv = w.inverse();
  std::set<RootPair> out;
  for (int i = 1; i <= ambient; ++i)
    for (int j = i + 1; j <= ambient; ++j)
      if (inv(i) < inv(j)) out.insert({i, j});
  return out;
}

Permutation longest_element(int n) {
  std::vector<int> w(std::max(n, 1));
  for (int i = 0; i < n; ++i) w[i] = n - i;
  if (n < 1) w = {1};
  return Permutation::from_one_line(std::span<const int>(w));
}

Permutation tau(int n) {
  std::vector<int> w(2 * n);
  for (int i = 1; i <= n; ++i) {
    w[i - 1] = n + i;
    w[n + i - 1] = i;
  }
  return Permutation::from_one_line(std::span<const int>(w));
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> w(std::max(n, 1));
  std::iota(w.begin(), w.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_one_line(std::span<const int>(w)));
  } while (std::next_permutation(w.begin(), w.end()));
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.length() < b.length();
  });
  return out;
}

Permutation parse_permutation(const std::string& text) {
  std::string trimmed;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)) || !trimmed.empty()) trimmed += c;
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back())))
    trimmed.pop_back();
  if (trimmed.empty() || trimmed == "id" || trimmed == "e") return Permutation{};

  const auto parse_int = [&text](const std::string& token) {
    if (token.empty() ||
        !std::all_of(token.begin(), token.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw NotAPermutation("cannot parse permutation '" + text + "'");
    return std::stoi(token);
  };

  if (trimmed.front() == 's') {
    std::vector<int> letters;
    std::string token;
    for (char c : trimmed + " ") {
      if (c == 's' && token.empty()) continue;
      if (std::isspace(static_cast<unsigned char>(c)) || c == '*' || c == 's') {
        if (!token.empty()) letters.push_back(parse_int(token));
        token.clear();
        continue;
      }
      token += c;
    }
    return Permutation::from_word(std::span<const int>(letters));
  }

  std::vector<int> one_line;
  std::stringstream in(trimmed);
  std::string token;
  while (std::getline(in, token, ',')) {
    std::string clean;
    for (char c : token)
      if (!std::isspace(static_cast<unsigned char>(c))) clean += c;
    one_line.push_back(parse_int(clean));
  }
  return Permutation::from_one_line(std::span<const int>(one_line));
}

} // namespace schubert
