#pragma once

// Concrete set families and their uncompletable witnesses, all over the
// binary alphabet {a, b} (a < b) unless an alphabet is passed explicitly.

#include <cstddef>
#include <string>
#include <vector>

#include "muw/error.hpp"
#include "muw/word.hpp"

namespace muw::families {

inline constexpr symbol a = 0;
inline constexpr symbol b = 1;

inline word letters(symbol x, std::size_t n) { return word(std::vector<symbol>(n, x)); }

/// a^{k-2}bb, the excluded word of the S_k / S'_k families.
inline word sk_anchor(std::size_t k) {
  if (k < 3) throw invalid_input_error("sk_anchor requires k >= 3");
  return letters(a, k - 2) + letters(b, 2);
}

/// a^{k-1}b, the default anchor for the full-minus family.
inline word default_anchor(std::size_t k) {
  if (k < 2) throw invalid_input_error("default_anchor requires k >= 2");
  return letters(a, k - 1) + word{b};
}

/// Every word of length k except u.
inline word_set full_minus(std::size_t k, const word& u, const alphabet& sigma = alphabet::binary()) {
  if (k < 2) throw invalid_input_error("full_minus requires k >= 2");
  if (u.size() != k) throw invalid_input_error("full_minus requires |u| = k");
  if (!sigma.valid(u)) throw invalid_input_error("u uses a symbol outside the alphabet");
  std::vector<word> out;
  for (auto& w : all_words(sigma.size(), k)) {
    if (w != u) out.push_back(std::move(w));
  }
  return word_set(sigma, std::move(out));
}

inline word_set s4() {
  const auto sigma = alphabet::binary();
  auto words = full_minus(4, sigma.parse("aabb")).words();
  for (auto s : {"ab", "ba", "aba", "baa", "bab", "bba"}) words.push_back(sigma.parse(s));
  return word_set(sigma, std::move(words));
}

namespace detail {

inline std::vector<word> sk_words(std::size_t k) {
  auto words = full_minus(k, sk_anchor(k)).words();
  // Σ b a^{k-4} Σ
  for (symbol x : {a, b}) {
    for (symbol y : {a, b}) words.push_back(word{x, b} + letters(a, k - 4) + word{y});
  }
  // Σ b a
  for (symbol x : {a, b}) words.push_back(word{x, b, a});
  // J_k = union over i in 1..k-3 of b a^i Σ and a^i b
  for (std::size_t i = 1; i <= k - 3; ++i) {
    for (symbol y : {a, b}) words.push_back(word{b} + letters(a, i) + word{y});
    words.push_back(letters(a, i) + word{b});
  }
  return words;
}

} // namespace detail

inline word_set sk(std::size_t k) {
  if (k < 5) throw invalid_input_error("S_k requires k >= 5");
  return word_set(alphabet::binary(), detail::sk_words(k));
}

/// S_k together with b^4.
inline word_set sk_prime(std::size_t k) {
  if (k < 7) throw invalid_input_error("S'_k requires k >= 7");
  auto words = detail::sk_words(k);
  words.push_back(letters(b, 4));
  return word_set(alphabet::binary(), std::move(words));
}

/// S_5, the set whose minimal uncompletable words include one with a gap longer than k.
inline word_set s5() { return sk(5); }

/// (u a)^{k-1} u with k = |u|.
inline word restivo_witness(const word& u, const word& letter) {
  if (letter.size() != 1) throw invalid_input_error("restivo_witness requires a single-letter word");
  if (u.size() < 2) throw invalid_input_error("restivo_witness requires |u| >= 2");
  return power(u + letter, u.size() - 1) + u;
}

/// Witness of length 2k^2 - 2k + 1 for S_k.
inline word genrest_witness(std::size_t k) {
  if (k < 5) throw invalid_input_error("genrest_witness requires k >= 5");
  const word u = sk_anchor(k);
  return u + letters(a, k - 1) + u + word{b} + letters(a, k - 2) +
         power(u + letters(b, 2) + letters(a, k - 3), k - 3) + u;
}

/// Witness of length 3k^2 - 9k + 1 for S'_k.
inline word contrex_witness(std::size_t k) {
  if (k < 7) throw invalid_input_error("contrex_witness requires k >= 7");
  const word u = sk_anchor(k);
  word w = u + letters(a, k - 1) + u + word{b} + letters(a, k - 4);
  w += power(u + word{b, a} + u + word{b, b} + letters(a, k - 5), k - 6);
  w += u + word{a, b} + u + word{b, b} + letters(a, k - 3) + u + word{b} + letters(a, k - 3) + u;
  return w;
}

/// A minimal uncompletable word for S_5 whose third gap is bbabaa.
inline word s5_witness() {
  const auto sigma = alphabet::binary();
  const word u = sk_anchor(5);
  return u + sigma.parse("aaaa") + u + sigma.parse("baa") + u + sigma.parse("bbabaa") + u +
         sigma.parse("baa") + u;
}

} // namespace muw::families
