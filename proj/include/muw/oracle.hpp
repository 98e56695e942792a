#pragma once

// Brute-force ground truth. Nothing here touches the automaton code, so a
// bug there cannot be confirmed by a matching bug here.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "muw/error.hpp"
#include "muw/search.hpp"
#include "muw/word.hpp"

namespace muw::oracle {

inline constexpr std::uint64_t enumeration_guard = 10'000'000;

/// w is in Fact(S*): some x, y make x.w.y a word of S*.
///
/// Dynamic programming over cut positions 0..|w|. A covering of w either
/// sits inside one word of S, or splits w as y.s1...sm.z with y a suffix
/// and z a prefix of words of S.
inline bool cover_oracle(const word_set& s, const word& w) {
  const std::size_t n = w.size();
  if (n == 0) return true;
  for (const auto& v : s.words()) {
    if (v.contains(w)) return true;
  }

  std::vector<char> reach(n + 1, 0);
  reach[0] = 1;
  for (const auto& v : s.words()) {
    for (std::size_t len = 1; len < v.size() && len <= n; ++len) {
      if (w.starts_with(v.suffix(len))) reach[len] = 1;
    }
  }
  for (std::size_t t = 0; t < n; ++t) {
    if (!reach[t]) continue;
    const auto rest = n - t;
    for (const auto& v : s.words()) {
      if (v.size() <= rest) {
        if (std::equal(v.begin(), v.end(), w.begin() + static_cast<std::ptrdiff_t>(t))) reach[t + v.size()] = 1;
      } else if (std::equal(w.begin() + static_cast<std::ptrdiff_t>(t), w.end(), v.begin())) {
        return true;
      }
    }
  }
  return reach[n] != 0;
}

/// w is a factor of some concatenation of at most m_max words of S.
///
/// Exact whenever m_max >= |w| + 2: a covering of w touches its first and
/// last words and every word in between lies inside w, and words are
/// nonempty. For the same reason only concatenations of total length at most
/// |w| + 2(k - 1) need to be looked at; longer ones contain w only if a
/// shorter contiguous run of their words already does.
inline bool naive_oracle(const word_set& s, const word& w, std::size_t m_max) {
  if (m_max < 1) throw invalid_input_error("naive_oracle requires m_max >= 1");
  if (w.empty()) return true;
  const auto k = s.k();
  const std::size_t cap = w.size() + 2 * (k > 0 ? k - 1 : 0);

  std::uint64_t visited = 0;
  word current;
  bool found = false;
  // Depth-first over word sequences.
  auto dfs = [&](auto&& self, std::size_t used) -> void {
    if (found) return;
    if (++visited > enumeration_guard) {
      throw resource_limit_error("naive_oracle enumeration exceeded " + std::to_string(enumeration_guard));
    }
    if (current.contains(w)) {
      found = true;
      return;
    }
    if (used == m_max) return;
    for (const auto& v : s.words()) {
      if (current.size() + v.size() > cap) continue;
      const auto before = current;
      current += v;
      self(self, used + 1);
      current = before;
      if (found) return;
    }
  };
  dfs(dfs, 0);
  return found;
}

/// Enumerates words in shortlex order and returns the first one the cover
/// oracle rejects. Finding none up to l_max proves nothing about longer words.
inline search_result uwl_bruteforce(const word_set& s, std::size_t l_max) {
  const auto sigma = s.sigma().size();
  std::uint64_t total = 0, layer = 1;
  for (std::size_t len = 1; len <= l_max; ++len) {
    layer *= sigma;
    total += layer;
    if (total > enumeration_guard) {
      throw resource_limit_error("uwl_bruteforce would enumerate more than " + std::to_string(enumeration_guard) +
                                 " words");
    }
  }

  search_result r;
  for (std::size_t len = 1; len <= l_max; ++len) {
    for (auto& w : all_words(sigma, len)) {
      ++r.stats.subset_states;
      if (!cover_oracle(s, w)) {
        r.status = search_status::uncompletable;
        r.length = len;
        r.witness = std::move(w);
        return r;
      }
    }
  }
  r.status = search_status::complete_up_to;
  r.bound = l_max;
  return r;
}

struct uwl_max_result {
  std::size_t value = 0;
  std::vector<word_set> argmax;  // lexicographic by set contents
  std::uint64_t evaluated = 0;
  bool exhaustive = true;        // false: value is only a lower bound
};

namespace detail {

inline std::vector<word> universe(std::size_t k, std::size_t sigma) {
  std::vector<word> out;
  for (std::size_t len = 1; len <= k; ++len) {
    for (auto& w : all_words(sigma, len)) out.push_back(std::move(w));
  }
  return out;
}

inline bool set_less(const word_set& x, const word_set& y) {
  return std::lexicographical_compare(x.words().begin(), x.words().end(), y.words().begin(), y.words().end(),
                                      shortlex_less{});
}

inline void record(uwl_max_result& r, std::size_t value, word_set s) {
  if (value > r.value) {
    r.value = value;
    r.argmax.clear();
  }
  if (value == r.value) r.argmax.push_back(std::move(s));
}

inline void finish(uwl_max_result& r) {
  std::sort(r.argmax.begin(), r.argmax.end(), set_less);
  r.argmax.erase(std::unique(r.argmax.begin(), r.argmax.end()), r.argmax.end());
}

} // namespace detail

inline constexpr std::size_t max_exhaustive_universe = 20;

/// max uwl(S) over every S contained in Σ^{<=k}, the empty set included.
inline uwl_max_result uwl_max_exhaustive(std::size_t k, std::size_t sigma, const search_limits& limits = {}) {
  if (k < 1) throw invalid_input_error("uwl_max_exhaustive requires k >= 1");
  if (sigma < 1) throw invalid_input_error("uwl_max_exhaustive requires sigma >= 1");
  const auto alpha = alphabet::latin(sigma);
  const auto all = detail::universe(k, sigma);
  if (all.size() > max_exhaustive_universe) {
    throw invalid_input_error("Σ^{<=" + std::to_string(k) + "} has " + std::to_string(all.size()) +
                              " words, too many to enumerate every subset; use sampling mode (uwl_max_sampled)");
  }

  uwl_max_result r;
  const std::uint64_t subsets = std::uint64_t{1} << all.size();
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    std::vector<word> pick;
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (mask >> i & 1u) pick.push_back(all[i]);
    }
    word_set s(alpha, std::move(pick));
    const auto value = uwl(s, limits);
    ++r.evaluated;
    detail::record(r, value, std::move(s));
  }
  detail::finish(r);
  return r;
}

/// Random-subset lower bound on UWL(k, sigma) for universes too large to exhaust.
inline uwl_max_result uwl_max_sampled(std::size_t k, std::size_t sigma, std::uint64_t budget, std::uint64_t seed,
                                      const search_limits& limits = {}) {
  if (k < 1) throw invalid_input_error("uwl_max_sampled requires k >= 1");
  const auto alpha = alphabet::latin(sigma);
  const auto all = detail::universe(k, sigma);
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.5);

  uwl_max_result r;
  r.exhaustive = false;
  for (std::uint64_t i = 0; i < budget; ++i) {
    std::vector<word> pick;
    for (const auto& w : all) {
      if (coin(rng)) pick.push_back(w);
    }
    word_set s(alpha, std::move(pick));
    std::size_t value = 0;
    try {
      value = uwl(s, limits);
    } catch (const resource_limit_error&) {
      continue;  // skipped sample; the bound stays a bound
    }
    ++r.evaluated;
    detail::record(r, value, std::move(s));
  }
  detail::finish(r);
  return r;
}

} // namespace muw::oracle
