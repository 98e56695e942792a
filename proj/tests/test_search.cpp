#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "test_util.hpp"

namespace muw::test {
namespace {

TEST(IsFactor, Examples) {
  const auto a = build_star_trie(binary_set({"ab", "ba"}));
  EXPECT_TRUE(is_factor(a, W("aa")));
  EXPECT_FALSE(is_factor(a, W("aaa")));
  EXPECT_TRUE(is_factor(a, word{}));
  EXPECT_TRUE(is_factor(build_star_trie(word_set()), word{}));
  EXPECT_FALSE(is_factor(build_star_trie(word_set()), W("a")));
  EXPECT_THROW(is_factor(a, word{0, 5}), invalid_input_error);
}

TEST(Shortest, Examples) {
  const auto sigma = alphabet::binary();
  auto r = shortest_uncompletable(binary_set({"a"}));
  EXPECT_EQ(r.status, search_status::uncompletable);
  EXPECT_EQ(r.length, 1u);
  EXPECT_EQ(str(r.witness), "b");

  EXPECT_EQ(shortest_uncompletable(binary_set({"a", "b"})).status, search_status::complete);

  r = shortest_uncompletable(binary_set({"aa", "ba", "bb"}));
  EXPECT_EQ(r.status, search_status::uncompletable);
  EXPECT_EQ(r.length, 5u);
  EXPECT_EQ(str(r.witness), "abaab");
}

TEST(Shortest, EmptySetHasUwlOne) {
  const auto r = shortest_uncompletable(word_set());
  EXPECT_EQ(r.uwl(), 1u);
  EXPECT_EQ(str(r.witness), "a");
  EXPECT_EQ(uwl(word_set(alphabet::latin(3), {})), 1u);
}

TEST(Uwl, Examples) {
  EXPECT_EQ(uwl(binary_set({"a", "b"})), 0u);
  EXPECT_EQ(uwl(families::s4()), 25u);
  EXPECT_EQ(uwl(families::full_minus(2, W("ab"))), 5u);
}

TEST(IsComplete, Examples) {
  EXPECT_TRUE(is_complete(binary_set({"a", "b"})));
  EXPECT_FALSE(is_complete(binary_set({"ab"})));
  for (std::size_t k = 2; k <= 4; ++k) {
    for (const auto& u : all_words(2, k)) EXPECT_FALSE(is_complete(families::full_minus(k, u))) << str(u);
  }
  EXPECT_TRUE(is_complete(binary_set({"a", "bb", "ba"})));
}

// Shortlex brute force returns the least word of minimal length, so it must
// coincide with the search witness exactly, not just in length.
TEST(Shortest, LexLeastAgainstBruteForce) {
  std::mt19937_64 rng(21);
  int compared = 0;
  for (int t = 0; t < 400; ++t) {
    const auto s = random_set(rng, 6, 4);
    const auto r = shortest_uncompletable(s);
    const auto brute = oracle::uwl_bruteforce(s, 12);
    if (brute.status == search_status::uncompletable) {
      ASSERT_TRUE(r.uncompletable());
      EXPECT_EQ(r.length, brute.length);
      EXPECT_EQ(r.witness, brute.witness);
      ++compared;
    } else {
      EXPECT_TRUE(!r.uncompletable() || r.length > 12);
    }
  }
  EXPECT_GT(compared, 100);
}

TEST(Shortest, MinimalityAndFactorClosure) {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 60; ++t) {
    const auto s = random_set(rng, 8, 4);
    const auto a = build_star_trie(s);
    const auto r = shortest_uncompletable(a);
    if (!r.uncompletable() || r.length > 13) continue;
    EXPECT_FALSE(is_factor(a, r.witness));
    EXPECT_FALSE(oracle::cover_oracle(s, r.witness));
    for (const auto& w : binary_words_upto(r.length - 1)) ASSERT_TRUE(is_factor(a, w)) << str(w);
  }
  // every factor of a factor is a factor
  const auto s = families::s4();
  const auto a = build_star_trie(s);
  for (const auto& w : binary_words_upto(10)) {
    if (!is_factor(a, w)) continue;
    for (std::size_t i = 0; i < w.size(); ++i) {
      for (std::size_t l = 1; i + l <= w.size(); ++l) ASSERT_TRUE(is_factor(a, w.substr(i, l)));
    }
  }
}

TEST(Shortest, Deterministic) {
  const auto s = families::sk(6);
  const auto r1 = shortest_uncompletable(s);
  const auto r2 = shortest_uncompletable(s);
  EXPECT_EQ(r1.witness, r2.witness);
  EXPECT_EQ(r1.stats.subset_states, r2.stats.subset_states);
}

// Layer d holds the residues of length-d words that no shorter word reaches.
TEST(Shortest, BfsLayersMatchExplicitDeterminization) {
  std::mt19937_64 rng(29);
  for (int t = 0; t < 40; ++t) {
    const auto s = random_set(rng, 6, 3);
    const auto a = build_star_trie(s);
    std::vector<std::set<std::string>> layers;
    search_limits lim;
    (void)shortest_uncompletable(a, lim, [&](std::size_t depth, std::span<const subset_state> layer) {
      ASSERT_EQ(depth, layers.size());
      std::set<std::string> ids;
      for (const auto& q : layer) ids.insert(q.to_string());
      ASSERT_EQ(ids.size(), layer.size());
      layers.push_back(std::move(ids));
    });

    std::set<std::string> seen{initial_subset(a).to_string()};
    ASSERT_EQ(layers[0], std::set<std::string>{initial_subset(a).to_string()});
    for (std::size_t d = 1; d < layers.size(); ++d) {
      std::set<std::string> fresh;
      for (const auto& w : all_words(2, d)) {
        auto q = initial_subset(a);
        for (symbol x : w) q = step(a, q, x);
        if (q.empty()) continue;
        if (!seen.count(q.to_string())) fresh.insert(q.to_string());
      }
      ASSERT_EQ(layers[d], fresh) << "depth " << d;
      seen.insert(fresh.begin(), fresh.end());
    }
  }
}

TEST(Shortest, ResourceLimitCarriesStats) {
  search_limits lim;
  lim.max_subsets = 10;
  try {
    (void)shortest_uncompletable(families::s4(), lim);
    FAIL() << "expected a resource limit";
  } catch (const resource_limit_error& e) {
    EXPECT_GT(e.stats().subset_states, 10u);
    EXPECT_GE(e.stats().elapsed_ms, 0.0);
  }
  lim = {};
  lim.max_bytes = 1;
  EXPECT_THROW((void)shortest_uncompletable(families::sk(8), lim), resource_limit_error);
}

TEST(Shortest, StatsAreFilled) {
  const auto r = shortest_uncompletable(families::sk(7));
  EXPECT_EQ(r.automaton_nodes, 127u);
  EXPECT_GT(r.stats.subset_states, 0u);
  EXPECT_GT(r.stats.peak_frontier, 0u);
  EXPECT_EQ(r.stats.depth_reached + 1, r.length);
}

TEST(Shortest, Monotonicity) {
  std::mt19937_64 rng(31);
  int checked = 0;
  for (int t = 0; t < 2000 && checked < 150; ++t) {
    const auto s = random_set(rng, 6, 4);
    const auto k = s.k();
    if (k < 2) continue;
    const auto base = uwl(s);
    if (base == 0) continue;
    const auto extra = random_set(rng, 4, k - 1);
    const auto both = uwl(s.merged(extra));
    if (both == 0) continue;
    EXPECT_GE(both, base);
    ++checked;
  }
  EXPECT_GE(checked, 100);
}

TEST(Shortest, Ternary) {
  const auto sigma = alphabet::latin(3);
  const auto s = families::full_minus(2, sigma.parse("ab"), sigma);
  const auto r = shortest_uncompletable(s);
  const auto brute = oracle::uwl_bruteforce(s, 8);
  ASSERT_EQ(brute.status, search_status::uncompletable);
  EXPECT_EQ(r.witness, brute.witness);
  EXPECT_EQ(r.length, 5u);
}

}  // namespace
}  // namespace muw::test
