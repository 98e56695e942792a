#include <gtest/gtest.h>

#include <random>
#include <set>
#include <string>

#include "test_util.hpp"

namespace muw::test {
namespace {

// Border lengths by comparing every proper prefix with the suffix of the same length.
std::vector<std::size_t> borders_by_comparison(const word& w) {
  std::vector<std::size_t> out;
  for (std::size_t len = 1; len < w.size(); ++len) {
    if (w.prefix(len) == w.suffix(len)) out.push_back(len);
  }
  return out;
}

std::string rep(char c, std::size_t n) { return std::string(n, c); }

// S_k written out with string operations straight from the set expression.
std::set<std::string> sk_by_expansion(std::size_t k, bool with_b4) {
  std::set<std::string> s;
  for (const auto& w : all_words(2, k)) s.insert(str(w));
  s.erase(rep('a', k - 2) + "bb");
  for (std::string x : {"a", "b"}) {
    for (std::string y : {"a", "b"}) s.insert(x + "b" + rep('a', k - 4) + y);
    s.insert(x + "ba");
  }
  for (std::size_t i = 1; i <= k - 3; ++i) {
    s.insert("b" + rep('a', i) + "a");
    s.insert("b" + rep('a', i) + "b");
    s.insert(rep('a', i) + "b");
  }
  if (with_b4) s.insert("bbbb");
  return s;
}

std::size_t count_occurrences(const word& w, const word& u) {
  std::size_t n = 0;
  for (auto p = w.find(u); p != word::npos; p = w.find(u, p + 1)) ++n;
  return n;
}

TEST(Alphabet, RejectsDuplicatesAndEmpty) {
  EXPECT_THROW(alphabet::from_string("aba"), invalid_input_error);
  EXPECT_THROW(alphabet::from_string(""), invalid_input_error);
  EXPECT_EQ(alphabet::from_string("ba").parse("ab"), (word{1, 0}));
}

TEST(Alphabet, Utf8RoundTrip) {
  const auto sigma = alphabet::from_string("αβ");
  EXPECT_EQ(sigma.size(), 2u);
  const auto w = sigma.parse("αββα");
  EXPECT_EQ(w, (word{0, 1, 1, 0}));
  EXPECT_EQ(sigma.render(w), "αββα");
  EXPECT_THROW(sigma.parse("αc"), invalid_input_error);
}

TEST(WordSet, DedupsDropsEmptyAndTracksK) {
  const word_set s(alphabet::binary(), {W("ab"), W(""), W("ab"), W("bba")});
  EXPECT_EQ(s.size(), 2u);
  EXPECT_TRUE(s.dropped_empty());
  EXPECT_EQ(s.k(), 3u);
  EXPECT_TRUE(s.contains(W("bba")));
  EXPECT_FALSE(s.contains(W("ba")));
  EXPECT_EQ(word_set().k(), 0u);
}

TEST(Borders, Examples) {
  EXPECT_TRUE(borders(W("a")).empty());
  EXPECT_TRUE(borders(W("aabb")).empty());
  EXPECT_EQ(borders(W("abaab")), (std::vector<std::size_t>{2}));
  EXPECT_EQ(borders(W("aaaa")), (std::vector<std::size_t>{1, 2, 3}));
  EXPECT_EQ(borders(W("abab")), (std::vector<std::size_t>{2}));
  EXPECT_THROW(borders(word{}), invalid_input_error);
}

TEST(Borders, AgreeWithDirectComparison) {
  for (std::size_t len = 1; len <= 12; ++len) {
    for (const auto& w : all_words(2, len)) {
      ASSERT_EQ(borders(w), borders_by_comparison(w)) << str(w);
    }
  }
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> sym(0, 2);
  for (int t = 0; t < 2000; ++t) {
    word w;
    for (int i = 0; i < 30; ++i) w.push_back(static_cast<symbol>(sym(rng)));
    ASSERT_EQ(borders(w), borders_by_comparison(w));
  }
}

TEST(Borders, SkAnchorIsUnbordered) {
  for (std::size_t k = 3; k <= 20; ++k) EXPECT_TRUE(is_unbordered(families::sk_anchor(k))) << k;
  for (std::size_t k = 2; k <= 20; ++k) EXPECT_TRUE(is_unbordered(families::default_anchor(k))) << k;
}

TEST(Families, FullMinus) {
  const auto s = families::full_minus(2, W("ab"));
  EXPECT_EQ(s, binary_set({"aa", "ba", "bb"}));
  EXPECT_EQ(families::full_minus(4, W("aabb")).size(), 15u);
  EXPECT_FALSE(families::full_minus(4, W("aabb")).contains(W("aabb")));
  EXPECT_THROW(families::full_minus(3, W("ab")), invalid_input_error);
  EXPECT_THROW(families::full_minus(1, W("a")), invalid_input_error);

  const auto ternary = families::full_minus(2, alphabet::latin(3).parse("ab"), alphabet::latin(3));
  EXPECT_EQ(ternary.size(), 8u);
}

TEST(Families, S4) {
  const auto s = families::s4();
  EXPECT_EQ(s.size(), 21u);
  EXPECT_EQ(s.k(), 4u);
  for (auto w : {"ab", "bba", "aaaa", "ba", "aba", "baa", "bab", "bbbb"}) EXPECT_TRUE(s.contains(W(w))) << w;
  EXPECT_FALSE(s.contains(W("aabb")));
  EXPECT_FALSE(s.contains(W("a")));
}

TEST(Families, SkMatchesExpansion) {
  for (std::size_t k = 5; k <= 10; ++k) {
    EXPECT_EQ(families::sk(k), from_strings(sk_by_expansion(k, false))) << k;
    EXPECT_EQ(families::sk(k).k(), k);
  }
  const auto s5 = families::sk(5);
  for (auto w : {"abaa", "aab", "bba"}) EXPECT_TRUE(s5.contains(W(w))) << w;
  EXPECT_FALSE(s5.contains(W("aaabb")));

  const auto s7 = families::sk(7);
  EXPECT_TRUE(s7.contains(W("abaaab")));
  EXPECT_FALSE(s7.contains(W("aaaaabb")));
  EXPECT_THROW(families::sk(4), invalid_input_error);
}

TEST(Families, SkPrime) {
  for (std::size_t k = 7; k <= 10; ++k) {
    EXPECT_EQ(families::sk_prime(k), from_strings(sk_by_expansion(k, true))) << k;
    EXPECT_EQ(families::sk_prime(k).size(), families::sk(k).size() + 1) << k;
    EXPECT_FALSE(families::sk(k).contains(W("bbbb")));
  }
  EXPECT_TRUE(families::sk_prime(9).contains(W("bbbb")));
  EXPECT_THROW(families::sk_prime(6), invalid_input_error);
}

TEST(Families, S5IsSkAtFive) { EXPECT_EQ(families::s5(), from_strings(sk_by_expansion(5, false))); }

TEST(Families, Deterministic) {
  EXPECT_EQ(families::sk(8), families::sk(8));
  EXPECT_EQ(families::s4(), families::s4());
  EXPECT_EQ(families::sk_prime(9), families::sk_prime(9));
}

TEST(Witnesses, Restivo) {
  EXPECT_EQ(str(families::restivo_witness(W("ab"), W("a"))), "abaab");
  const auto w = families::restivo_witness(W("aabb"), W("a"));
  EXPECT_EQ(str(w), "aabbaaabbaaabbaaabb");
  EXPECT_EQ(w.size(), 19u);
  for (std::size_t k = 2; k <= 6; ++k) {
    for (const auto& u : all_words(2, k)) {
      EXPECT_EQ(families::restivo_witness(u, W("b")).size(), k * k + k - 1);
    }
  }
  EXPECT_THROW(families::restivo_witness(W("ab"), W("ab")), invalid_input_error);
  EXPECT_THROW(families::restivo_witness(W("a"), W("a")), invalid_input_error);
}

TEST(Witnesses, Genrest) {
  EXPECT_EQ(str(families::genrest_witness(5)), "aaabbaaaaaaabbbaaaaaabbbbaaaaabbbbaaaaabb");
  EXPECT_EQ(families::genrest_witness(7).size(), 85u);
  for (std::size_t k = 5; k <= 12; ++k) EXPECT_EQ(families::genrest_witness(k).size(), 2 * k * k - 2 * k + 1);
  EXPECT_THROW(families::genrest_witness(4), invalid_input_error);
}

TEST(Witnesses, Contrex) {
  EXPECT_EQ(families::contrex_witness(7).size(), 85u);
  EXPECT_EQ(families::contrex_witness(9).size(), 163u);
  for (std::size_t k = 7; k <= 14; ++k) {
    const auto w = families::contrex_witness(k);
    const auto u = families::sk_anchor(k);
    EXPECT_EQ(w.size(), 3 * k * k - 9 * k + 1);
    EXPECT_EQ(count_occurrences(w, u), 2 * k - 6);
    const auto d = decompose(w, u);
    std::size_t gaps = 0;
    for (auto g : d.gap_lengths()) gaps += g;
    EXPECT_EQ(gaps, k * k - 3 * k + 1);
    EXPECT_EQ(d.occurrences() * k, 2 * k * k - 6 * k);
  }
  EXPECT_THROW(families::contrex_witness(6), invalid_input_error);
}

TEST(Witnesses, S5) {
  const auto w = families::s5_witness();
  EXPECT_EQ(w.size(), 41u);
  EXPECT_EQ(str(w), "aaabbaaaaaaabbbaaaaabbbbabaaaaabbbaaaaabb");
  const auto d = decompose(w, families::sk_anchor(5));
  ASSERT_EQ(d.gaps.size(), 4u);
  EXPECT_EQ(str(d.gaps[0]), "aaaa");
  EXPECT_EQ(str(d.gaps[1]), "baa");
  EXPECT_EQ(str(d.gaps[2]), "bbabaa");
  EXPECT_EQ(str(d.gaps[3]), "baa");
  EXPECT_EQ(d.gap_lengths(), (std::vector<std::size_t>{4, 3, 6, 3}));
}

TEST(WordList, ParsesHeaderCommentsAndTokens) {
  const auto list = parse_word_list("# a comment\n@alphabet ba\n\nab  # trailing\nba bb\n\n");
  EXPECT_TRUE(list.alphabet_declared);
  EXPECT_EQ(list.set.sigma(), alphabet::from_string("ba"));
  EXPECT_EQ(list.set.size(), 3u);
  EXPECT_TRUE(list.set.contains(list.set.parse("bb")));
}

TEST(WordList, InfersAscendingAlphabet) {
  const auto list = parse_word_list("ca\nb\n");
  EXPECT_FALSE(list.alphabet_declared);
  EXPECT_EQ(list.set.sigma(), alphabet::from_string("abc"));
  EXPECT_EQ(parse_word_list("").set.sigma(), alphabet::binary());
  EXPECT_EQ(parse_word_list("a\n", alphabet::binary()).set.sigma(), alphabet::binary());
}

TEST(WordList, Errors) {
  EXPECT_THROW(parse_word_list("@alphabet ab\nabc\n"), invalid_input_error);
  EXPECT_THROW(parse_word_list("ab\n@alphabet ab\n"), invalid_input_error);
  EXPECT_THROW(parse_word_list("@include x\n"), invalid_input_error);
  EXPECT_THROW(parse_word_list("@alphabet\n"), invalid_input_error);
  EXPECT_THROW(read_word_list("/nonexistent/file.txt"), invalid_input_error);
}

TEST(WordList, FormatParseIsIdentity) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    const auto s = random_set(rng, 10, 6);
    EXPECT_EQ(parse_word_list(format_word_list(s, "generated")).set, s);
  }
  const auto text = format_word_list(binary_set({"ba", "a"}));
  EXPECT_EQ(text, "@alphabet ab\na\nba\n");
}

}  // namespace
}  // namespace muw::test
