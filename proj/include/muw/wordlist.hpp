#pragma once

// Word-list text format:
//
//   @alphabet ab        optional, must be the first non-comment line
//   # comment           '#' starts a comment anywhere on a line
//   aab                 one word per line (whitespace-separated tokens
//   ba bb               on one line are also accepted as separate words)
//
// Without an @alphabet line the alphabet is the set of symbols used,
// in ascending code point order.

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "muw/error.hpp"
#include "muw/word.hpp"

namespace muw {

struct word_list {
  word_set set;
  bool alphabet_declared = false;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n\v\f";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

inline std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

} // namespace detail

/// Parses word-list text. `fallback` is used when the text declares no
/// alphabet; it must cover every symbol the words use.
inline word_list parse_word_list(std::string_view text, const std::optional<alphabet>& fallback = std::nullopt) {
  std::optional<alphabet> declared;
  std::vector<std::string> tokens;
  bool seen_content = false;
  std::size_t line_no = 0;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;

    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = detail::trim(line);
    if (line.empty()) continue;

    if (line.front() == '@') {
      constexpr std::string_view directive = "@alphabet";
      if (line.substr(0, directive.size()) != directive ||
          (line.size() > directive.size() && line[directive.size()] != ' ' && line[directive.size()] != '\t')) {
        throw invalid_input_error("line " + std::to_string(line_no) + ": unknown directive");
      }
      if (seen_content) {
        throw invalid_input_error("line " + std::to_string(line_no) + ": @alphabet must come before any word");
      }
      auto spec = detail::trim(line.substr(directive.size()));
      std::string joined;
      for (auto part : detail::split_ws(spec)) joined += part;
      if (joined.empty()) throw invalid_input_error("line " + std::to_string(line_no) + ": empty @alphabet");
      declared = alphabet::from_string(joined);
      seen_content = true;
      continue;
    }
    seen_content = true;
    for (auto tok : detail::split_ws(line)) tokens.emplace_back(tok);
  }

  alphabet sigma;
  if (declared) {
    sigma = *declared;
  } else if (fallback) {
    sigma = *fallback;
  } else {
    std::vector<char32_t> used;
    for (const auto& t : tokens) {
      for (char32_t c : utf8::decode(t)) used.push_back(c);
    }
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());
    sigma = used.empty() ? alphabet::binary() : alphabet(std::move(used));
  }

  std::vector<word> words;
  words.reserve(tokens.size());
  for (const auto& t : tokens) words.push_back(sigma.parse(t));
  return {word_set(sigma, std::move(words)), declared.has_value()};
}

inline word_list read_word_list(const std::string& path, const std::optional<alphabet>& fallback = std::nullopt) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw invalid_input_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_word_list(buf.str(), fallback);
}

/// Serializes with an @alphabet header and words in shortlex order.
inline std::string format_word_list(const word_set& s, std::string_view comment = {}) {
  std::string out;
  if (!comment.empty()) {
    out += "# ";
    out += comment;
    out += '\n';
  }
  out += "@alphabet " + s.sigma().render() + "\n";
  for (const auto& w : s.words()) {
    out += s.render(w);
    out += '\n';
  }
  return out;
}

} // namespace muw
