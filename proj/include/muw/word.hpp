#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "muw/error.hpp"

namespace muw {

using symbol = std::uint8_t;

namespace utf8 {

inline std::vector<char32_t> decode(std::string_view text) {
  std::vector<char32_t> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const auto lead = static_cast<unsigned char>(text[i]);
    int extra = 0;
    char32_t cp = 0;
    if (lead < 0x80) {
      cp = lead;
    } else if ((lead & 0xE0) == 0xC0) {
      cp = lead & 0x1F;
      extra = 1;
    } else if ((lead & 0xF0) == 0xE0) {
      cp = lead & 0x0F;
      extra = 2;
    } else if ((lead & 0xF8) == 0xF0) {
      cp = lead & 0x07;
      extra = 3;
    } else {
      throw invalid_input_error("invalid UTF-8 lead byte");
    }
    if (i + static_cast<std::size_t>(extra) >= text.size() && extra > 0) {
      throw invalid_input_error("truncated UTF-8 sequence");
    }
    for (int j = 1; j <= extra; ++j) {
      const auto cont = static_cast<unsigned char>(text[i + j]);
      if ((cont & 0xC0) != 0x80) {
        throw invalid_input_error("invalid UTF-8 continuation byte");
      }
      cp = (cp << 6) | (cont & 0x3F);
    }
    out.push_back(cp);
    i += static_cast<std::size_t>(extra) + 1;
  }
  return out;
}

inline void encode(char32_t cp, std::string& out) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

} // namespace utf8

/// A sequence of symbol indices. Ordering is lexicographic on indices,
/// which is the declaration order of the owning alphabet.
class word {
public:
  word() = default;
  explicit word(std::vector<symbol> symbols) : symbols_(std::move(symbols)) {}
  word(std::initializer_list<symbol> symbols) : symbols_(symbols) {}

  std::size_t size() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }
  symbol operator[](std::size_t i) const { return symbols_[i]; }
  std::span<const symbol> view() const noexcept { return symbols_; }
  const std::vector<symbol>& symbols() const noexcept { return symbols_; }

  auto begin() const noexcept { return symbols_.begin(); }
  auto end() const noexcept { return symbols_.end(); }

  void push_back(symbol x) { symbols_.push_back(x); }

  word substr(std::size_t pos, std::size_t len) const {
    const auto first = symbols_.begin() + static_cast<std::ptrdiff_t>(pos);
    const auto n = std::min(len, symbols_.size() - pos);
    return word(std::vector<symbol>(first, first + static_cast<std::ptrdiff_t>(n)));
  }
  word prefix(std::size_t len) const { return substr(0, len); }
  word suffix(std::size_t len) const { return substr(size() - len, len); }

  word& operator+=(const word& rhs) {
    symbols_.insert(symbols_.end(), rhs.symbols_.begin(), rhs.symbols_.end());
    return *this;
  }
  friend word operator+(word lhs, const word& rhs) { return lhs += rhs; }

  /// Index of the first occurrence of `needle` at or after `from`, or npos.
  std::size_t find(const word& needle, std::size_t from = 0) const {
    if (from > size()) return npos;
    auto it = std::search(symbols_.begin() + static_cast<std::ptrdiff_t>(from), symbols_.end(),
                          needle.symbols_.begin(), needle.symbols_.end());
    return it == symbols_.end() && !needle.empty() ? npos
                                                   : static_cast<std::size_t>(it - symbols_.begin());
  }
  bool contains(const word& needle) const { return find(needle) != npos; }
  bool starts_with(const word& p) const {
    return p.size() <= size() && std::equal(p.begin(), p.end(), begin());
  }
  bool ends_with(const word& s) const {
    return s.size() <= size() && std::equal(s.begin(), s.end(), end() - static_cast<std::ptrdiff_t>(s.size()));
  }

  friend bool operator==(const word&, const word&) = default;
  friend auto operator<=>(const word&, const word&) = default;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
  std::vector<symbol> symbols_;
};

/// `w` repeated `times` times.
inline word power(const word& w, std::size_t times) {
  word out;
  for (std::size_t i = 0; i < times; ++i) out += w;
  return out;
}

/// Shortlex: shorter first, then lexicographic.
struct shortlex_less {
  bool operator()(const word& x, const word& y) const {
    if (x.size() != y.size()) return x.size() < y.size();
    return x < y;
  }
};

class alphabet {
public:
  alphabet() = default;

  explicit alphabet(std::vector<char32_t> symbols) : symbols_(std::move(symbols)) {
    if (symbols_.empty()) throw invalid_input_error("alphabet must contain at least one symbol");
    if (symbols_.size() > 255) throw invalid_input_error("alphabet larger than 255 symbols");
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (symbols_[i] == symbols_[j]) {
          std::string s;
          utf8::encode(symbols_[i], s);
          throw invalid_input_error("duplicate alphabet symbol '" + s + "'");
        }
      }
    }
  }

  /// Symbols in the order they appear in `text`.
  static alphabet from_string(std::string_view text) { return alphabet(utf8::decode(text)); }

  /// The binary alphabet {a, b} with a < b.
  static alphabet binary() { return alphabet({U'a', U'b'}); }

  /// The first `sigma` lowercase letters.
  static alphabet latin(std::size_t sigma) {
    if (sigma == 0 || sigma > 26) throw invalid_input_error("latin alphabet size must be in 1..26");
    std::vector<char32_t> s;
    for (std::size_t i = 0; i < sigma; ++i) s.push_back(static_cast<char32_t>(U'a' + i));
    return alphabet(std::move(s));
  }

  std::size_t size() const noexcept { return symbols_.size(); }
  const std::vector<char32_t>& symbols() const noexcept { return symbols_; }

  bool has(char32_t c) const {
    return std::find(symbols_.begin(), symbols_.end(), c) != symbols_.end();
  }

  symbol index_of(char32_t c) const {
    auto it = std::find(symbols_.begin(), symbols_.end(), c);
    if (it == symbols_.end()) {
      std::string s;
      utf8::encode(c, s);
      throw invalid_input_error("symbol '" + s + "' is not in the alphabet");
    }
    return static_cast<symbol>(it - symbols_.begin());
  }

  word parse(std::string_view text) const {
    word w;
    for (char32_t c : utf8::decode(text)) w.push_back(index_of(c));
    return w;
  }

  std::string render(const word& w) const {
    std::string out;
    for (symbol x : w) {
      if (x >= symbols_.size()) throw invalid_input_error("symbol index outside the alphabet");
      utf8::encode(symbols_[x], out);
    }
    return out;
  }

  std::string render() const {
    std::string out;
    for (char32_t c : symbols_) utf8::encode(c, out);
    return out;
  }

  bool valid(const word& w) const {
    return std::all_of(w.begin(), w.end(), [&](symbol x) { return x < symbols_.size(); });
  }

  friend bool operator==(const alphabet&, const alphabet&) = default;

private:
  std::vector<char32_t> symbols_;
};

/// A finite set of nonempty words over a fixed alphabet, kept in shortlex order.
class word_set {
public:
  word_set() : alphabet_(alphabet::binary()) {}

  word_set(alphabet sigma, std::vector<word> words) : alphabet_(std::move(sigma)) {
    for (auto& w : words) {
      if (!alphabet_.valid(w)) throw invalid_input_error("word uses a symbol outside the alphabet");
      if (w.empty()) {
        dropped_empty_ = true;
        continue;
      }
      words_.push_back(std::move(w));
    }
    std::sort(words_.begin(), words_.end(), shortlex_less{});
    words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
    for (const auto& w : words_) max_length_ = std::max(max_length_, w.size());
  }

  static word_set from_strings(const alphabet& sigma, std::initializer_list<std::string_view> words) {
    std::vector<word> parsed;
    for (auto s : words) parsed.push_back(sigma.parse(s));
    return word_set(sigma, std::move(parsed));
  }

  const alphabet& sigma() const noexcept { return alphabet_; }
  const std::vector<word>& words() const noexcept { return words_; }
  std::size_t size() const noexcept { return words_.size(); }
  bool empty() const noexcept { return words_.empty(); }

  /// Maximum word length, 0 for the empty set.
  std::size_t k() const noexcept { return max_length_; }

  /// True when an empty word was supplied and discarded.
  bool dropped_empty() const noexcept { return dropped_empty_; }

  bool contains(const word& w) const {
    return std::binary_search(words_.begin(), words_.end(), w, shortlex_less{});
  }

  word parse(std::string_view text) const { return alphabet_.parse(text); }
  std::string render(const word& w) const { return alphabet_.render(w); }

  /// Union with another set over the same alphabet.
  word_set merged(const word_set& other) const {
    if (!(other.alphabet_ == alphabet_)) throw invalid_input_error("union of sets over different alphabets");
    auto all = words_;
    all.insert(all.end(), other.words_.begin(), other.words_.end());
    return word_set(alphabet_, std::move(all));
  }

  friend bool operator==(const word_set& x, const word_set& y) {
    return x.alphabet_ == y.alphabet_ && x.words_ == y.words_;
  }

private:
  alphabet alphabet_;
  std::vector<word> words_;
  std::size_t max_length_ = 0;
  bool dropped_empty_ = false;
};

/// Lengths L, 1 <= L < |w|, whose prefix of length L equals the suffix of length L.
inline std::vector<std::size_t> borders(const word& w) {
  if (w.empty()) throw invalid_input_error("borders of the empty word are undefined");
  // KMP failure function; the border lengths are the chain fail[n], fail[fail[n]], ...
  const std::size_t n = w.size();
  std::vector<std::size_t> fail(n + 1, 0);
  for (std::size_t i = 1, len = 0; i < n; ++i) {
    while (len > 0 && w[i] != w[len]) len = fail[len];
    if (w[i] == w[len]) ++len;
    fail[i + 1] = len;
  }
  std::vector<std::size_t> out;
  for (std::size_t b = fail[n]; b > 0; b = fail[b]) out.push_back(b);
  std::reverse(out.begin(), out.end());
  return out;
}

inline bool is_unbordered(const word& w) { return borders(w).empty(); }

/// All words of length exactly `len` over an alphabet of `sigma` symbols, in lexicographic order.
inline std::vector<word> all_words(std::size_t sigma, std::size_t len) {
  std::vector<word> out;
  std::vector<symbol> cur(len, 0);
  while (true) {
    out.emplace_back(cur);
    std::size_t i = len;
    while (i > 0 && cur[i - 1] + 1u == sigma) cur[--i] = 0;
    if (i == 0) break;
    ++cur[i - 1];
  }
  return out;
}

} // namespace muw
