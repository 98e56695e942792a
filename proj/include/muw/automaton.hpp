#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "muw/error.hpp"
#include "muw/word.hpp"

namespace muw {

/// Flower automaton for S* laid out on the prefix trie of S.
///
/// States are the distinct proper prefixes of words of S (node 0 is the
/// empty prefix). Reading x from prefix p goes to the node p.x when p.x is
/// itself a proper prefix, and to the root when p.x is a word of S; both may
/// hold at once. Paths root -> root spell exactly S*. Taking every state as
/// initial and final gives a recognizer for Fact(S*).
///
/// Nodes are numbered breadth-first, children in alphabet order.
class trie_automaton {
public:
  static constexpr std::int32_t none = -1;

  struct successors {
    std::int32_t child = none;
    bool to_root = false;

    std::size_t size() const noexcept { return (child != none ? 1u : 0u) + (to_root ? 1u : 0u); }
  };

  trie_automaton() = default;

  std::size_t size() const noexcept { return parent_.size(); }
  std::size_t sigma() const noexcept { return sigma_; }

  successors delta(std::size_t node, symbol x) const {
    const auto cell = node * sigma_ + x;
    return {child_[cell], completes_[cell] != 0};
  }

  std::int32_t child(std::size_t node, symbol x) const { return child_[node * sigma_ + x]; }
  bool completes(std::size_t node, symbol x) const { return completes_[node * sigma_ + x] != 0; }

  std::size_t depth(std::size_t node) const { return depth_[node]; }

  /// The prefix spelled by the root -> node path.
  word prefix(std::size_t node) const {
    std::vector<symbol> rev;
    for (auto v = node; v != 0; v = static_cast<std::size_t>(parent_[v])) rev.push_back(label_[v]);
    return word(std::vector<symbol>(rev.rbegin(), rev.rend()));
  }

  friend trie_automaton build_star_trie(const word_set& s);

private:
  std::size_t sigma_ = 0;
  std::vector<std::int32_t> parent_;
  std::vector<symbol> label_;
  std::vector<std::size_t> depth_;
  std::vector<std::int32_t> child_;     // size() * sigma_
  std::vector<std::uint8_t> completes_; // size() * sigma_
};

inline trie_automaton build_star_trie(const word_set& s) {
  const std::size_t sigma = s.sigma().size();

  // Raw trie over all words; a raw node is kept iff something extends it.
  struct raw_node {
    std::map<symbol, std::size_t> next;
    bool terminal = false;
  };
  std::vector<raw_node> raw(1);
  for (const auto& w : s.words()) {
    std::size_t v = 0;
    for (symbol x : w) {
      auto it = raw[v].next.find(x);
      if (it == raw[v].next.end()) {
        raw.emplace_back();
        it = raw[v].next.emplace(x, raw.size() - 1).first;
      }
      v = it->second;
    }
    raw[v].terminal = true;
  }

  trie_automaton a;
  a.sigma_ = sigma;
  std::vector<std::size_t> raw_of;  // automaton node -> raw node
  raw_of.push_back(0);
  a.parent_.push_back(trie_automaton::none);
  a.label_.push_back(0);
  a.depth_.push_back(0);
  std::vector<std::size_t> id_of(raw.size(), 0);

  // First pass assigns ids breadth-first.
  std::size_t head = 0;
  while (head < raw_of.size()) {
    const auto id = head++;
    const auto& rn = raw[raw_of[id]];
    for (const auto& [x, next] : rn.next) {
      if (raw[next].next.empty()) continue;  // full word only, not a proper prefix
      id_of[next] = raw_of.size();
      raw_of.push_back(next);
      a.parent_.push_back(static_cast<std::int32_t>(id));
      a.label_.push_back(x);
      a.depth_.push_back(a.depth_[id] + 1);
    }
  }

  const auto n = raw_of.size();
  a.child_.assign(n * sigma, trie_automaton::none);
  a.completes_.assign(n * sigma, 0);
  for (std::size_t id = 0; id < n; ++id) {
    for (const auto& [x, next] : raw[raw_of[id]].next) {
      if (!raw[next].next.empty()) a.child_[id * sigma + x] = static_cast<std::int32_t>(id_of[next]);
      if (raw[next].terminal) a.completes_[id * sigma + x] = 1;
    }
  }
  return a;
}

/// A set of trie nodes, one bit per node.
class subset_state {
public:
  using block = std::uint64_t;
  static constexpr std::size_t block_bits = 64;

  subset_state() = default;
  explicit subset_state(std::size_t width) : width_(width), blocks_(blocks_for(width), 0) {}

  static std::size_t blocks_for(std::size_t width) { return (width + block_bits - 1) / block_bits; }

  static subset_state full(std::size_t width) {
    subset_state q(width);
    for (std::size_t i = 0; i < width; ++i) q.set(i);
    return q;
  }

  std::size_t width() const noexcept { return width_; }
  std::span<const block> blocks() const noexcept { return blocks_; }
  std::span<block> blocks() noexcept { return blocks_; }

  bool test(std::size_t i) const { return (blocks_[i / block_bits] >> (i % block_bits)) & 1u; }
  void set(std::size_t i) { blocks_[i / block_bits] |= block{1} << (i % block_bits); }

  bool empty() const noexcept {
    for (auto bk : blocks_) {
      if (bk != 0) return false;
    }
    return true;
  }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto bk : blocks_) c += static_cast<std::size_t>(std::popcount(bk));
    return c;
  }

  bool subset_of(const subset_state& other) const {
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
      if (blocks_[i] & ~other.blocks_[i]) return false;
    }
    return true;
  }

  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    for (std::size_t bi = 0; bi < blocks_.size(); ++bi) {
      for (auto bk = blocks_[bi]; bk != 0; bk &= bk - 1) {
        out.push_back(bi * block_bits + static_cast<std::size_t>(std::countr_zero(bk)));
      }
    }
    return out;
  }

  /// "1" for members, "0" otherwise, node 0 first.
  std::string to_string() const {
    std::string s(width_, '0');
    for (std::size_t i = 0; i < width_; ++i) {
      if (test(i)) s[i] = '1';
    }
    return s;
  }

  friend bool operator==(const subset_state&, const subset_state&) = default;

private:
  std::size_t width_ = 0;
  std::vector<block> blocks_;
};

/// Every node active: the start state for factor semantics.
inline subset_state initial_subset(const trie_automaton& a) { return subset_state::full(a.size()); }

namespace detail {

// Raw-block step used by the search inner loop. dst must be zeroed.
inline void step_blocks(const trie_automaton& a, const subset_state::block* src, subset_state::block* dst,
                        std::size_t nblocks, symbol x) {
  for (std::size_t bi = 0; bi < nblocks; ++bi) {
    for (auto bk = src[bi]; bk != 0; bk &= bk - 1) {
      const auto node = bi * subset_state::block_bits + static_cast<std::size_t>(std::countr_zero(bk));
      const auto succ = a.delta(node, x);
      if (succ.child != trie_automaton::none) {
        const auto c = static_cast<std::size_t>(succ.child);
        dst[c / subset_state::block_bits] |= subset_state::block{1} << (c % subset_state::block_bits);
      }
      if (succ.to_root) dst[0] |= 1u;
    }
  }
}

} // namespace detail

/// One determinized transition.
inline subset_state step(const trie_automaton& a, const subset_state& q, symbol x) {
  if (x >= a.sigma()) throw invalid_input_error("symbol outside the alphabet");
  if (q.width() != a.size()) throw invalid_input_error("subset width does not match the automaton");
  subset_state out(a.size());
  detail::step_blocks(a, q.blocks().data(), out.blocks().data(), q.blocks().size(), x);
  return out;
}

/// Graphviz rendering; nodes labelled by their prefix, completion edges drawn to the root.
inline std::string to_dot(const trie_automaton& a, const alphabet& sigma) {
  std::ostringstream os;
  os << "digraph star_trie {\n  rankdir=LR;\n";
  for (std::size_t v = 0; v < a.size(); ++v) {
    const auto label = v == 0 ? std::string("ε") : sigma.render(a.prefix(v));
    os << "  n" << v << " [label=\"" << label << "\"" << (v == 0 ? ", shape=doublecircle" : "") << "];\n";
  }
  for (std::size_t v = 0; v < a.size(); ++v) {
    for (std::size_t x = 0; x < a.sigma(); ++x) {
      const auto succ = a.delta(v, static_cast<symbol>(x));
      const auto lbl = sigma.render(word{static_cast<symbol>(x)});
      if (succ.child != trie_automaton::none) {
        os << "  n" << v << " -> n" << succ.child << " [label=\"" << lbl << "\"];\n";
      }
      if (succ.to_root) os << "  n" << v << " -> n0 [label=\"" << lbl << "\", style=dashed];\n";
    }
  }
  os << "}\n";
  return os.str();
}

} // namespace muw
