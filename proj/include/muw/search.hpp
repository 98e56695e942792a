#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <cstring>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "muw/automaton.hpp"
#include "muw/error.hpp"
#include "muw/stats.hpp"
#include "muw/word.hpp"

namespace muw {

struct search_limits {
  std::uint64_t max_subsets = 50'000'000;
  std::uint64_t max_bytes = std::uint64_t{3} << 30;
  double timeout_s = 3600.0;  // <= 0 disables the wall-clock budget
};

enum class search_status {
  complete,
  uncompletable,
  complete_up_to,  // brute force found nothing up to `bound`; not a certificate
};

inline const char* to_string(search_status s) {
  switch (s) {
    case search_status::complete: return "complete";
    case search_status::uncompletable: return "uncompletable";
    case search_status::complete_up_to: return "complete_up_to";
  }
  return "?";
}

struct search_result {
  search_status status = search_status::complete;
  std::size_t length = 0;  // minimal uncompletable length when uncompletable
  word witness;            // lexicographically least among the shortest
  std::size_t bound = 0;   // only for complete_up_to
  std::size_t automaton_nodes = 0;
  search_stats stats;

  bool uncompletable() const noexcept { return status == search_status::uncompletable; }
  /// 0 when complete, the minimal uncompletable length otherwise.
  std::size_t uwl() const noexcept { return uncompletable() ? length : 0; }
};

/// Called once per finished BFS layer with the subsets first reached at that depth.
using layer_observer = std::function<void(std::size_t depth, std::span<const subset_state> layer)>;

namespace detail {

inline std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

inline std::uint64_t hash_blocks(const std::uint64_t* p, std::size_t n) {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ n;
  for (std::size_t i = 0; i < n; ++i) h = mix64(h + p[i] + 0x9e3779b97f4a7c15ULL * (i + 1));
  return h;
}

/// Interning table for fixed-width bit vectors, ids dense in insertion order.
class subset_store {
public:
  explicit subset_store(std::size_t nblocks) : nblocks_(nblocks), slots_(1024, 0) {}

  std::size_t size() const noexcept { return count_; }
  std::size_t nblocks() const noexcept { return nblocks_; }
  const std::uint64_t* get(std::uint32_t id) const { return arena_.data() + std::size_t{id} * nblocks_; }

  std::uint64_t bytes() const noexcept {
    return arena_.capacity() * sizeof(std::uint64_t) + slots_.capacity() * sizeof(std::uint32_t) +
           hashes_.capacity() * sizeof(std::uint64_t);
  }

  /// Returns {id, inserted}.
  std::pair<std::uint32_t, bool> intern(const std::uint64_t* bits) {
    if (2 * (count_ + 1) > slots_.size()) grow();
    const auto h = hash_blocks(bits, nblocks_);
    const auto mask = slots_.size() - 1;
    for (auto i = static_cast<std::size_t>(h) & mask;; i = (i + 1) & mask) {
      const auto s = slots_[i];
      if (s == 0) {
        const auto id = static_cast<std::uint32_t>(count_++);
        slots_[i] = id + 1;
        arena_.insert(arena_.end(), bits, bits + nblocks_);
        hashes_.push_back(h);
        return {id, true};
      }
      const auto id = s - 1;
      if (hashes_[id] == h && std::memcmp(get(id), bits, nblocks_ * sizeof(std::uint64_t)) == 0) {
        return {id, false};
      }
    }
  }

private:
  void grow() {
    std::vector<std::uint32_t> next(slots_.size() * 2, 0);
    const auto mask = next.size() - 1;
    for (std::size_t id = 0; id < count_; ++id) {
      auto i = static_cast<std::size_t>(hashes_[id]) & mask;
      while (next[i] != 0) i = (i + 1) & mask;
      next[i] = static_cast<std::uint32_t>(id + 1);
    }
    slots_.swap(next);
  }

  std::size_t nblocks_;
  std::size_t count_ = 0;
  std::vector<std::uint64_t> arena_;
  std::vector<std::uint64_t> hashes_;
  std::vector<std::uint32_t> slots_;
};

inline subset_state to_subset(const std::uint64_t* bits, std::size_t width) {
  subset_state q(width);
  std::memcpy(q.blocks().data(), bits, q.blocks().size() * sizeof(std::uint64_t));
  return q;
}

} // namespace detail

/// w is in Fact(S*) iff reading it from the all-nodes subset never empties it.
inline bool is_factor(const trie_automaton& a, const word& w) {
  auto q = initial_subset(a);
  for (symbol x : w) {
    if (x >= a.sigma()) throw invalid_input_error("symbol outside the alphabet");
    q = step(a, q, x);
    if (q.empty()) return false;
  }
  return true;
}

/// Breadth-first search over the lazily determinized factor automaton.
///
/// Subsets are expanded in order of discovery, symbols in alphabet order,
/// and each subset remembers the first (parent, symbol) that reached it, so
/// the path to every subset is the least word in shortlex order reaching it.
/// The first time a step yields the empty subset, the word that did it is
/// the lexicographically least shortest uncompletable word.
inline search_result shortest_uncompletable(const trie_automaton& a, const search_limits& limits = {},
                                            const layer_observer& observer = {}) {
  using clock = std::chrono::steady_clock;
  const auto t0 = clock::now();
  const auto nblocks = subset_state::blocks_for(a.size());
  const auto sigma = a.sigma();

  search_result result;
  result.automaton_nodes = a.size();

  detail::subset_store store(nblocks);
  std::vector<std::uint32_t> parent;
  std::vector<symbol> via;

  auto elapsed_ms = [&] { return std::chrono::duration<double, std::milli>(clock::now() - t0).count(); };
  auto snapshot = [&](std::size_t depth) {
    result.stats.subset_states = store.size();
    result.stats.depth_reached = depth;
    result.stats.elapsed_ms = elapsed_ms();
    return result.stats;
  };
  auto emit_layer = [&](std::size_t depth, std::size_t from, std::size_t to) {
    if (!observer) return;
    std::vector<subset_state> layer;
    layer.reserve(to - from);
    for (auto id = from; id < to; ++id) {
      layer.push_back(detail::to_subset(store.get(static_cast<std::uint32_t>(id)), a.size()));
    }
    observer(depth, layer);
  };

  {
    const auto init = initial_subset(a);
    store.intern(init.blocks().data());
    parent.push_back(0);
    via.push_back(0);
  }

  std::vector<std::uint64_t> src(nblocks), dst(nblocks);
  std::size_t layer_begin = 0, layer_end = 1, depth = 0;
  std::uint64_t ticks = 0;

  while (layer_begin < layer_end) {
    result.stats.peak_frontier = std::max<std::uint64_t>(result.stats.peak_frontier, layer_end - layer_begin);
    emit_layer(depth, layer_begin, layer_end);
    for (auto id = layer_begin; id < layer_end; ++id) {
      std::memcpy(src.data(), store.get(static_cast<std::uint32_t>(id)), nblocks * sizeof(std::uint64_t));
      for (std::size_t x = 0; x < sigma; ++x) {
        std::fill(dst.begin(), dst.end(), 0);
        detail::step_blocks(a, src.data(), dst.data(), nblocks, static_cast<symbol>(x));

        bool empty = true;
        for (auto bk : dst) {
          if (bk != 0) {
            empty = false;
            break;
          }
        }
        if (empty) {
          std::vector<symbol> rev{static_cast<symbol>(x)};
          for (auto v = id; v != 0; v = parent[v]) rev.push_back(via[v]);
          result.status = search_status::uncompletable;
          result.witness = word(std::vector<symbol>(rev.rbegin(), rev.rend()));
          result.length = result.witness.size();
          snapshot(depth);
          return result;
        }

        const auto [nid, inserted] = store.intern(dst.data());
        if (inserted) {
          parent.push_back(static_cast<std::uint32_t>(id));
          via.push_back(static_cast<symbol>(x));
          if (store.size() > limits.max_subsets) {
            throw resource_limit_error("subset limit of " + std::to_string(limits.max_subsets) + " exceeded",
                                       snapshot(depth));
          }
          if ((store.size() & 0xFFF) == 0 &&
              store.bytes() + parent.capacity() * 5 > limits.max_bytes) {
            throw resource_limit_error("memory limit of " + std::to_string(limits.max_bytes) + " bytes exceeded",
                                       snapshot(depth));
          }
        }
      }
      if ((++ticks & 0x3FF) == 0 && limits.timeout_s > 0 && elapsed_ms() > limits.timeout_s * 1000.0) {
        throw resource_limit_error("time limit of " + std::to_string(limits.timeout_s) + " s exceeded",
                                   snapshot(depth));
      }
    }
    layer_begin = layer_end;
    layer_end = store.size();
    ++depth;
  }

  result.status = search_status::complete;
  snapshot(depth);
  return result;
}

inline search_result shortest_uncompletable(const word_set& s, const search_limits& limits = {}) {
  return shortest_uncompletable(build_star_trie(s), limits);
}

/// 0 when S is complete, else the length of a minimal uncompletable word.
inline std::size_t uwl(const word_set& s, const search_limits& limits = {}) {
  return shortest_uncompletable(s, limits).uwl();
}

inline bool is_complete(const word_set& s, const search_limits& limits = {}) {
  return shortest_uncompletable(s, limits).status == search_status::complete;
}

} // namespace muw
