#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "muw/automaton.hpp"
#include "muw/error.hpp"
#include "muw/families.hpp"
#include "muw/oracle.hpp"
#include "muw/search.hpp"
#include "muw/word.hpp"

namespace muw {

/// w = v0 u v1 u ... vm u v(m+1) where no vi contains u.
struct decomposition {
  word u;
  word outer_prefix;
  std::vector<word> gaps;  // v1..vm, between consecutive occurrences
  word outer_suffix;
  std::vector<std::size_t> positions;  // start of each occurrence of u

  std::size_t occurrences() const noexcept { return positions.size(); }
  std::size_t m() const noexcept { return gaps.size(); }
  bool outer_empty() const noexcept { return outer_prefix.empty() && outer_suffix.empty(); }

  std::vector<std::size_t> gap_lengths() const {
    std::vector<std::size_t> out;
    for (const auto& g : gaps) out.push_back(g.size());
    return out;
  }

  word reconstruct() const {
    word w = outer_prefix;
    for (std::size_t i = 0; i < positions.size(); ++i) {
      if (i > 0) w += gaps[i - 1];
      w += u;
    }
    w += outer_suffix;
    return w;
  }
};

/// Unique factorization of w around the occurrences of an unbordered u.
/// Occurrences of an unbordered word never overlap, so the split is unambiguous.
inline decomposition decompose(const word& w, const word& u) {
  if (u.empty()) throw invalid_input_error("decompose: anchor must be nonempty");
  if (!is_unbordered(u)) throw invalid_input_error("decompose: anchor is bordered, factorization is not unique");

  decomposition d;
  d.u = u;
  for (auto pos = w.find(u); pos != word::npos; pos = w.find(u, pos + 1)) d.positions.push_back(pos);
  if (d.positions.empty()) throw not_applicable_error("decompose: anchor does not occur in the word");

  d.outer_prefix = w.prefix(d.positions.front());
  for (std::size_t i = 1; i < d.positions.size(); ++i) {
    const auto from = d.positions[i - 1] + u.size();
    d.gaps.push_back(w.substr(from, d.positions[i] - from));
  }
  const auto tail = d.positions.back() + u.size();
  d.outer_suffix = w.substr(tail, w.size() - tail);
  return d;
}

struct structure_report {
  word u;
  word witness;
  bool starts_with_u = false;
  bool ends_with_u = false;
  bool outer_empty = false;
  std::vector<std::size_t> gap_lengths;
  std::size_t min_gap = 0;
  std::size_t max_gap = 0;

  /// The prefix/suffix/empty-outer shape of a minimal uncompletable word for Σ^k \ {u} ∪ T.
  bool anchored() const noexcept { return starts_with_u && ends_with_u && outer_empty; }
};

/// If S = Σ^k \ {u} ∪ T with T of shorter words and u unbordered, returns u.
inline std::optional<word> find_anchor(const word_set& s) {
  const auto k = s.k();
  if (k < 2) return std::nullopt;
  std::size_t present = 0;
  for (const auto& w : s.words()) present += w.size() == k ? 1 : 0;
  std::size_t total = 1;
  for (std::size_t i = 0; i < k; ++i) total *= s.sigma().size();
  if (present + 1 != total) return std::nullopt;
  for (auto& w : all_words(s.sigma().size(), k)) {
    if (!s.contains(w)) return is_unbordered(w) ? std::optional<word>(std::move(w)) : std::nullopt;
  }
  return std::nullopt;
}

namespace detail {

inline void require_anchor_form(const word_set& s, const word& u) {
  if (u.size() != s.k()) throw not_applicable_error("set is not of the form Σ^k \\ {u} ∪ T: |u| differs from k");
  if (!is_unbordered(u)) throw not_applicable_error("set is not of the form Σ^k \\ {u} ∪ T: u is bordered");
  const auto anchor = find_anchor(s);
  if (!anchor || *anchor != u) {
    throw not_applicable_error("set is not of the form Σ^k \\ {u} ∪ T with u = " + s.render(u));
  }
}

} // namespace detail

/// Shape of a witness for S = Σ^k \ {u} ∪ T (u unbordered, T ⊂ Σ^{<k}).
inline structure_report check_structure(const word_set& s, const word& u, const word& witness) {
  detail::require_anchor_form(s, u);
  structure_report r;
  r.u = u;
  r.witness = witness;
  r.starts_with_u = witness.starts_with(u);
  r.ends_with_u = witness.ends_with(u);
  const auto d = decompose(witness, u);
  r.outer_empty = d.outer_empty();
  r.gap_lengths = d.gap_lengths();
  if (!r.gap_lengths.empty()) {
    r.min_gap = *std::min_element(r.gap_lengths.begin(), r.gap_lengths.end());
    r.max_gap = *std::max_element(r.gap_lengths.begin(), r.gap_lengths.end());
  }
  return r;
}

inline structure_report check_structure(const word_set& s, const word& u, const search_result& result) {
  if (!result.uncompletable()) throw not_applicable_error("check_structure: search result is not uncompletable");
  return check_structure(s, u, result.witness);
}

struct witness_report {
  word witness;
  bool uncompletable = false;
  bool minimal_checked = false;
  bool minimal = false;
  std::size_t uwl = 0;  // only when minimal_checked
};

/// Checks w against both membership routes; with check_minimal, also that uwl(S) = |w|.
inline witness_report verify_witness(const word_set& s, const word& w, bool check_minimal,
                                     const search_limits& limits = {}) {
  const auto a = build_star_trie(s);
  const bool by_search = !is_factor(a, w);
  const bool by_oracle = !oracle::cover_oracle(s, w);
  if (by_search != by_oracle) {
    throw internal_inconsistency_error("automaton and cover oracle disagree on " + s.render(w));
  }
  witness_report r;
  r.witness = w;
  r.uncompletable = by_search;
  if (check_minimal) {
    r.minimal_checked = true;
    r.uwl = shortest_uncompletable(a, limits).uwl();
    r.minimal = r.uncompletable && r.uwl == w.size();
  }
  return r;
}

struct restivo_letter_outcome {
  symbol letter = 0;
  word witness;
  bool uncompletable = false;
};

struct restivo_report {
  word u;
  std::vector<restivo_letter_outcome> letters;

  bool all_uncompletable() const {
    return std::all_of(letters.begin(), letters.end(), [](const auto& o) { return o.uncompletable; });
  }
};

/// No word of S is a factor of u (|u| = k); then (ua)^{k-1}u is checked for every letter a.
inline restivo_report restivo_hypothesis_check(const word_set& s, const word& u) {
  if (u.size() != s.k() || u.size() < 2) {
    throw invalid_input_error("restivo_hypothesis_check requires |u| = k >= 2");
  }
  for (const auto& v : s.words()) {
    if (u.contains(v)) throw not_applicable_error("hypothesis fails: " + s.render(v) + " is a factor of u");
  }
  const auto a = build_star_trie(s);
  restivo_report r;
  r.u = u;
  for (std::size_t x = 0; x < s.sigma().size(); ++x) {
    restivo_letter_outcome o;
    o.letter = static_cast<symbol>(x);
    o.witness = families::restivo_witness(u, word{o.letter});
    const bool by_search = !is_factor(a, o.witness);
    const bool by_oracle = !oracle::cover_oracle(s, o.witness);
    if (by_search != by_oracle) {
      throw internal_inconsistency_error("automaton and cover oracle disagree on " + s.render(o.witness));
    }
    o.uncompletable = by_search;
    r.letters.push_back(std::move(o));
  }
  return r;
}

enum class family_id { full_minus, sk, sk_prime };

inline const char* to_string(family_id f) {
  switch (f) {
    case family_id::full_minus: return "full_minus";
    case family_id::sk: return "sk";
    case family_id::sk_prime: return "sk_prime";
  }
  return "?";
}

inline std::size_t family_min_k(family_id f) {
  switch (f) {
    case family_id::full_minus: return 2;
    case family_id::sk: return 5;
    case family_id::sk_prime: return 7;
  }
  return 0;
}

/// k^2+k-1, 2k^2-2k+1 or 3k^2-9k+1.
inline std::size_t family_formula(family_id f, std::size_t k) {
  switch (f) {
    case family_id::full_minus: return k * k + k - 1;
    case family_id::sk: return 2 * k * k - 2 * k + 1;
    case family_id::sk_prime: return 3 * k * k - 9 * k + 1;
  }
  return 0;
}

struct reproduction_row {
  std::size_t k = 0;
  family_id family = family_id::full_minus;
  word u;
  std::size_t formula = 0;
  std::size_t conjecture_bound = 0;  // 2k^2

  bool computed = false;  // false: error holds the reason
  std::string error;
  std::size_t uwl = 0;
  bool match = false;
  bool conjecture_violation = false;
  word witness;
  std::size_t automaton_nodes = 0;
  search_stats stats;
  std::optional<structure_report> structure;

  word reference;  // the closed-form witness for this family
  bool reference_uncompletable = false;
  bool reference_minimal = false;  // uncompletable and |reference| = uwl
};

inline reproduction_row reproduce_one(family_id f, std::size_t k, const search_limits& limits = {}) {
  reproduction_row row;
  row.k = k;
  row.family = f;
  row.formula = family_formula(f, k);
  row.conjecture_bound = 2 * k * k;

  word_set s;
  switch (f) {
    case family_id::full_minus:
      row.u = families::default_anchor(k);
      s = families::full_minus(k, row.u);
      row.reference = families::restivo_witness(row.u, word{families::a});
      break;
    case family_id::sk:
      row.u = families::sk_anchor(k);
      s = families::sk(k);
      row.reference = families::genrest_witness(k);
      break;
    case family_id::sk_prime:
      row.u = families::sk_anchor(k);
      s = families::sk_prime(k);
      row.reference = families::contrex_witness(k);
      break;
  }

  const auto a = build_star_trie(s);
  row.automaton_nodes = a.size();
  try {
    const auto result = shortest_uncompletable(a, limits);
    row.computed = true;
    row.stats = result.stats;
    row.uwl = result.uwl();
    row.match = row.uwl == row.formula;
    row.conjecture_violation = row.uwl > row.conjecture_bound;
    if (result.uncompletable()) {
      row.witness = result.witness;
      row.structure = check_structure(s, row.u, result);
    }
  } catch (const resource_limit_error& e) {
    row.error = e.what();
    row.stats = e.stats();
  }

  const bool by_search = !is_factor(a, row.reference);
  const bool by_oracle = !oracle::cover_oracle(s, row.reference);
  if (by_search != by_oracle) {
    throw internal_inconsistency_error("automaton and cover oracle disagree on " + s.render(row.reference));
  }
  row.reference_uncompletable = by_search;
  row.reference_minimal = row.computed && by_search && row.reference.size() == row.uwl;
  return row;
}

/// One row per (k, family) in that order; families undefined at a given k are skipped.
inline std::vector<reproduction_row> reproduce(std::size_t k_min, std::size_t k_max, std::vector<family_id> which,
                                               const search_limits& limits = {}) {
  std::sort(which.begin(), which.end());
  which.erase(std::unique(which.begin(), which.end()), which.end());
  std::vector<reproduction_row> rows;
  for (auto k = k_min; k <= k_max; ++k) {
    for (auto f : which) {
      if (k < family_min_k(f)) continue;
      rows.push_back(reproduce_one(f, k, limits));
    }
  }
  return rows;
}

struct conjecture_report {
  std::size_t k = 0;
  std::size_t uwl = 0;
  std::size_t bound = 0;  // 2k^2
  bool within_bound = false;
  word witness;  // the word whose shape was examined
  std::optional<word> anchor;
  bool shape_checked = false;
  bool anchored = false;                // starts and ends with u, nothing outside
  bool gap_count_ok = false;            // exactly k-1 gaps
  bool gap_lengths_ok = false;          // every gap at most k
  std::vector<std::size_t> gap_lengths;

  bool shape_holds() const noexcept { return shape_checked && anchored && gap_count_ok && gap_lengths_ok; }
};

/// Compares uwl(S) with 2k^2 and, when S has an anchor, the witness with the
/// shape u v1 u ... v(k-1) u, |vi| <= k. `witness` overrides the computed
/// lex-least one for the shape check; it must be a minimal uncompletable word.
inline conjecture_report conjecture_probe(const word_set& s, const search_limits& limits = {},
                                          const std::optional<word>& witness = std::nullopt) {
  const auto result = shortest_uncompletable(s, limits);
  if (!result.uncompletable()) throw not_applicable_error("conjecture_probe: the set is complete");

  conjecture_report r;
  r.k = s.k();
  r.uwl = result.uwl();
  r.bound = 2 * r.k * r.k;
  r.within_bound = r.uwl <= r.bound;
  r.witness = result.witness;
  if (witness) {
    const auto check = verify_witness(s, *witness, false, limits);
    if (!check.uncompletable || witness->size() != r.uwl) {
      throw invalid_input_error("conjecture_probe: supplied witness is not a minimal uncompletable word");
    }
    r.witness = *witness;
  }

  r.anchor = find_anchor(s);
  if (r.anchor) {
    const auto st = check_structure(s, *r.anchor, r.witness);
    r.shape_checked = true;
    r.anchored = st.anchored();
    r.gap_lengths = st.gap_lengths;
    r.gap_count_ok = st.gap_lengths.size() + 1 == r.k;
    r.gap_lengths_ok = std::all_of(st.gap_lengths.begin(), st.gap_lengths.end(),
                                   [&](std::size_t g) { return g <= r.k; });
  }
  return r;
}

} // namespace muw
