#pragma once

// JSON serialization of results. Keys are stable: consumers may rely on
// every key below being present (null where not applicable).

#include <json.hpp>

#include "muw/analysis.hpp"
#include "muw/oracle.hpp"
#include "muw/search.hpp"
#include "muw/word.hpp"

namespace muw::report {

using json = nlohmann::ordered_json;

inline json words_json(const alphabet& sigma, const std::vector<word>& ws) {
  json arr = json::array();
  for (const auto& w : ws) arr.push_back(sigma.render(w));
  return arr;
}

inline json search_json(const alphabet& sigma, const search_result& r) {
  json j;
  j["complete"] = r.status == search_status::complete;
  j["status"] = to_string(r.status);
  j["uwl"] = r.uwl();
  j["witness"] = r.uncompletable() ? json(sigma.render(r.witness)) : json(nullptr);
  j["automaton_nodes"] = r.automaton_nodes;
  j["subset_states"] = r.stats.subset_states;
  j["peak_frontier"] = r.stats.peak_frontier;
  j["elapsed_ms"] = r.stats.elapsed_ms;
  return j;
}

inline json structure_json(const alphabet& sigma, const structure_report& s) {
  json j;
  j["u"] = sigma.render(s.u);
  j["starts_with_u"] = s.starts_with_u;
  j["ends_with_u"] = s.ends_with_u;
  j["outer_empty"] = s.outer_empty;
  j["gap_lengths"] = s.gap_lengths;
  j["min_gap"] = s.min_gap;
  j["max_gap"] = s.max_gap;
  return j;
}

inline json row_json(const reproduction_row& r) {
  const auto sigma = alphabet::binary();
  json j;
  j["k"] = r.k;
  j["family"] = to_string(r.family);
  j["u"] = sigma.render(r.u);
  j["computed"] = r.computed;
  j["error"] = r.error.empty() ? json(nullptr) : json(r.error);
  j["uwl"] = r.computed ? json(r.uwl) : json(nullptr);
  j["formula"] = r.formula;
  j["match"] = r.match;
  j["conjecture_bound"] = r.conjecture_bound;
  j["conjecture_violation"] = r.conjecture_violation;
  j["witness"] = r.computed && !r.witness.empty() ? json(sigma.render(r.witness)) : json(nullptr);
  j["automaton_nodes"] = r.automaton_nodes;
  j["subset_states"] = r.stats.subset_states;
  j["elapsed_ms"] = r.stats.elapsed_ms;
  j["structure"] = r.structure ? structure_json(sigma, *r.structure) : json(nullptr);
  j["reference"] = {{"witness", sigma.render(r.reference)},
                    {"length", r.reference.size()},
                    {"uncompletable", r.reference_uncompletable},
                    {"minimal", r.reference_minimal}};
  return j;
}

inline json rows_json(const std::vector<reproduction_row>& rows) {
  json j;
  j["rows"] = json::array();
  for (const auto& r : rows) j["rows"].push_back(row_json(r));
  return j;
}

inline json witness_json(const alphabet& sigma, const witness_report& r) {
  json j;
  j["witness"] = sigma.render(r.witness);
  j["length"] = r.witness.size();
  j["uncompletable"] = r.uncompletable;
  j["minimal_checked"] = r.minimal_checked;
  j["minimal"] = r.minimal_checked ? json(r.minimal) : json(nullptr);
  j["uwl"] = r.minimal_checked ? json(r.uwl) : json(nullptr);
  return j;
}

inline json decomposition_json(const alphabet& sigma, const decomposition& d) {
  json j;
  j["u"] = sigma.render(d.u);
  j["outer_prefix"] = sigma.render(d.outer_prefix);
  j["gaps"] = words_json(sigma, d.gaps);
  j["outer_suffix"] = sigma.render(d.outer_suffix);
  j["occurrences"] = d.occurrences();
  j["gap_lengths"] = d.gap_lengths();
  return j;
}

inline json uwl_max_json(std::size_t k, std::size_t sigma_size, const oracle::uwl_max_result& r) {
  const auto sigma = alphabet::latin(sigma_size);
  json j;
  j["k"] = k;
  j["sigma"] = sigma_size;
  j["value"] = r.value;
  j["exhaustive"] = r.exhaustive;
  j["kind"] = r.exhaustive ? "exact (derived by exhaustive enumeration)" : "lower bound (sampled)";
  j["evaluated"] = r.evaluated;
  j["argmax"] = json::array();
  for (const auto& s : r.argmax) j["argmax"].push_back(words_json(sigma, s.words()));
  return j;
}

inline json conjecture_json(const alphabet& sigma, const conjecture_report& r) {
  json j;
  j["k"] = r.k;
  j["uwl"] = r.uwl;
  j["bound"] = r.bound;
  j["within_bound"] = r.within_bound;
  j["witness"] = sigma.render(r.witness);
  j["anchor"] = r.anchor ? json(sigma.render(*r.anchor)) : json(nullptr);
  j["shape_checked"] = r.shape_checked;
  j["anchored"] = r.anchored;
  j["gap_count_ok"] = r.gap_count_ok;
  j["gap_lengths_ok"] = r.gap_lengths_ok;
  j["gap_lengths"] = r.gap_lengths;
  j["shape_holds"] = r.shape_holds();
  return j;
}

inline json restivo_json(const alphabet& sigma, const restivo_report& r) {
  json j;
  j["u"] = sigma.render(r.u);
  j["letters"] = json::array();
  for (const auto& o : r.letters) {
    j["letters"].push_back({{"letter", sigma.render(word{o.letter})},
                            {"witness", sigma.render(o.witness)},
                            {"uncompletable", o.uncompletable}});
  }
  j["all_uncompletable"] = r.all_uncompletable();
  return j;
}

} // namespace muw::report
