// muw: command-line front end for the minimal uncompletable word library.
//
// Exit codes: 0 ok, 1 usage, 2 resource limit, 3 invalid input.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "muw/muw.hpp"
#include "muw/report.hpp"

namespace {

using muw::exit_code;
using json = muw::report::json;

struct global_options {
  bool json = false;
  std::uint64_t max_subsets = muw::search_limits{}.max_subsets;
  std::uint64_t max_bytes = muw::search_limits{}.max_bytes;
  double timeout_s = muw::search_limits{}.timeout_s;

  muw::search_limits limits() const { return {max_subsets, max_bytes, timeout_s}; }
};

std::optional<muw::alphabet> alphabet_opt(const std::string& text) {
  if (text.empty()) return std::nullopt;
  return muw::alphabet::from_string(text);
}

// Alphabet for free-standing words: explicit, else the symbols used, ascending.
muw::alphabet alphabet_for(const std::string& declared, const std::vector<std::string>& words) {
  if (!declared.empty()) return muw::alphabet::from_string(declared);
  std::vector<char32_t> used;
  for (const auto& w : words) {
    for (char32_t c : muw::utf8::decode(w)) used.push_back(c);
  }
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  return muw::alphabet(std::move(used));
}

void emit(const global_options& g, const json& j, const std::string& plain) {
  if (g.json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << plain;
  }
}

std::string join_lengths(const std::vector<std::size_t>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
  return s + "]";
}

int cmd_check(const global_options& g, const std::string& file, const std::string& alpha) {
  const auto list = muw::read_word_list(file, alphabet_opt(alpha));
  const auto r = muw::shortest_uncompletable(list.set, g.limits());
  auto j = muw::report::search_json(list.set.sigma(), r);
  emit(g, j, r.status == muw::search_status::complete ? "complete\n" : "non-complete\n");
  return 0;
}

int cmd_muw(const global_options& g, const std::string& file, const std::string& alpha) {
  const auto list = muw::read_word_list(file, alphabet_opt(alpha));
  const auto r = muw::shortest_uncompletable(list.set, g.limits());
  const auto& sigma = list.set.sigma();
  std::string plain = "uwl: " + std::to_string(r.uwl()) + (r.uncompletable() ? "" : " (complete)") + "\n";
  if (r.uncompletable()) plain += "witness: " + sigma.render(r.witness) + "\n";
  plain += "automaton_nodes: " + std::to_string(r.automaton_nodes) + "\n";
  plain += "subset_states: " + std::to_string(r.stats.subset_states) + "\n";
  plain += "elapsed_ms: " + std::to_string(r.stats.elapsed_ms) + "\n";
  emit(g, muw::report::search_json(sigma, r), plain);
  return 0;
}

int cmd_family(const std::string& name, std::size_t k, const std::string& u, const std::string& out) {
  namespace fam = muw::families;
  const auto sigma = muw::alphabet::binary();
  if (k == 0 && !u.empty()) k = muw::utf8::decode(u).size();
  muw::word_set s;
  std::string label = name;
  if (name == "full_minus") {
    const auto anchor = u.empty() ? fam::default_anchor(k) : sigma.parse(u);
    s = fam::full_minus(k, anchor);
    label += " k=" + std::to_string(k) + " u=" + sigma.render(anchor);
  } else if (name == "s4") {
    s = fam::s4();
  } else if (name == "sk") {
    s = fam::sk(k);
    label += " k=" + std::to_string(k);
  } else if (name == "sk_prime") {
    s = fam::sk_prime(k);
    label += " k=" + std::to_string(k);
  } else if (name == "s5") {
    s = fam::s5();
  } else {
    throw muw::invalid_input_error("unknown family '" + name + "'");
  }
  const auto text = muw::format_word_list(s, label);
  if (out.empty() || out == "-") {
    std::cout << text;
  } else {
    std::ofstream f(out, std::ios::binary);
    if (!f) throw muw::invalid_input_error("cannot write '" + out + "'");
    f << text;
  }
  return 0;
}

int cmd_verify(const global_options& g, const std::string& file, const std::string& witness, bool minimal,
               const std::string& alpha) {
  const auto list = muw::read_word_list(file, alphabet_opt(alpha));
  const auto w = list.set.parse(witness);
  const auto r = muw::verify_witness(list.set, w, minimal, g.limits());
  std::string plain = std::string("uncompletable: ") + (r.uncompletable ? "yes" : "no") + "\n";
  if (minimal) {
    plain += std::string("minimal: ") + (r.minimal ? "yes" : "no") + " (uwl " + std::to_string(r.uwl) +
             ", length " + std::to_string(w.size()) + ")\n";
  }
  emit(g, muw::report::witness_json(list.set.sigma(), r), plain);
  return 0;
}

int cmd_reproduce(const global_options& g, const std::vector<std::string>& names, std::size_t min_k,
                  std::size_t max_k) {
  std::vector<muw::family_id> which;
  for (const auto& n : names) {
    if (n == "full_minus") which.push_back(muw::family_id::full_minus);
    else if (n == "sk") which.push_back(muw::family_id::sk);
    else if (n == "sk_prime") which.push_back(muw::family_id::sk_prime);
    else throw muw::invalid_input_error("unknown family '" + n + "'");
  }
  if (which.empty()) which = {muw::family_id::full_minus, muw::family_id::sk, muw::family_id::sk_prime};
  if (min_k > max_k) throw muw::invalid_input_error("--min-k exceeds --max-k");
  const auto rows = muw::reproduce(min_k, max_k, which, g.limits());

  const auto sigma = muw::alphabet::binary();
  std::string plain = "k  family      uwl   formula  match  >2k^2  reference  ms\n";
  for (const auto& r : rows) {
    char line[160];
    if (r.computed) {
      std::snprintf(line, sizeof line, "%-2zu %-10s %5zu %8zu  %-5s  %-5s  %-9s  %.1f\n", r.k, to_string(r.family),
                    r.uwl, r.formula, r.match ? "yes" : "NO", r.conjecture_violation ? "yes" : "no",
                    r.reference_minimal ? "minimal" : (r.reference_uncompletable ? "uncompl" : "BAD"),
                    r.stats.elapsed_ms);
    } else {
      std::snprintf(line, sizeof line, "%-2zu %-10s     -  %8zu  error: %s\n", r.k, to_string(r.family),
                    r.formula, r.error.c_str());
    }
    plain += line;
  }
  emit(g, muw::report::rows_json(rows), plain);
  for (const auto& r : rows) {
    if (!r.computed) return static_cast<int>(exit_code::resource_limit);
  }
  return 0;
}

int cmd_uwlmax(const global_options& g, std::size_t k, std::size_t sigma, std::uint64_t sample, std::uint64_t seed) {
  const auto r = sample > 0 ? muw::oracle::uwl_max_sampled(k, sigma, sample, seed, g.limits())
                            : muw::oracle::uwl_max_exhaustive(k, sigma, g.limits());
  const auto alpha = muw::alphabet::latin(sigma);
  std::string plain = std::string(r.exhaustive ? "UWL" : "UWL lower bound") + "(" + std::to_string(k) + "," +
                      std::to_string(sigma) + ") = " + std::to_string(r.value) + "  [" +
                      (r.exhaustive ? "exact, derived by exhaustive enumeration" : "sampled") + ", " +
                      std::to_string(r.evaluated) + " sets]\n";
  plain += "argmax sets: " + std::to_string(r.argmax.size()) + "\n";
  for (const auto& s : r.argmax) {
    plain += "  {";
    for (std::size_t i = 0; i < s.size(); ++i) plain += (i ? ", " : "") + alpha.render(s.words()[i]);
    plain += "}\n";
  }
  emit(g, muw::report::uwl_max_json(k, sigma, r), plain);
  return 0;
}

int cmd_decompose(const global_options& g, const std::string& w_text, const std::string& u_text,
                  const std::string& alpha) {
  const auto sigma = alphabet_for(alpha, {w_text, u_text});
  const auto d = muw::decompose(sigma.parse(w_text), sigma.parse(u_text));
  std::string plain = "outer_prefix: " + sigma.render(d.outer_prefix) + "\ngaps:";
  for (const auto& v : d.gaps) plain += " " + sigma.render(v);
  plain += "\nouter_suffix: " + sigma.render(d.outer_suffix) + "\noccurrences: " + std::to_string(d.occurrences()) +
           "\ngap_lengths: " + join_lengths(d.gap_lengths()) + "\n";
  emit(g, muw::report::decomposition_json(sigma, d), plain);
  return 0;
}

int cmd_borders(const global_options& g, const std::string& w_text, const std::string& alpha) {
  const auto sigma = alphabet_for(alpha, {w_text});
  const auto b = muw::borders(sigma.parse(w_text));
  json j{{"word", w_text}, {"borders", b}, {"unbordered", b.empty()}};
  emit(g, j, join_lengths(b) + "\n");
  return 0;
}

int cmd_structure(const global_options& g, const std::string& file, const std::string& u_text,
                  const std::string& witness, const std::string& alpha) {
  const auto list = muw::read_word_list(file, alphabet_opt(alpha));
  const auto& s = list.set;
  const auto u = u_text.empty() ? muw::find_anchor(s) : std::optional<muw::word>(s.parse(u_text));
  if (!u) throw muw::not_applicable_error("no unbordered anchor u with S = Σ^k \\ {u} ∪ T");
  muw::structure_report st;
  if (witness.empty()) {
    st = muw::check_structure(s, *u, muw::shortest_uncompletable(s, g.limits()));
  } else {
    st = muw::check_structure(s, *u, s.parse(witness));
  }
  std::string plain = "u: " + s.render(st.u) + "\nwitness: " + s.render(st.witness) +
                      "\nprefix: " + (st.starts_with_u ? "yes" : "no") + "\nsuffix: " +
                      (st.ends_with_u ? "yes" : "no") + "\nouter_empty: " + (st.outer_empty ? "yes" : "no") +
                      "\ngap_lengths: " + join_lengths(st.gap_lengths) + "\n";
  auto j = muw::report::structure_json(s.sigma(), st);
  j["witness"] = s.render(st.witness);
  emit(g, j, plain);
  return 0;
}

int cmd_conjecture(const global_options& g, const std::string& file, const std::string& witness,
                   const std::string& alpha) {
  const auto list = muw::read_word_list(file, alphabet_opt(alpha));
  const auto& s = list.set;
  std::optional<muw::word> w;
  if (!witness.empty()) w = s.parse(witness);
  const auto r = muw::conjecture_probe(s, g.limits(), w);
  std::string plain = "k: " + std::to_string(r.k) + "\nuwl: " + std::to_string(r.uwl) + "\n2k^2: " +
                      std::to_string(r.bound) + "\nbound: " + (r.within_bound ? "holds" : "VIOLATED") + "\n";
  if (r.shape_checked) {
    plain += "anchor: " + s.render(*r.anchor) + "\nshape: " + (r.shape_holds() ? "holds" : "violated") +
             " (gaps " + join_lengths(r.gap_lengths) + ")\n";
  } else {
    plain += "shape: not checked (no anchor)\n";
  }
  emit(g, muw::report::conjecture_json(s.sigma(), r), plain);
  return 0;
}

int cmd_restivo(const global_options& g, const std::string& file, const std::string& u_text,
                const std::string& alpha) {
  const auto list = muw::read_word_list(file, alphabet_opt(alpha));
  const auto& s = list.set;
  const auto r = muw::restivo_hypothesis_check(s, s.parse(u_text));
  std::string plain = "hypothesis: holds\n";
  for (const auto& o : r.letters) {
    plain += "a=" + s.render(muw::word{o.letter}) + ": " + (o.uncompletable ? "uncompletable" : "COMPLETABLE") +
             "  " + s.render(o.witness) + "\n";
  }
  emit(g, muw::report::restivo_json(s.sigma(), r), plain);
  return 0;
}

int cmd_dot(const std::string& file, const std::string& alpha) {
  const auto list = muw::read_word_list(file, alphabet_opt(alpha));
  std::cout << muw::to_dot(muw::build_star_trie(list.set), list.set.sigma());
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimal uncompletable words of finite sets of words"};
  app.require_subcommand(1);
  app.fallthrough();

  global_options g;
  app.add_flag("--json", g.json, "Emit a JSON report");
  app.add_option("--max-subsets", g.max_subsets, "Maximum number of stored subsets")->capture_default_str();
  app.add_option("--max-bytes", g.max_bytes, "Approximate memory budget for the search")->capture_default_str();
  app.add_option("--timeout-s", g.timeout_s, "Wall-clock budget in seconds (<= 0: none)")->capture_default_str();

  std::string file, alpha, witness, u, word_text, out, name = "full_minus";
  std::size_t k = 0, min_k = 2, max_k = 7, sigma = 2;
  std::uint64_t sample = 0, seed = 1;
  bool minimal = false;
  std::vector<std::string> fam_names;

  auto add_file = [&](CLI::App* sub) {
    sub->add_option("file", file, "Word-list file")->required();
    sub->add_option("--alphabet", alpha, "Alphabet symbols in order, when the file declares none");
  };

  auto* check = app.add_subcommand("check", "Decide whether the set is complete");
  add_file(check);
  auto* muw_cmd = app.add_subcommand("muw", "Minimal uncompletable length and witness");
  add_file(muw_cmd);

  auto* family = app.add_subcommand("family", "Write a word-list file for a set family");
  family->add_option("--name", name, "full_minus | s4 | sk | sk_prime | s5")
      ->check(CLI::IsMember({"full_minus", "s4", "sk", "sk_prime", "s5"}));
  family->add_option("--k", k, "Maximum word length");
  family->add_option("--u", u, "Excluded word for full_minus (default a^{k-1}b)");
  family->add_option("-o,--output", out, "Output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "Check that a word is uncompletable (and minimal)");
  add_file(verify);
  verify->add_option("--witness", witness, "Word to check")->required();
  verify->add_flag("--minimal", minimal, "Also check that its length equals uwl");

  auto* reproduce = app.add_subcommand("reproduce", "Compute uwl for set families over a range of k");
  reproduce->add_option("--family", fam_names, "full_minus | sk | sk_prime (repeatable; default all)");
  reproduce->add_option("--min-k", min_k)->capture_default_str();
  reproduce->add_option("--max-k", max_k)->capture_default_str();

  auto* uwlmax = app.add_subcommand("uwlmax", "Maximum uwl over all subsets of Σ^{<=k}");
  uwlmax->add_option("--k", k)->required();
  uwlmax->add_option("--sigma", sigma)->capture_default_str();
  uwlmax->add_option("--sample", sample, "Sample this many random subsets instead (lower bound)");
  uwlmax->add_option("--seed", seed)->capture_default_str();

  auto* decompose = app.add_subcommand("decompose", "Factor a word around an unbordered anchor");
  decompose->add_option("--word", word_text)->required();
  decompose->add_option("--u", u)->required();
  decompose->add_option("--alphabet", alpha);

  auto* borders = app.add_subcommand("borders", "List the border lengths of a word");
  borders->add_option("word", word_text)->required();
  borders->add_option("--alphabet", alpha);

  auto* structure = app.add_subcommand("structure", "Prefix/suffix/gap shape of a minimal uncompletable word");
  add_file(structure);
  structure->add_option("--u", u, "Anchor (default: detected)");
  structure->add_option("--witness", witness, "Word to examine (default: computed)");

  auto* conjecture = app.add_subcommand("conjecture", "Compare uwl with 2k^2 and the conjectured shape");
  add_file(conjecture);
  conjecture->add_option("--witness", witness, "Minimal uncompletable word to examine instead of the computed one");

  auto* restivo = app.add_subcommand("restivo", "Check (ua)^{k-1}u for every letter a");
  add_file(restivo);
  restivo->add_option("--u", u)->required();

  auto* dot = app.add_subcommand("dot", "Print the trie automaton in Graphviz format");
  add_file(dot);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : static_cast<int>(exit_code::usage);
  }

  try {
    if (check->parsed()) return cmd_check(g, file, alpha);
    if (muw_cmd->parsed()) return cmd_muw(g, file, alpha);
    if (family->parsed()) return cmd_family(name, k, u, out);
    if (verify->parsed()) return cmd_verify(g, file, witness, minimal, alpha);
    if (reproduce->parsed()) return cmd_reproduce(g, fam_names, min_k, max_k);
    if (uwlmax->parsed()) return cmd_uwlmax(g, k, sigma, sample, seed);
    if (decompose->parsed()) return cmd_decompose(g, word_text, u, alpha);
    if (borders->parsed()) return cmd_borders(g, word_text, alpha);
    if (structure->parsed()) return cmd_structure(g, file, u, witness, alpha);
    if (conjecture->parsed()) return cmd_conjecture(g, file, witness, alpha);
    if (restivo->parsed()) return cmd_restivo(g, file, u, alpha);
    if (dot->parsed()) return cmd_dot(file, alpha);
  } catch (const muw::resource_limit_error& e) {
    std::cerr << "muw: resource limit: " << e.what() << " (" << e.stats().subset_states << " subsets, "
              << e.stats().elapsed_ms << " ms)\n";
    return static_cast<int>(exit_code::resource_limit);
  } catch (const muw::invalid_input_error& e) {
    std::cerr << "muw: invalid input: " << e.what() << "\n";
    return static_cast<int>(exit_code::invalid_input);
  } catch (const muw::not_applicable_error& e) {
    std::cerr << "muw: not applicable: " << e.what() << "\n";
    return static_cast<int>(exit_code::invalid_input);
  } catch (const muw::internal_inconsistency_error& e) {
    std::cerr << "muw: internal error: " << e.what() << "\n";
    return static_cast<int>(exit_code::usage);
  }
  return static_cast<int>(exit_code::usage);
}
