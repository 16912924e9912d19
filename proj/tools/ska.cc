// Copyright 2026 The ska Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// ska: command-line front end.
//
//   ska parse TERM|@FILE          ska equiv TERM TERM
//   ska member WORD TERM          ska nf TERM [--system]
//   ska automaton TERM --dot PATH ska eval-cm TERM
//   ska check SUITE
//
// Exit status: 0 success or equivalent, 1 not equivalent or property
// failure, 2 error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "ska/checks.h"
#include "ska/countermodel.h"
#include "ska/derivatives.h"
#include "ska/equivalence.h"
#include "ska/language.h"
#include "ska/normal_form.h"
#include "ska/term.h"

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitNo = 1;
constexpr int kExitError = 2;

struct Config {
  std::string alphabet;
  std::size_t bound = 4;
  std::uint64_t seed = 1;
  std::size_t iters = 100;
  std::size_t cap = ska::kDefaultPairCap;
  bool json = false;

  std::optional<ska::LetterMask> declared() const {
    if (alphabet.empty()) return std::nullopt;
    return ska::parse_alphabet(alphabet);
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Inline text, or every term in a file when the argument is @PATH.
std::vector<ska::Term> read_terms(const std::string& arg, const Config& cfg) {
  if (!arg.empty() && arg.front() == '@') {
    return ska::parse_term_lines(read_file(arg.substr(1)), cfg.declared());
  }
  return {ska::parse_term(arg, cfg.declared())};
}

ska::Term read_term(const std::string& arg, const Config& cfg) {
  std::vector<ska::Term> terms = read_terms(arg, cfg);
  if (terms.size() != 1) {
    throw std::runtime_error("expected exactly one term in '" + arg + "', got " +
                             std::to_string(terms.size()));
  }
  return terms.front();
}

void emit(const Config& cfg, const ordered_json& j, const std::string& text) {
  if (cfg.json) {
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << text;
  }
}

int run_parse(const Config& cfg, const std::string& input, bool show_lang) {
  ordered_json out = ordered_json::array();
  std::string text;
  for (ska::Term t : read_terms(input, cfg)) {
    const ska::Fragments f = ska::classify(t);
    ordered_json j = {{"term", ska::print_term(t)},
                      {"size", t.size()},
                      {"sl", f.sl},
                      {"ska", f.ska},
                      {"sf1", f.sf1},
                      {"nsf", f.nsf}};
    text += ska::print_term(t);
    text += std::string("\tSL=") + (f.sl ? "1" : "0") +
            " SKA=" + (f.ska ? "1" : "0") + " SF1=" + (f.sf1 ? "1" : "0") +
            " NSF=" + (f.nsf ? "1" : "0") + "\n";
    if (show_lang) {
      const ska::BoundedLang lang = ska::sem_bounded(t, cfg.bound);
      ordered_json words = ordered_json::array();
      for (const auto& w : lang.words()) words.push_back(ska::print_word(w));
      j["language"] = words;
      text += ska::print_lang(lang);
    }
    out.push_back(j);
  }
  emit(cfg, out, text);
  return kExitOk;
}

void check_word_alphabet(const ska::SyncWord& w, const Config& cfg) {
  const auto declared = cfg.declared();
  if (!declared) return;
  for (ska::SymSet a : w) {
    if ((a.mask() & ~*declared) != 0) {
      throw std::runtime_error("word letter " + ska::print_symset(a) +
                               " is outside the alphabet " + cfg.alphabet);
    }
  }
}

int run_member(const Config& cfg, const std::string& word,
               const std::string& input) {
  const ska::SyncWord w = ska::parse_word(word);
  check_word_alphabet(w, cfg);
  const ska::Term t = read_term(input, cfg);
  const bool in = ska::member(w, t);
  emit(cfg,
       {{"word", ska::print_word(w)},
        {"term", ska::print_term(t)},
        {"member", in}},
       in ? "member\n" : "not member\n");
  return kExitOk;
}

int run_equiv(const Config& cfg, const std::string& lhs,
              const std::string& rhs) {
  const ska::Term e = read_term(lhs, cfg);
  const ska::Term f = read_term(rhs, cfg);
  ska::warn_if_large_support(e.support() | f.support());
  const ska::EquivResult r = ska::equiv(e, f, ska::EquivOptions{cfg.cap});
  ordered_json j = {{"lhs", ska::print_term(e)},
                    {"rhs", ska::print_term(f)},
                    {"equivalent", r.equivalent},
                    {"pairs_explored", r.pairs_explored}};
  std::string text = "equivalent\n";
  if (!r.equivalent) {
    const std::string w = ska::print_word(*r.witness);
    j["witness"] = w;
    j["witness_in_lhs"] = ska::member(*r.witness, e);
    text = "not equivalent, witness " + w + "\n";
  }
  emit(cfg, j, text);
  return r.equivalent ? kExitOk : kExitNo;
}

int run_nf(const Config& cfg, const std::string& input, bool show_system) {
  const ska::Term t = read_term(input, cfg);
  ska::warn_if_large_support(t.support());
  const ska::Term nf = ska::to_normal_form(t);
  ordered_json j = {{"term", ska::print_term(t)},
                    {"normal_form", ska::print_term(nf)}};
  std::string text;
  if (show_system) {
    const ska::LinSystem sys = ska::build_system(t);
    text += ska::print_system(sys);
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < sys.size(); ++i) {
      ordered_json row = ordered_json::array();
      for (ska::Term m : sys.matrix[i]) row.push_back(ska::print_term(m));
      rows.push_back({{"state", ska::print_term(sys.states[i])},
                      {"constant", ska::print_term(sys.constant[i])},
                      {"row", row}});
    }
    j["system"] = rows;
  }
  text += ska::print_term(nf) + "\n";
  emit(cfg, j, text);
  return kExitOk;
}

int run_automaton(const Config& cfg, const std::string& input,
                  const std::string& dot_path) {
  const ska::Term t = read_term(input, cfg);
  ska::warn_if_large_support(t.support());
  const ska::Automaton aut = ska::build_automaton(t);
  if (!dot_path.empty()) {
    std::ofstream out(dot_path);
    if (!out) throw std::runtime_error("cannot write '" + dot_path + "'");
    out << ska::to_dot(aut);
  }
  std::size_t accepting = 0;
  for (bool b : aut.accepting) accepting += b;
  emit(cfg,
       {{"term", ska::print_term(t)},
        {"states", aut.states.size()},
        {"accepting", accepting},
        {"transitions", aut.transition_count()}},
       "states " + std::to_string(aut.states.size()) + ", accepting " +
           std::to_string(accepting) + ", transitions " +
           std::to_string(aut.transition_count()) + "\n");
  return kExitOk;
}

int run_eval_cm(const Config& cfg, const std::string& input) {
  const ska::Term t = read_term(input, cfg);
  const ska::ModelElement m = ska::eval_cm(t);
  ordered_json j = {{"term", ska::print_term(t)},
                    {"dagger", m.is_dagger()},
                    {"value", ska::print_element(m)}};
  if (!m.is_dagger()) {
    j["threshold"] = m.lang().threshold();
    j["period"] = m.lang().period();
  }
  emit(cfg, j, ska::print_element(m) + "\n");
  return kExitOk;
}

int run_check_suite(const Config& cfg, const std::string& suite,
                    std::size_t max_size) {
  ska::CheckConfig cc;
  cc.seed = cfg.seed;
  cc.iters = cfg.iters;
  cc.bound = cfg.bound;
  if (auto a = cfg.declared()) cc.alphabet = *a;
  cc.max_size = max_size;
  cc.pair_cap = cfg.cap;
  const ska::CheckReport report = ska::run_check(suite, cc);
  ordered_json props = ordered_json::array();
  for (const auto& p : report.properties) {
    ordered_json jp = {{"name", p.name},
                       {"instances", p.instances},
                       {"passed", p.passed},
                       {"ok", p.ok()}};
    if (!p.ok()) jp["first_failure"] = p.first_failure;
    props.push_back(jp);
  }
  emit(cfg,
       {{"suite", report.suite},
        {"seed", cfg.seed},
        {"iters", cfg.iters},
        {"ok", report.ok()},
        {"properties", props}},
       ska::format_report(report));
  return report.ok() ? kExitOk : kExitNo;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Synchronous Kleene algebra toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;
  app.add_option("--alphabet", cfg.alphabet,
                 "Declared letters, e.g. abc (default: inferred)");
  app.add_option("--bound", cfg.bound, "Word length bound")
      ->capture_default_str();
  app.add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
  app.add_option("--iters", cfg.iters, "Instances per property")
      ->capture_default_str();
  app.add_option("--cap", cfg.cap, "Maximum state pairs for equivalence")
      ->capture_default_str();
  app.add_flag("--json", cfg.json, "Machine-readable output");

  std::string term_a;
  std::string term_b;
  std::string word;
  std::string dot_path;
  std::string suite;
  bool show_system = false;
  bool show_lang = false;
  std::size_t max_size = 0;

  auto* parse = app.add_subcommand("parse", "Parse, print and classify terms");
  parse->add_option("term", term_a, "Term, or @FILE with one term per line")
      ->required();
  parse->add_flag("--lang", show_lang, "Also list the language up to --bound");

  auto* member = app.add_subcommand("member", "Word membership");
  member->add_option("word", word, "Word such as {a,b}{c}, or eps")->required();
  member->add_option("term", term_a, "Term or @FILE")->required();

  auto* equiv = app.add_subcommand("equiv", "Decide equivalence");
  equiv->add_option("lhs", term_a, "Term or @FILE")->required();
  equiv->add_option("rhs", term_b, "Term or @FILE")->required();

  auto* nf = app.add_subcommand("nf", "Normal form");
  nf->add_option("term", term_a, "Term or @FILE")->required();
  nf->add_flag("--system", show_system, "Print the linear system first");

  auto* automaton = app.add_subcommand("automaton", "Syntactic automaton");
  automaton->add_option("term", term_a, "Term or @FILE")->required();
  automaton->add_option("--dot", dot_path, "Write Graphviz output to PATH");

  auto* eval_cm = app.add_subcommand("eval-cm", "Evaluate in the countermodel");
  eval_cm->add_option("term", term_a, "Term or @FILE")->required();

  auto* check = app.add_subcommand("check", "Run a property battery");
  check->add_option("suite", suite, "Suite name")
      ->required()
      ->check(CLI::IsMember(ska::check_suites()));
  check->add_option("--max-size", max_size,
                    "Largest random term (default: per suite)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (*parse) return run_parse(cfg, term_a, show_lang);
    if (*member) return run_member(cfg, word, term_a);
    if (*equiv) return run_equiv(cfg, term_a, term_b);
    if (*nf) return run_nf(cfg, term_a, show_system);
    if (*automaton) return run_automaton(cfg, term_a, dot_path);
    if (*eval_cm) return run_eval_cm(cfg, term_a);
    if (*check) return run_check_suite(cfg, suite, max_size);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
