#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "diamond/json_io.hpp"
#include "diamond/verify.hpp"

using namespace diamond;

namespace {

void emit(const json& j, const std::string& output_path) {
  const std::string text = j.dump(2) + "\n";
  if (output_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(output_path);
    if (!out) throw std::runtime_error("cannot open output file: " + output_path);
    out << text;
  }
}

int run_synmon(const std::string& dfa_path, const std::string& output_path) {
  const Dfa d = dfa_from_json(load_json_file(dfa_path));
  const SyntacticMonoid syn = syntactic_monoid(d);
  json j = recogniser_to_json(to_recogniser(syn));
  j["size"] = syn.monoid.size();
  json reps = json::array();
  for (const Word& w : syn.representative) {
    std::string text;
    for (int c : w) text += syn.morphism.alphabet[c];
    reps.push_back(text);
  }
  j["representatives"] = reps;
  emit(j, output_path);
  return 0;
}

int run_quantify(const std::string& rec_path, const std::string& semiring_spec,
                 int k, const std::string& kind, const std::string& output_path) {
  const Recogniser rec = recogniser_from_json(load_json_file(rec_path));
  const Semiring s = semiring_from_spec(semiring_spec);
  if (k < 0 || k >= s.size())
    throw std::invalid_argument("k is not a semiring element id");
  AcceptSpec spec;
  spec.kind = kind == "l0" ? AcceptSpec::Kind::L0 : AcceptSpec::Kind::Qk;
  spec.p = rec.accepting;
  spec.k = k;
  emit(diamond_to_json(::diamond::diamond(rec, s, std::move(spec))), output_path);
  return 0;
}

int run_member(const std::string& rec_path, const std::string& word_text) {
  const json j = load_json_file(rec_path);
  bool accepted;
  std::string image;
  if (j.contains("type") && j["type"] == "diamond") {
    const DiamondRecogniser d = diamond_from_json(j);
    const Word w = parse_word(word_text, d.alphabet);
    const DiamondElement e = d.eval(w);
    accepted = d.accepts_element(e);
    image = "(" + format_vec(e.f, d.dm.sr) + ", " + std::to_string(e.m) + ")";
  } else {
    const Recogniser r = recogniser_from_json(j);
    const Word w = parse_word(word_text, r.morphism.alphabet);
    const int m = r.morphism.eval(w);
    accepted = r.accepting[m] != 0;
    image = std::to_string(m);
  }
  std::cout << (accepted ? "accept" : "reject") << " (image " << image << ")\n";
  return accepted ? 0 : 1;
}

int run_verify(const std::string& suite, unsigned seed, int max_len,
               const std::string& output_path) {
  std::vector<SuiteReport> reports;
  if (suite == "all") {
    reports = verify_all(seed, max_len);
  } else if (suite == "laws") {
    reports.push_back(verify_laws(seed));
  } else if (suite == "measures") {
    reports.push_back(verify_measures());
  } else if (suite == "oracle") {
    reports.push_back(verify_oracle(seed, max_len, 20));
  } else if (suite == "duality") {
    reports.push_back(verify_duality());
    reports.push_back(verify_quotients());
  } else if (suite == "quotients") {
    reports.push_back(verify_quotients());
  } else if (suite == "reutenauer") {
    reports.push_back(verify_reutenauer());
  } else if (suite == "lengthpres") {
    reports.push_back(verify_lengthpres(seed));
  } else {
    throw CLI::ValidationError("--suite", "unknown suite: " + suite);
  }
  std::sort(reports.begin(), reports.end(),
            [](const SuiteReport& a, const SuiteReport& b) {
              return a.name < b.name;
            });
  long long checked = 0;
  size_t failures = 0;
  json suites = json::array();
  for (const SuiteReport& r : reports) {
    checked += r.checked;
    failures += r.failures.size();
    suites.push_back(report_to_json(r));
  }
  json report = {{"seed", seed},
                 {"max_len", max_len},
                 {"checked", checked},
                 {"failures_total", failures},
                 {"suites", suites}};
  emit(report, output_path);
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantifier recognisers over finite semirings"};
  app.require_subcommand(1);

  std::string dfa_path, rec_path, semiring_spec = "bool2", word_text;
  std::string suite = "all", output_path, kind = "qk";
  int k = 0;
  unsigned seed = 12345;
  int max_len = 8;

  auto* synmon = app.add_subcommand(
      "synmon", "Syntactic-monoid recogniser of a DFA language");
  synmon->add_option("dfa", dfa_path, "DFA JSON file")->required();
  synmon->add_option("--output", output_path, "write JSON here instead of stdout");

  auto* quantify = app.add_subcommand(
      "quantify", "Quantified recogniser over a marked-alphabet recogniser");
  quantify->add_option("--recogniser", rec_path, "recogniser JSON file")
      ->required();
  quantify->add_option("--semiring", semiring_spec,
                       "semiring: bool2, zq:Q, or a JSON file");
  quantify->add_option("--k", k, "accepting semiring element id");
  quantify->add_option("--kind", kind, "accepting kind: qk or l0")
      ->check(CLI::IsMember({"qk", "l0"}));
  quantify->add_option("--output", output_path, "write JSON here instead of stdout");

  auto* member = app.add_subcommand("member", "Membership query");
  member->add_option("--recogniser", rec_path, "recogniser JSON file")
      ->required();
  member->add_option("--word", word_text, "query word (empty for epsilon)");

  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("--suite", suite,
                     "laws|measures|duality|oracle|reutenauer|quotients|"
                     "lengthpres|all");
  verify->add_option("--seed", seed, "RNG seed");
  verify->add_option("--max-len", max_len, "word-length bound for the oracle suite");
  verify->add_option("--output", output_path, "write the report here instead of stdout");

  try {
    app.parse(argc, argv);
    if (synmon->parsed()) return run_synmon(dfa_path, output_path);
    if (quantify->parsed())
      return run_quantify(rec_path, semiring_spec, k, kind, output_path);
    if (member->parsed()) return run_member(rec_path, word_text);
    return run_verify(suite, seed, max_len, output_path);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
