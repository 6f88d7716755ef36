// Command-line front end for the CS decision procedure.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "cs/corpus.hpp"
#include "cs/search.hpp"
#include "cs/serialize.hpp"

namespace {

constexpr int kExitProved = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << content;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

struct DecideOptions {
  std::string input;
  bool sequent_input = false;
  std::string proof_out;
  std::string model_out;
  bool dot = false;
  long long max_steps = -1;
  bool trace = false;
};

int run_decide(const DecideOptions& opt) {
  cs::SearchConfig config;
  if (opt.max_steps >= 0) config.max_steps = static_cast<unsigned long long>(opt.max_steps);
  config.trace = opt.trace;
  config.trace_out = &std::cerr;

  cs::Sequent root;
  if (opt.sequent_input) {
    root = cs::sequent_from_json(cs::Json::parse(read_file(opt.input)));
  } else {
    root.right.insert({cs::Label{0}, cs::parse_formula(opt.input)});
  }

  cs::Verdict verdict = cs::decide(root, config);
  if (verdict.proved()) {
    std::cout << "PROVED\n";
    if (!opt.proof_out.empty())
      write_file(opt.proof_out, cs::to_json(verdict.proof()).dump(2) + "\n");
    return kExitProved;
  }
  std::cout << "REFUTED\n";
  if (!opt.model_out.empty()) {
    write_file(opt.model_out, cs::to_json(verdict.refutation().model).dump(2) + "\n");
    if (opt.dot) write_file(opt.model_out + ".dot", cs::to_dot(verdict.refutation().model));
  }
  return kExitRefuted;
}

int run_check(const std::string& path) {
  cs::ProofGraph g = cs::proof_graph_from_json(cs::Json::parse(read_file(path)));
  if (auto err = cs::check_proof(g)) {
    std::cout << "REJECTED node " << err->node << ": " << err->reason << "\n";
    return kExitRefuted;
  }
  std::cout << "OK\n";
  return kExitProved;
}

int run_corpus(const std::string& out_path) {
  int mismatches = 0;
  std::string lines;
  for (const cs::CorpusEntry& entry : cs::standard_corpus()) {
    cs::Json j;
    j["name"] = entry.name;
    j["formula"] = cs::print_formula(entry.formula);
    j["expected"] = entry.provable ? "provable" : "refutable";
    lines += j.dump() + "\n";

    cs::Verdict verdict = cs::decide_formula(entry.formula);
    bool ok = verdict.proved() == entry.provable;
    if (!ok) ++mismatches;
    std::cout << entry.name << ": expected "
              << (entry.provable ? "provable" : "refutable") << ", got "
              << (verdict.proved() ? "proved" : "refuted") << (ok ? "" : "  MISMATCH") << "\n";
  }
  if (!out_path.empty()) write_file(out_path, lines);
  if (mismatches > 0) {
    std::cerr << mismatches << " corpus mismatches\n";
    return kExitInternal;
  }
  return kExitProved;
}

int run_sweep(const std::vector<std::string>& atoms, int max_nodes, int oracle_bound) {
  int mismatches = 0, refuted = 0, proved = 0;
  for (const cs::Formula& f : cs::enumerate_formulas(atoms, max_nodes)) {
    cs::Verdict verdict = cs::decide_formula(f);
    if (verdict.proved()) {
      ++proved;
      if (cs::refute_semantic(f, oracle_bound)) {
        ++mismatches;
        std::cout << "MISMATCH proved but oracle refutes: " << cs::print_formula(f) << "\n";
      }
    } else {
      ++refuted;
      const cs::Refutation& r = verdict.refutation();
      const cs::WorldId& w = r.interpretation.assignment.at(cs::Label{0});
      if (cs::forces(r.model, w, f)) {
        ++mismatches;
        std::cout << "MISMATCH refuted but model forces root: " << cs::print_formula(f) << "\n";
      }
    }
  }
  std::cout << proved << " proved, " << refuted << " refuted, " << mismatches
            << " mismatches\n";
  if (mismatches > 0) return kExitInternal;
  return refuted > 0 ? kExitRefuted : kExitProved;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decision procedure for the bimodal provability logic CS"};
  app.require_subcommand(1);

  DecideOptions decide_opt;
  CLI::App* decide = app.add_subcommand("decide", "Decide a formula or a sequent JSON file");
  decide->add_option("input", decide_opt.input, "formula text, or a sequent JSON file with --sequent")
      ->required();
  decide->add_flag("--sequent", decide_opt.sequent_input, "treat input as a sequent JSON file");
  decide->add_option("--proof-out", decide_opt.proof_out, "write the proof graph JSON here");
  decide->add_option("--model-out", decide_opt.model_out, "write the countermodel JSON here");
  decide->add_flag("--dot", decide_opt.dot, "also write <model-out>.dot");
  decide->add_option("--max-steps", decide_opt.max_steps, "override the per-branch safety cap");
  decide->add_flag("--trace", decide_opt.trace, "line-delimited JSON search log on stderr");

  std::string proof_path;
  CLI::App* check = app.add_subcommand("check", "Check a proof graph JSON file");
  check->add_option("--proof", proof_path, "proof graph JSON file")->required();

  std::string corpus_out;
  CLI::App* corpus = app.add_subcommand("corpus", "Run the standard corpus");
  corpus->add_option("--out", corpus_out, "write the corpus as line-delimited JSON");

  std::vector<std::string> atoms{"p"};
  int max_nodes = 6, oracle_bound = 3;
  CLI::App* sweep = app.add_subcommand("sweep", "Oracle agreement over all small formulas");
  sweep->add_option("--atoms", atoms, "atom names to enumerate over");
  sweep->add_option("--max-nodes", max_nodes, "maximum AST node count");
  sweep->add_option("--oracle-bound", oracle_bound, "world bound for the semantic oracle");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*decide) return run_decide(decide_opt);
    if (*check) return run_check(proof_path);
    if (*corpus) return run_corpus(corpus_out);
    if (*sweep) return run_sweep(atoms, max_nodes, oracle_bound);
  } catch (const cs::ParseError& e) {
    std::cerr << "syntax error at byte " << e.offset << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const cs::BudgetExceeded& e) {
    std::cerr << "internal: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}
