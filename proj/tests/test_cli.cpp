#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "cs/model.hpp"
#include "cs/proofgraph.hpp"
#include "cs/serialize.hpp"
#include "doctest.h"

namespace {

struct RunResult {
  int status = -1;
  std::string out;
};

// Runs the installed binary with the given arguments, capturing stdout.
RunResult run(const std::string& args) {
  std::string tmp = std::string(CSPROVE_BIN) + ".out.tmp";
  std::string cmd = std::string(CSPROVE_BIN) + " " + args + " > " + tmp + " 2>/dev/null";
  int raw = std::system(cmd.c_str());
  RunResult r;
  r.status = WEXITSTATUS(raw);
  std::ifstream in(tmp);
  std::stringstream buf;
  buf << in.rdbuf();
  r.out = buf.str();
  std::remove(tmp.c_str());
  return r;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("decide exit codes") {
  CHECK(run("decide 'p -> p'").status == 0);
  CHECK(run("decide '[b]([b]p -> p) -> [b]p'").status == 0);
  CHECK(run("decide '[d]p -> [b]p'").status == 1);
  CHECK(run("decide 'p ->'").status == 2);      // syntax error
  CHECK(run("decide").status == 2);             // missing argument
  CHECK(run("frobnicate").status == 2);         // unknown subcommand
}

TEST_CASE("decide prints the verdict") {
  CHECK(run("decide 'p -> p'").out == "PROVED\n");
  CHECK(run("decide 'p'").out == "REFUTED\n");
}

TEST_CASE("emitted proofs pass the checker") {
  std::string path = "cli_proof.json";
  auto r = run("decide '[b]([b]p -> p) -> [d][b]p' --proof-out " + path);
  REQUIRE(r.status == 0);
  cs::ProofGraph g = cs::proof_graph_from_json(cs::Json::parse(slurp(path)));
  CHECK(cs::check_proof(g) == std::nullopt);

  auto check = run("check --proof " + path);
  CHECK(check.status == 0);
  CHECK(check.out == "OK\n");
  std::remove(path.c_str());
}

TEST_CASE("check rejects a tampered proof") {
  std::string path = "cli_proof_bad.json";
  REQUIRE(run("decide 'p -> p' --proof-out " + path).status == 0);
  cs::Json j = cs::Json::parse(slurp(path));
  j["nodes"][0]["rule"]["rule"] = "ImpL";
  std::ofstream(path) << j.dump();
  auto r = run("check --proof " + path);
  CHECK(r.status == 1);
  CHECK(r.out.find("REJECTED") == 0);
  std::remove(path.c_str());
}

TEST_CASE("emitted countermodels are well formed and falsify the input") {
  std::string path = "cli_model.json";
  auto r = run("decide '[d]p -> [b]p' --model-out " + path + " --dot");
  REQUIRE(r.status == 1);
  cs::CarlsonModel m = cs::model_from_json(cs::Json::parse(slurp(path)));
  CHECK(cs::validate_model(m) == std::nullopt);
  bool falsified = false;
  for (const cs::WorldId& w : m.worlds)
    if (!cs::forces(m, w, cs::parse_formula("[d]p -> [b]p"))) falsified = true;
  CHECK(falsified);
  CHECK(slurp(path + ".dot").find("digraph") == 0);
  std::remove(path.c_str());
  std::remove((path + ".dot").c_str());
}

TEST_CASE("sequent JSON input") {
  std::string path = "cli_sequent.json";
  cs::Sequent s;
  s.rels = {{cs::Label{0}, cs::RelKind::R, cs::Label{1}}};
  s.left = {{cs::Label{0}, cs::parse_formula("[b]p")}};
  s.right = {{cs::Label{1}, cs::parse_formula("p")}};
  std::ofstream(path) << cs::to_json(s).dump();
  CHECK(run("decide --sequent " + path).status == 0);
  std::remove(path.c_str());
}

TEST_CASE("corpus subcommand reports all entries and exits 0") {
  std::string path = "cli_corpus.jsonl";
  auto r = run("corpus --out " + path);
  CHECK(r.status == 0);
  CHECK(r.out.find("MISMATCH") == std::string::npos);
  std::istringstream lines(slurp(path));
  std::string line;
  int n = 0;
  while (std::getline(lines, line)) {
    cs::Json j = cs::Json::parse(line);
    CHECK(j.contains("name"));
    CHECK(j.contains("formula"));
    CHECK(j.contains("expected"));
    ++n;
  }
  CHECK(n == 14);
  std::remove(path.c_str());
}

TEST_CASE("small sweep agrees with the oracle") {
  auto r = run("sweep --max-nodes 4 --oracle-bound 3");
  CHECK(r.status == 1);  // some formulas are refutable
  CHECK(r.out.find("MISMATCH") == std::string::npos);
  CHECK(r.out.find("0 mismatches") != std::string::npos);
}

TEST_CASE("output is byte-identical across runs") {
  std::string a = "cli_det_a.json", b = "cli_det_b.json";
  REQUIRE(run("decide '[b]([b]p -> p) -> [b]p' --proof-out " + a).status == 0);
  REQUIRE(run("decide '[b]([b]p -> p) -> [b]p' --proof-out " + b).status == 0);
  CHECK(slurp(a) == slurp(b));
  std::remove(a.c_str());
  std::remove(b.c_str());
}
