#include "cs/corpus.hpp"

namespace cs {

std::vector<Formula> axiom_instances(const Formula& a, const Formula& b) {
  auto F = Formula::imp;
  auto B = Formula::box;
  auto T = Formula::tri;
  return {
      F(B(F(a, b)), F(B(a), B(b))),  // K box
      F(B(F(B(a), a)), B(a)),        // L box (Loeb)
      F(B(a), T(B(a))),              // box A -> tri box A
      F(T(F(a, b)), F(T(a), T(b))),  // K tri
      F(T(F(T(a), a)), T(a)),        // L tri
      F(T(a), B(T(a))),              // tri A -> box tri A
  };
}

std::vector<CorpusEntry> standard_corpus() {
  Formula p = Formula::atom("p");
  Formula q = Formula::atom("q");
  auto axioms = axiom_instances(p, q);
  std::vector<CorpusEntry> out = {
      {"k_box", axioms[0], true},
      {"l_box", axioms[1], true},
      {"box_to_tri_box", axioms[2], true},
      {"k_tri", axioms[3], true},
      {"l_tri", axioms[4], true},
      {"tri_to_box_tri", axioms[5], true},
      {"four_box", parse_formula("[b]p -> [b][b]p"), true},
      {"four_tri", parse_formula("[d]p -> [d][d]p"), true},
      {"mixed_loeb", parse_formula("[b]([b]p -> p) -> [d][b]p"), true},
      {"mix_down", parse_formula("[d]p -> [b]p"), false},
      {"mix_up", parse_formula("[b]p -> [d]p"), false},
      {"necessitation_formula", parse_formula("p -> [b]p"), false},
      {"reflection", parse_formula("[b]p -> p"), false},
      {"tri_to_tri_box", parse_formula("[d]p -> [d][b]p"), false},
  };
  return out;
}

namespace {

void enumerate_sized(const std::vector<std::string>& atoms, int nodes,
                     std::vector<std::vector<Formula>>& by_size) {
  std::vector<Formula>& out = by_size[nodes];
  if (nodes == 1) {
    out.push_back(Formula::bot());
    for (const std::string& a : atoms) out.push_back(Formula::atom(a));
    return;
  }
  for (const Formula& f : by_size[nodes - 1]) {
    out.push_back(Formula::box(f));
    out.push_back(Formula::tri(f));
  }
  for (int l = 1; l <= nodes - 2; ++l)
    for (const Formula& lhs : by_size[l])
      for (const Formula& rhs : by_size[nodes - 1 - l])
        out.push_back(Formula::imp(lhs, rhs));
}

}  // namespace

std::vector<Formula> enumerate_formulas(const std::vector<std::string>& atoms, int max_nodes) {
  std::vector<std::vector<Formula>> by_size(max_nodes + 1);
  std::vector<Formula> out;
  for (int n = 1; n <= max_nodes; ++n) {
    enumerate_sized(atoms, n, by_size);
    out.insert(out.end(), by_size[n].begin(), by_size[n].end());
  }
  return out;
}

}  // namespace cs
