#pragma once

#include <vector>

#include "cs/formula.hpp"

namespace cs {

struct CorpusEntry {
  std::string name;
  Formula formula;
  bool provable = false;
};

/// The six axiom schemas instantiated with A := a, B := b:
/// K/L/4 for [b] followed by their [d] duals.
std::vector<Formula> axiom_instances(const Formula& a, const Formula& b);

/// Canonical inputs: the six axiom instances over p, q, the two derived
/// 4-style theorems, the mixed-modality theorem from the worked example, and
/// five oracle-certified non-theorems.
std::vector<CorpusEntry> standard_corpus();

/// All formulas over the given atoms with at most max_nodes AST nodes,
/// smallest first, deterministic order.
std::vector<Formula> enumerate_formulas(const std::vector<std::string>& atoms, int max_nodes);

}  // namespace cs
