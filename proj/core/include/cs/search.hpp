#pragma once

#include <iosfwd>
#include <variant>

#include "cs/model.hpp"
#include "cs/proofgraph.hpp"

namespace cs {

struct SearchConfig {
  /// Overrides the per-branch safety cap on label-phase expansions.
  std::optional<unsigned long long> max_steps;
  /// Emit line-delimited JSON search events to trace_out.
  bool trace = false;
  std::ostream* trace_out = nullptr;
};

/// Raised when the safety cap is hit. Signals an implementation bug, never a
/// logical outcome.
struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Refutation {
  CarlsonModel model;
  Interpretation interpretation;  // identity on the leaf's labels
  Sequent leaf;                   // the fully saturated leaf
};

/// Outcome of the decision procedure: a checked cyclic proof or a finite
/// countermodel falsifying the root.
class Verdict {
public:
  explicit Verdict(ProofGraph g) : value_(std::move(g)) {}
  explicit Verdict(Refutation r) : value_(std::move(r)) {}

  bool proved() const { return std::holds_alternative<ProofGraph>(value_); }
  const ProofGraph& proof() const { return std::get<ProofGraph>(value_); }
  const Refutation& refutation() const { return std::get<Refutation>(value_); }

private:
  std::variant<ProofGraph, Refutation> value_;
};

/// Alternating saturation/label-phase proof search with eager Id/Bot, made
/// finite by signature-based loop checking. Proved verdicts are re-validated
/// by check_proof before being returned; Refuted verdicts falsify the root.
Verdict decide(const Sequent& root, const SearchConfig& config = {});

/// decide on the sequent "=> x0 : f".
Verdict decide_formula(const Formula& f, const SearchConfig& config = {});

}  // namespace cs
