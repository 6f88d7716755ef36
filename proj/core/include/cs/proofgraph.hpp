#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cs/calculus.hpp"

namespace cs {

using NodeId = int;

struct ProofNode {
  Sequent sequent;
  std::optional<RuleInstance> rule;  // absent on back-edge leaves
  std::vector<NodeId> children;
};

/// Cyclic edge from a leaf back to a strict ancestor. Applying the renaming
/// to the ancestor's sequent must yield a subset of the leaf's sequent; the
/// pivot (a, x) names the ancestor label and its repetition, certifying the
/// progressing trace through the cycle.
struct BackEdge {
  NodeId target = 0;
  std::map<Label, Label> renaming;  // identity where unmapped
  std::pair<Label, Label> pivot;
};

/// Regular (finite, possibly cyclic) proof object.
struct ProofGraph {
  std::vector<ProofNode> nodes;
  NodeId root = 0;
  std::map<NodeId, BackEdge> back_edges;  // keyed by source leaf
};

struct CheckError {
  NodeId node = 0;
  std::string reason;
};

/// nullopt means the check passed.
using CheckResult = std::optional<CheckError>;

/// Rule-level validity: every internal node carries a legal rule instance
/// whose premises match its children exactly (freshness included), every
/// leaf is closed by Id/Bot or a back-edge, and every back-edge satisfies
/// the renamed-subset condition against its target.
CheckResult check_local(const ProofGraph& g);

/// Progress condition: every back-edge pivot (a, x) has a (R|S)+ x in the
/// source sequent and at least one BoxR/TriR on the tree path from target
/// to source, so each traversal of the cycle descends the pivot chain.
CheckResult check_progress(const ProofGraph& g);

/// check_local and check_progress combined.
CheckResult check_proof(const ProofGraph& g);

}  // namespace cs
