#pragma once

#include <optional>
#include <vector>

#include "cs/sequent.hpp"

namespace cs {

/// Principal occurrence of a rule application: a labelled formula with its
/// side (Id/Bot/ImpL/ImpR/BoxL/BoxR/TriL/TriR), plus the relational atoms it
/// consumes (one for BoxL/TriL, the two composed atoms for trans).
struct Principal {
  std::optional<LabelledFormula> formula;
  std::optional<Side> side;
  std::vector<RelAtom> rels;
  auto operator<=>(const Principal&) const = default;
};

struct RuleInstance {
  RuleName name = RuleName::Id;
  Sequent conclusion;
  Principal principal;
  std::optional<Label> fresh;  // BoxR/TriR only
  std::vector<Sequent> premises;
};

/// All (rule, principal) pairs applicable to s. For ImpL/ImpR/BoxL/TriL and
/// the trans rules the principal must be unsaturated, so applying the rule
/// adds new material; Id/Bot are listed whenever their pattern matches.
/// The returned order is deterministic.
std::vector<std::pair<RuleName, Principal>> applicable(const Sequent& s);

/// Builds the premises for one rule application, exactly following the rule
/// shapes of the calculus. fresh must be given for BoxR/TriR (and must not
/// occur in s), and must be absent otherwise. Throws std::invalid_argument
/// if (name, principal) is not applicable to s or the freshness side
/// condition fails.
RuleInstance apply(const Sequent& s, RuleName name, const Principal& principal,
                   std::optional<Label> fresh);

/// One step of a trace between a conclusion s1 and a premise s2: the labels
/// are equal or related by a relational atom of s1.
bool trace_step(const Sequent& s1, const Sequent& s2, Label x1, Label x2);

}  // namespace cs
