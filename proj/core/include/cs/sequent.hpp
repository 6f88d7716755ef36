#pragma once

#include <compare>
#include <optional>
#include <set>
#include <string>

#include "cs/formula.hpp"

namespace cs {

/// World label. Ids are allocated in increasing order by the search and
/// never reused; printed as "x<N>".
struct Label {
  int id = 0;
  auto operator<=>(const Label&) const = default;
};

std::string to_string(Label x);
Label parse_label(const std::string& s);  // "x<N>"; throws std::invalid_argument

enum class RelKind { R, S };

std::string to_string(RelKind k);

/// Relational atom xRy or xSy.
struct RelAtom {
  Label src;
  RelKind kind = RelKind::R;
  Label dst;
  auto operator<=>(const RelAtom&) const = default;
};

struct LabelledFormula {
  Label label;
  Formula formula;
  auto operator<=>(const LabelledFormula&) const = default;
};

enum class Side { Left, Right };

/// Labelled sequent: relational atoms plus labelled formulas on both sides.
/// Represented with sets; saturation conditions are membership based, so
/// duplicates are never needed.
struct Sequent {
  std::set<RelAtom> rels;
  std::set<LabelledFormula> left;
  std::set<LabelledFormula> right;
  auto operator<=>(const Sequent&) const = default;

  bool in_left(Label x, const Formula& f) const { return left.count({x, f}) > 0; }
  bool in_right(Label x, const Formula& f) const { return right.count({x, f}) > 0; }
  bool has_rel(Label x, RelKind k, Label y) const { return rels.count({x, k, y}) > 0; }
};

/// Names of the inference rules of the calculus.
enum class RuleName {
  Id,
  Bot,
  ImpR,
  ImpL,
  BoxR,
  BoxL,
  TriR,
  TriL,
  TransRR,
  TransRS,
  TransSR,
  TransSS,
};

std::string to_string(RuleName r);
std::optional<RuleName> rule_from_string(const std::string& s);

bool is_trans(RuleName r);
RuleName trans_rule(RelKind first, RelKind second);
RelKind trans_first(RuleName r);
RelKind trans_second(RuleName r);

/// Labels occurring anywhere in the sequent.
std::set<Label> labels_of(const Sequent& s);

/// Id if some atom x:p occurs on both sides (atoms only), Bot if some
/// x:bot occurs on the left, otherwise nothing.
std::optional<RuleName> is_initial(const Sequent& s);

/// Saturation condition for one formula occurrence. Right-side box/triangle
/// occurrences are never saturated by this predicate; the label phase owns
/// them.
bool formula_saturated(const Sequent& s, const LabelledFormula& occ, Side side);

/// Closure of the relational atoms under the four trans rules: for x(o)y and
/// y(*)z, x(*)z must be present (kind taken from the second atom).
bool trans_saturated(const Sequent& s);

/// Least superset of rels closed per trans_saturated.
std::set<RelAtom> trans_closure(const std::set<RelAtom>& rels);

/// No right-side box/triangle occurrence pending.
bool label_saturated(const Sequent& s);

/// Saturated, label saturated, and neither Id nor Bot applies: the
/// countermodel-bearing leaves of failed proof search.
bool is_fully_saturated(const Sequent& s);

}  // namespace cs
