#include "cs/sequent.hpp"

#include <cctype>

namespace cs {

std::string to_string(Label x) { return "x" + std::to_string(x.id); }

Label parse_label(const std::string& s) {
  if (s.size() < 2 || s[0] != 'x')
    throw std::invalid_argument("bad label: " + s);
  for (std::size_t i = 1; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw std::invalid_argument("bad label: " + s);
  return Label{std::stoi(s.substr(1))};
}

std::string to_string(RelKind k) { return k == RelKind::R ? "R" : "S"; }

std::string to_string(RuleName r) {
  switch (r) {
    case RuleName::Id: return "Id";
    case RuleName::Bot: return "Bot";
    case RuleName::ImpR: return "ImpR";
    case RuleName::ImpL: return "ImpL";
    case RuleName::BoxR: return "BoxR";
    case RuleName::BoxL: return "BoxL";
    case RuleName::TriR: return "TriR";
    case RuleName::TriL: return "TriL";
    case RuleName::TransRR: return "TransRR";
    case RuleName::TransRS: return "TransRS";
    case RuleName::TransSR: return "TransSR";
    case RuleName::TransSS: return "TransSS";
  }
  return "?";
}

std::optional<RuleName> rule_from_string(const std::string& s) {
  for (RuleName r : {RuleName::Id, RuleName::Bot, RuleName::ImpR, RuleName::ImpL,
                     RuleName::BoxR, RuleName::BoxL, RuleName::TriR, RuleName::TriL,
                     RuleName::TransRR, RuleName::TransRS, RuleName::TransSR,
                     RuleName::TransSS})
    if (to_string(r) == s) return r;
  return std::nullopt;
}

bool is_trans(RuleName r) {
  return r == RuleName::TransRR || r == RuleName::TransRS || r == RuleName::TransSR ||
         r == RuleName::TransSS;
}

RuleName trans_rule(RelKind first, RelKind second) {
  if (first == RelKind::R)
    return second == RelKind::R ? RuleName::TransRR : RuleName::TransRS;
  return second == RelKind::R ? RuleName::TransSR : RuleName::TransSS;
}

RelKind trans_first(RuleName r) {
  return (r == RuleName::TransRR || r == RuleName::TransRS) ? RelKind::R : RelKind::S;
}

RelKind trans_second(RuleName r) {
  return (r == RuleName::TransRR || r == RuleName::TransSR) ? RelKind::R : RelKind::S;
}

std::set<Label> labels_of(const Sequent& s) {
  std::set<Label> out;
  for (const RelAtom& a : s.rels) {
    out.insert(a.src);
    out.insert(a.dst);
  }
  for (const LabelledFormula& lf : s.left) out.insert(lf.label);
  for (const LabelledFormula& lf : s.right) out.insert(lf.label);
  return out;
}

std::optional<RuleName> is_initial(const Sequent& s) {
  for (const LabelledFormula& lf : s.left)
    if (lf.formula.is(Conn::Atom) && s.right.count(lf) > 0) return RuleName::Id;
  for (const LabelledFormula& lf : s.left)
    if (lf.formula.is(Conn::Bot)) return RuleName::Bot;
  return std::nullopt;
}

bool formula_saturated(const Sequent& s, const LabelledFormula& occ, Side side) {
  const Formula& f = occ.formula;
  Label x = occ.label;
  switch (f.conn()) {
    case Conn::Bot:
    case Conn::Atom:
      return true;
    case Conn::Imp:
      if (side == Side::Left)
        return s.in_right(x, f.left()) || s.in_left(x, f.right());
      return s.in_left(x, f.left()) && s.in_right(x, f.right());
    case Conn::Box:
      if (side == Side::Right) return false;
      for (const RelAtom& a : s.rels)
        if (a.src == x && a.kind == RelKind::R && !s.in_left(a.dst, f.body())) return false;
      return true;
    case Conn::Tri:
      if (side == Side::Right) return false;
      for (const RelAtom& a : s.rels)
        if (a.src == x && a.kind == RelKind::S && !s.in_left(a.dst, f.body())) return false;
      return true;
  }
  return true;
}

bool trans_saturated(const Sequent& s) {
  for (const RelAtom& a : s.rels)
    for (const RelAtom& b : s.rels)
      if (a.dst == b.src && !s.has_rel(a.src, b.kind, b.dst)) return false;
  return true;
}

std::set<RelAtom> trans_closure(const std::set<RelAtom>& rels) {
  std::set<RelAtom> out = rels;
  bool changed = true;
  while (changed) {
    changed = false;
    std::set<RelAtom> added;
    for (const RelAtom& a : out)
      for (const RelAtom& b : out)
        if (a.dst == b.src && out.count({a.src, b.kind, b.dst}) == 0)
          added.insert({a.src, b.kind, b.dst});
    if (!added.empty()) {
      out.insert(added.begin(), added.end());
      changed = true;
    }
  }
  return out;
}

bool label_saturated(const Sequent& s) {
  for (const LabelledFormula& lf : s.right)
    if (lf.formula.is(Conn::Box) || lf.formula.is(Conn::Tri)) return false;
  return true;
}

bool is_fully_saturated(const Sequent& s) {
  if (is_initial(s)) return false;
  if (!label_saturated(s)) return false;
  if (!trans_saturated(s)) return false;
  for (const LabelledFormula& lf : s.left)
    if (!formula_saturated(s, lf, Side::Left)) return false;
  for (const LabelledFormula& lf : s.right) {
    if (lf.formula.is(Conn::Box) || lf.formula.is(Conn::Tri)) continue;  // label phase
    if (!formula_saturated(s, lf, Side::Right)) return false;
  }
  return true;
}

}  // namespace cs
