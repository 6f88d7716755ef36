#include "cs/calculus.hpp"

#include <algorithm>

namespace cs {

namespace {

Principal formula_principal(Label x, Formula f) {
  return Principal{LabelledFormula{x, std::move(f)}, std::nullopt, {}};
}

}  // namespace

std::vector<std::pair<RuleName, Principal>> applicable(const Sequent& s) {
  std::vector<std::pair<RuleName, Principal>> out;

  // Id / Bot whenever the pattern matches.
  for (const LabelledFormula& lf : s.left)
    if (lf.formula.is(Conn::Atom) && s.right.count(lf) > 0)
      out.emplace_back(RuleName::Id, formula_principal(lf.label, lf.formula));
  for (const LabelledFormula& lf : s.left)
    if (lf.formula.is(Conn::Bot)) {
      Principal p = formula_principal(lf.label, lf.formula);
      p.side = Side::Left;
      out.emplace_back(RuleName::Bot, p);
    }

  // Trans: one application per missing composition.
  for (const RelAtom& a : s.rels)
    for (const RelAtom& b : s.rels)
      if (a.dst == b.src && !s.has_rel(a.src, b.kind, b.dst))
        out.emplace_back(trans_rule(a.kind, b.kind), Principal{std::nullopt, std::nullopt, {a, b}});

  // BoxL/TriL: one application per (x:[b]A, xRy) pair with y:A still absent.
  for (const LabelledFormula& lf : s.left) {
    if (!lf.formula.is(Conn::Box) && !lf.formula.is(Conn::Tri)) continue;
    RelKind kind = lf.formula.is(Conn::Box) ? RelKind::R : RelKind::S;
    RuleName rule = lf.formula.is(Conn::Box) ? RuleName::BoxL : RuleName::TriL;
    for (const RelAtom& a : s.rels) {
      if (a.src != lf.label || a.kind != kind) continue;
      if (s.in_left(a.dst, lf.formula.body())) continue;
      Principal p = formula_principal(lf.label, lf.formula);
      p.side = Side::Left;
      p.rels = {a};
      out.emplace_back(rule, p);
    }
  }

  // ImpL / ImpR on unsaturated implications.
  for (const LabelledFormula& lf : s.left)
    if (lf.formula.is(Conn::Imp) && !formula_saturated(s, lf, Side::Left)) {
      Principal p = formula_principal(lf.label, lf.formula);
      p.side = Side::Left;
      out.emplace_back(RuleName::ImpL, p);
    }
  for (const LabelledFormula& lf : s.right)
    if (lf.formula.is(Conn::Imp) && !formula_saturated(s, lf, Side::Right)) {
      Principal p = formula_principal(lf.label, lf.formula);
      p.side = Side::Right;
      out.emplace_back(RuleName::ImpR, p);
    }

  // BoxR / TriR on every right modal occurrence.
  for (const LabelledFormula& lf : s.right)
    if (lf.formula.is(Conn::Box) || lf.formula.is(Conn::Tri)) {
      Principal p = formula_principal(lf.label, lf.formula);
      p.side = Side::Right;
      out.emplace_back(lf.formula.is(Conn::Box) ? RuleName::BoxR : RuleName::TriR, p);
    }

  return out;
}

namespace {

[[noreturn]] void reject(const std::string& msg) { throw std::invalid_argument(msg); }

void require_applicable(const Sequent& s, RuleName name, const Principal& principal) {
  auto options = applicable(s);
  for (const auto& [r, p] : options)
    if (r == name && p == principal) return;
  reject("rule " + to_string(name) + " is not applicable with this principal");
}

}  // namespace

RuleInstance apply(const Sequent& s, RuleName name, const Principal& principal,
                   std::optional<Label> fresh) {
  bool wants_fresh = name == RuleName::BoxR || name == RuleName::TriR;
  if (wants_fresh != fresh.has_value())
    reject(wants_fresh ? "missing fresh label" : "unexpected fresh label");
  if (fresh && labels_of(s).count(*fresh) > 0)
    reject("fresh label occurs in the conclusion");
  require_applicable(s, name, principal);

  RuleInstance inst{name, s, principal, fresh, {}};
  switch (name) {
    case RuleName::Id:
    case RuleName::Bot:
      break;  // no premises

    case RuleName::ImpR: {
      const LabelledFormula& occ = *principal.formula;
      Sequent p = s;
      p.right.erase(occ);
      p.left.insert({occ.label, occ.formula.left()});
      p.right.insert({occ.label, occ.formula.right()});
      inst.premises.push_back(std::move(p));
      break;
    }

    case RuleName::ImpL: {
      const LabelledFormula& occ = *principal.formula;
      Sequent p1 = s;
      p1.left.erase(occ);
      p1.right.insert({occ.label, occ.formula.left()});
      Sequent p2 = s;
      p2.left.erase(occ);
      p2.left.insert({occ.label, occ.formula.right()});
      inst.premises.push_back(std::move(p1));
      inst.premises.push_back(std::move(p2));
      break;
    }

    case RuleName::BoxR:
    case RuleName::TriR: {
      const LabelledFormula& occ = *principal.formula;
      RelKind kind = name == RuleName::BoxR ? RelKind::R : RelKind::S;
      Sequent p = s;
      p.right.erase(occ);
      p.rels.insert({occ.label, kind, *fresh});
      p.right.insert({*fresh, occ.formula.body()});
      inst.premises.push_back(std::move(p));
      break;
    }

    case RuleName::BoxL:
    case RuleName::TriL: {
      const LabelledFormula& occ = *principal.formula;
      const RelAtom& edge = principal.rels.at(0);
      Sequent p = s;
      p.left.insert({edge.dst, occ.formula.body()});
      inst.premises.push_back(std::move(p));
      break;
    }

    case RuleName::TransRR:
    case RuleName::TransRS:
    case RuleName::TransSR:
    case RuleName::TransSS: {
      const RelAtom& a = principal.rels.at(0);
      const RelAtom& b = principal.rels.at(1);
      Sequent p = s;
      p.rels.insert({a.src, b.kind, b.dst});
      inst.premises.push_back(std::move(p));
      break;
    }
  }
  return inst;
}

bool trace_step(const Sequent& s1, const Sequent&, Label x1, Label x2) {
  if (x1 == x2) return true;
  return s1.has_rel(x1, RelKind::R, x2) || s1.has_rel(x1, RelKind::S, x2);
}

}  // namespace cs
