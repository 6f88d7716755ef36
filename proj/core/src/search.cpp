#include "cs/search.hpp"

#include <algorithm>
#include <ostream>
#include <queue>

namespace cs {

namespace {

using Signature = std::pair<std::set<Formula>, std::set<Formula>>;

Signature signature_of(const Sequent& s, Label x) {
  Signature sig;
  for (const LabelledFormula& lf : s.left)
    if (lf.label == x) sig.first.insert(lf.formula);
  for (const LabelledFormula& lf : s.right)
    if (lf.label == x) sig.second.insert(lf.formula);
  return sig;
}

bool reachable(const Sequent& s, Label from, Label to) {
  std::set<Label> seen{from};
  std::queue<Label> todo;
  todo.push(from);
  while (!todo.empty()) {
    Label x = todo.front();
    todo.pop();
    for (const RelAtom& a : s.rels)
      if (a.src == x && seen.insert(a.dst).second) {
        if (a.dst == to) return true;
        todo.push(a.dst);
      }
  }
  return false;
}

bool renamed_subset(const Sequent& target, Label from, Label to, const Sequent& source) {
  auto ren = [&](Label x) { return x == from ? to : x; };
  for (const RelAtom& a : target.rels)
    if (!source.has_rel(ren(a.src), a.kind, ren(a.dst))) return false;
  for (const LabelledFormula& lf : target.left)
    if (!source.in_left(ren(lf.label), lf.formula)) return false;
  for (const LabelledFormula& lf : target.right)
    if (!source.in_right(ren(lf.label), lf.formula)) return false;
  return true;
}

// First saturation rule to apply, in the fixed order: trans closure, then
// BoxL/TriL, then ImpL/ImpR. Deterministic via the sets' sorted iteration.
std::optional<std::pair<RuleName, Principal>> pick_saturation(const Sequent& s) {
  for (const RelAtom& a : s.rels)
    for (const RelAtom& b : s.rels)
      if (a.dst == b.src && !s.has_rel(a.src, b.kind, b.dst))
        return {{trans_rule(a.kind, b.kind), Principal{std::nullopt, std::nullopt, {a, b}}}};

  for (const LabelledFormula& lf : s.left) {
    if (!lf.formula.is(Conn::Box) && !lf.formula.is(Conn::Tri)) continue;
    RelKind kind = lf.formula.is(Conn::Box) ? RelKind::R : RelKind::S;
    for (const RelAtom& a : s.rels) {
      if (a.src != lf.label || a.kind != kind) continue;
      if (s.in_left(a.dst, lf.formula.body())) continue;
      return {{lf.formula.is(Conn::Box) ? RuleName::BoxL : RuleName::TriL,
               Principal{lf, Side::Left, {a}}}};
    }
  }

  for (const LabelledFormula& lf : s.left)
    if (lf.formula.is(Conn::Imp) && !formula_saturated(s, lf, Side::Left))
      return {{RuleName::ImpL, Principal{lf, Side::Left, {}}}};
  for (const LabelledFormula& lf : s.right)
    if (lf.formula.is(Conn::Imp) && !formula_saturated(s, lf, Side::Right))
      return {{RuleName::ImpR, Principal{lf, Side::Right, {}}}};
  return std::nullopt;
}

// Right modal to expand next: at the deepest label, first in formula order.
// Expanding the newest world first lets the loop check relate a repeated
// signature to its ancestor through the relational atoms; picking an older
// label can re-expand the same world forever without a usable back-edge.
std::optional<LabelledFormula> first_right_modal(const Sequent& s) {
  std::optional<LabelledFormula> best;
  for (const LabelledFormula& lf : s.right) {
    if (!lf.formula.is(Conn::Box) && !lf.formula.is(Conn::Tri)) continue;
    if (!best || lf.label.id > best->label.id) best = lf;
  }
  return best;
}

Principal initial_principal(const Sequent& s, RuleName rule) {
  for (const LabelledFormula& lf : s.left) {
    if (rule == RuleName::Id && lf.formula.is(Conn::Atom) && s.right.count(lf) > 0)
      return Principal{lf, std::nullopt, {}};
    if (rule == RuleName::Bot && lf.formula.is(Conn::Bot))
      return Principal{lf, Side::Left, {}};
  }
  throw std::logic_error("initial_principal: pattern vanished");
}

struct PathRecord {
  Label label;
  Signature sig;
  NodeId node;
};

class Searcher {
public:
  Searcher(const SearchConfig& cfg, unsigned long long cap, int label_floor,
           const std::set<std::pair<Sequent, Sequent>>& blacklist)
      : cfg_(cfg), cap_(cap), next_label_(label_floor), blacklist_(blacklist) {}

  // True if the whole subtree closes; false once a fully saturated leaf is
  // found, in which case refutation_leaf_ holds it.
  bool run(const Sequent& root) {
    nodes_.push_back({root, std::nullopt, {}});
    std::vector<PathRecord> path;
    return expand(0, path, 0);
  }

  std::vector<ProofNode>& nodes() { return nodes_; }
  std::map<NodeId, BackEdge>& back_edges() { return back_edges_; }
  const std::optional<Sequent>& refutation_leaf() const { return refutation_leaf_; }

private:
  const SearchConfig& cfg_;
  unsigned long long cap_;
  int next_label_;
  const std::set<std::pair<Sequent, Sequent>>& blacklist_;
  std::vector<ProofNode> nodes_;
  std::map<NodeId, BackEdge> back_edges_;
  std::optional<Sequent> refutation_leaf_;

  void trace(const std::string& line) {
    if (cfg_.trace && cfg_.trace_out) *cfg_.trace_out << line << '\n';
  }

  bool expand(NodeId id, std::vector<PathRecord>& path, unsigned long long label_steps) {
    const Sequent s = nodes_[id].sequent;

    if (auto init = is_initial(s)) {
      nodes_[id].rule = apply(s, *init, initial_principal(s, *init), std::nullopt);
      trace(R"({"phase":"initial","rule":")" + to_string(*init) + R"(","node":)" +
            std::to_string(id) + "}");
      return true;
    }

    if (auto pick = pick_saturation(s)) {
      RuleInstance inst = apply(s, pick->first, pick->second, std::nullopt);
      trace(R"({"phase":"saturation","rule":")" + to_string(pick->first) + R"(","node":)" +
            std::to_string(id) + "}");
      return attach_and_expand(id, std::move(inst), path, label_steps);
    }

    if (auto modal = first_right_modal(s)) {
      Label x = modal->label;
      Signature sig = signature_of(s, x);

      // Loop check: a previously recorded label with the same signature that
      // reaches x through the relational atoms closes this branch with a
      // back-edge, provided the renamed ancestor sequent embeds here.
      for (auto it = path.rbegin(); it != path.rend(); ++it) {
        if (it->sig != sig || !reachable(s, it->label, x)) continue;
        const Sequent& target = nodes_[it->node].sequent;
        if (!renamed_subset(target, it->label, x, s)) continue;
        if (blacklist_.count({target, s}) > 0) continue;
        back_edges_[id] = BackEdge{it->node, {{it->label, x}}, {it->label, x}};
        trace(R"({"phase":"label","event":"back_edge","from":)" + std::to_string(id) +
              R"(,"to":)" + std::to_string(it->node) + R"(,"pivot":[")" + to_string(it->label) +
              R"(",")" + to_string(x) + R"("]})");
        return true;
      }

      bool pushed = false;
      if (std::none_of(path.begin(), path.end(),
                       [&](const PathRecord& r) { return r.label == x; })) {
        path.push_back({x, sig, id});
        pushed = true;
      }
      if (++label_steps > cap_)
        throw BudgetExceeded("label-phase expansion cap exceeded on one branch");

      RuleName rule = modal->formula.is(Conn::Box) ? RuleName::BoxR : RuleName::TriR;
      Label fresh{next_label_++};
      RuleInstance inst = apply(s, rule, Principal{*modal, Side::Right, {}}, fresh);
      trace(R"({"phase":"label","rule":")" + to_string(rule) + R"(","node":)" +
            std::to_string(id) + "}");
      bool closed = attach_and_expand(id, std::move(inst), path, label_steps);
      if (pushed) path.pop_back();
      return closed;
    }

    // Fully saturated leaf: countermodel.
    refutation_leaf_ = s;
    trace(R"({"phase":"done","event":"refuted","node":)" + std::to_string(id) + "}");
    return false;
  }

  bool attach_and_expand(NodeId id, RuleInstance inst, std::vector<PathRecord>& path,
                         unsigned long long label_steps) {
    std::vector<NodeId> children;
    for (const Sequent& premise : inst.premises) {
      children.push_back(static_cast<NodeId>(nodes_.size()));
      nodes_.push_back({premise, std::nullopt, {}});
    }
    nodes_[id].rule = std::move(inst);
    nodes_[id].children = children;
    for (NodeId c : children)
      if (!expand(c, path, label_steps)) return false;
    return true;
  }
};

unsigned long long safety_cap(std::size_t closure_size) {
  // 4^|closure| + 1, saturating well below overflow.
  if (closure_size >= 31) return ~0ull >> 1;
  return (1ull << (2 * closure_size)) + 1;
}

}  // namespace

Verdict decide(const Sequent& root, const SearchConfig& config) {
  std::set<Formula> closure;
  for (const LabelledFormula& lf : root.left)
    closure.merge(subformula_closure(lf.formula));
  for (const LabelledFormula& lf : root.right)
    closure.merge(subformula_closure(lf.formula));
  unsigned long long cap = config.max_steps.value_or(safety_cap(closure.size()));

  int floor = 0;
  for (Label x : labels_of(root)) floor = std::max(floor, x.id + 1);

  std::set<std::pair<Sequent, Sequent>> blacklist;
  for (int attempt = 0; attempt < 16; ++attempt) {
    Searcher searcher(config, cap, floor, blacklist);
    if (!searcher.run(root)) {
      const Sequent& leaf = *searcher.refutation_leaf();
      auto [model, interp] = extract_model(leaf);
      if (sequent_holds(model, root))
        throw std::logic_error("decide: extracted model fails to falsify the root");
      return Verdict(Refutation{std::move(model), std::move(interp), leaf});
    }
    ProofGraph graph{std::move(searcher.nodes()), 0, std::move(searcher.back_edges())};
    CheckResult err = check_proof(graph);
    if (!err) return Verdict(std::move(graph));
    // A rejected back-edge is retried without it; anything else is a bug.
    auto edge = graph.back_edges.find(err->node);
    if (edge == graph.back_edges.end())
      throw std::logic_error("decide: checker rejected proof: " + err->reason);
    blacklist.insert({graph.nodes[edge->second.target].sequent, graph.nodes[err->node].sequent});
  }
  throw BudgetExceeded("decide: checker kept rejecting candidate proofs");
}

Verdict decide_formula(const Formula& f, const SearchConfig& config) {
  Sequent root;
  root.right.insert({Label{0}, f});
  return decide(root, config);
}

}  // namespace cs
