#include "cs/proofgraph.hpp"

#include <queue>

namespace cs {

namespace {

CheckResult error(NodeId n, std::string reason) { return CheckError{n, std::move(reason)}; }

// Parent of every node in the underlying tree, or an error if the children
// arrays do not form a tree rooted at g.root.
std::optional<std::vector<NodeId>> tree_parents(const ProofGraph& g, CheckResult& err) {
  const int n = static_cast<int>(g.nodes.size());
  if (n == 0 || g.root < 0 || g.root >= n) {
    err = error(g.root, "missing or invalid root");
    return std::nullopt;
  }
  std::vector<NodeId> parent(n, -1);
  std::vector<bool> seen(n, false);
  std::queue<NodeId> todo;
  todo.push(g.root);
  seen[g.root] = true;
  while (!todo.empty()) {
    NodeId id = todo.front();
    todo.pop();
    for (NodeId c : g.nodes[id].children) {
      if (c < 0 || c >= n) {
        err = error(id, "child id out of range");
        return std::nullopt;
      }
      if (seen[c]) {
        err = error(id, "node " + std::to_string(c) + " has two parents");
        return std::nullopt;
      }
      seen[c] = true;
      parent[c] = id;
      todo.push(c);
    }
  }
  for (NodeId id = 0; id < n; ++id)
    if (!seen[id]) {
      err = error(id, "node unreachable from root");
      return std::nullopt;
    }
  return parent;
}

Label rename(const std::map<Label, Label>& renaming, Label x) {
  auto it = renaming.find(x);
  return it == renaming.end() ? x : it->second;
}

Sequent rename(const std::map<Label, Label>& renaming, const Sequent& s) {
  Sequent out;
  for (const RelAtom& a : s.rels)
    out.rels.insert({rename(renaming, a.src), a.kind, rename(renaming, a.dst)});
  for (const LabelledFormula& lf : s.left) out.left.insert({rename(renaming, lf.label), lf.formula});
  for (const LabelledFormula& lf : s.right)
    out.right.insert({rename(renaming, lf.label), lf.formula});
  return out;
}

bool subset(const Sequent& small, const Sequent& big) {
  return std::includes(big.rels.begin(), big.rels.end(), small.rels.begin(), small.rels.end()) &&
         std::includes(big.left.begin(), big.left.end(), small.left.begin(), small.left.end()) &&
         std::includes(big.right.begin(), big.right.end(), small.right.begin(), small.right.end());
}

bool reaches(const Sequent& s, Label from, Label to) {
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

}  // namespace

CheckResult check_local(const ProofGraph& g) {
  CheckResult err;
  auto parent = tree_parents(g, err);
  if (!parent) return err;

  for (NodeId id = 0; id < static_cast<NodeId>(g.nodes.size()); ++id) {
    const ProofNode& node = g.nodes[id];
    auto back = g.back_edges.find(id);

    if (!node.rule) {
      if (!node.children.empty()) return error(id, "node without rule has children");
      if (back == g.back_edges.end()) return error(id, "open leaf: no rule and no back-edge");
      continue;
    }
    if (back != g.back_edges.end()) return error(id, "node has both a rule and a back-edge");

    const RuleInstance& inst = *node.rule;
    if (inst.conclusion != node.sequent)
      return error(id, "rule conclusion differs from node sequent");

    RuleInstance derived;
    try {
      derived = apply(node.sequent, inst.name, inst.principal, inst.fresh);
    } catch (const std::invalid_argument& e) {
      return error(id, std::string("illegal rule instance: ") + e.what());
    }
    if (derived.premises != inst.premises)
      return error(id, "stored premises differ from the rule's premises");
    if (node.children.size() != derived.premises.size())
      return error(id, "child count differs from premise count");
    for (std::size_t k = 0; k < node.children.size(); ++k)
      if (g.nodes[node.children[k]].sequent != derived.premises[k])
        return error(id, "child sequent differs from premise " + std::to_string(k));
  }

  for (const auto& [src, edge] : g.back_edges) {
    if (src < 0 || src >= static_cast<NodeId>(g.nodes.size()))
      return error(src, "back-edge source out of range");
    if (edge.target < 0 || edge.target >= static_cast<NodeId>(g.nodes.size()))
      return error(src, "back-edge target out of range");
    bool ancestor = false;
    for (NodeId a = (*parent)[src]; a != -1; a = (*parent)[a])
      if (a == edge.target) {
        ancestor = true;
        break;
      }
    if (!ancestor) return error(src, "back-edge target is not a strict ancestor");
    Sequent renamed = rename(edge.renaming, g.nodes[edge.target].sequent);
    if (!subset(renamed, g.nodes[src].sequent))
      return error(src, "renamed target sequent is not contained in the source sequent");
  }
  return std::nullopt;
}

CheckResult check_progress(const ProofGraph& g) {
  CheckResult err;
  auto parent = tree_parents(g, err);
  if (!parent) return err;

  for (const auto& [src, edge] : g.back_edges) {
    auto [a, x] = edge.pivot;
    if (rename(edge.renaming, a) != x)
      return error(src, "pivot is not consistent with the renaming");
    if (!reaches(g.nodes[src].sequent, a, x))
      return error(src, "pivot labels are not (R|S)+-related in the source sequent");
    bool has_modal_step = false;
    for (NodeId n = (*parent)[src]; n != -1 && !has_modal_step; n = (*parent)[n]) {
      const auto& rule = g.nodes[n].rule;
      if (rule && (rule->name == RuleName::BoxR || rule->name == RuleName::TriR))
        has_modal_step = true;
      if (n == edge.target) break;
    }
    if (!has_modal_step)
      return error(src, "cycle contains no BoxR/TriR step; trace would be eventually constant");
  }
  return std::nullopt;
}

CheckResult check_proof(const ProofGraph& g) {
  if (auto err = check_local(g)) return err;
  return check_progress(g);
}

}  // namespace cs
