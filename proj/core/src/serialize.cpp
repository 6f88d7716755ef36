#include "cs/serialize.hpp"

namespace cs {

namespace {

Json rel_to_json(const RelAtom& a) {
  return Json::array({to_string(a.src), to_string(a.kind), to_string(a.dst)});
}

RelAtom rel_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 3) throw std::invalid_argument("bad relational atom");
  std::string kind = j[1].get<std::string>();
  if (kind != "R" && kind != "S") throw std::invalid_argument("bad relation kind " + kind);
  return {parse_label(j[0].get<std::string>()), kind == "R" ? RelKind::R : RelKind::S,
          parse_label(j[2].get<std::string>())};
}

Json lf_to_json(const LabelledFormula& lf) {
  return Json::array({to_string(lf.label), print_formula(lf.formula)});
}

LabelledFormula lf_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("bad labelled formula");
  return {parse_label(j[0].get<std::string>()), parse_formula(j[1].get<std::string>())};
}

}  // namespace

Json to_json(const Sequent& s) {
  Json j;
  j["rels"] = Json::array();
  for (const RelAtom& a : s.rels) j["rels"].push_back(rel_to_json(a));
  j["left"] = Json::array();
  for (const LabelledFormula& lf : s.left) j["left"].push_back(lf_to_json(lf));
  j["right"] = Json::array();
  for (const LabelledFormula& lf : s.right) j["right"].push_back(lf_to_json(lf));
  return j;
}

Sequent sequent_from_json(const Json& j) {
  Sequent s;
  for (const Json& a : j.at("rels")) s.rels.insert(rel_from_json(a));
  for (const Json& a : j.at("left")) s.left.insert(lf_from_json(a));
  for (const Json& a : j.at("right")) s.right.insert(lf_from_json(a));
  return s;
}

Json to_json(const RuleInstance& inst) {
  Json j;
  j["rule"] = to_string(inst.name);
  Json p = Json::object();
  if (inst.principal.formula) {
    p["label"] = to_string(inst.principal.formula->label);
    p["formula"] = print_formula(inst.principal.formula->formula);
  }
  if (inst.principal.side)
    p["side"] = *inst.principal.side == Side::Left ? "left" : "right";
  if (!inst.principal.rels.empty()) {
    p["rels"] = Json::array();
    for (const RelAtom& a : inst.principal.rels) p["rels"].push_back(rel_to_json(a));
  }
  j["principal"] = p;
  if (inst.fresh) j["fresh"] = to_string(*inst.fresh);
  j["premises"] = Json::array();
  for (const Sequent& s : inst.premises) j["premises"].push_back(to_json(s));
  return j;
}

RuleInstance rule_instance_from_json(const Json& j) {
  RuleInstance inst;
  auto name = rule_from_string(j.at("rule").get<std::string>());
  if (!name) throw std::invalid_argument("unknown rule " + j.at("rule").get<std::string>());
  inst.name = *name;
  const Json& p = j.at("principal");
  if (p.contains("label"))
    inst.principal.formula = LabelledFormula{parse_label(p.at("label").get<std::string>()),
                                             parse_formula(p.at("formula").get<std::string>())};
  if (p.contains("side")) {
    std::string side = p.at("side").get<std::string>();
    if (side != "left" && side != "right") throw std::invalid_argument("bad side " + side);
    inst.principal.side = side == "left" ? Side::Left : Side::Right;
  }
  if (p.contains("rels"))
    for (const Json& a : p.at("rels")) inst.principal.rels.push_back(rel_from_json(a));
  if (j.contains("fresh")) inst.fresh = parse_label(j.at("fresh").get<std::string>());
  for (const Json& s : j.at("premises")) inst.premises.push_back(sequent_from_json(s));
  return inst;
}

Json to_json(const ProofGraph& g) {
  Json j;
  j["root"] = g.root;
  j["nodes"] = Json::array();
  for (NodeId id = 0; id < static_cast<NodeId>(g.nodes.size()); ++id) {
    const ProofNode& node = g.nodes[id];
    Json n;
    n["id"] = id;
    n["sequent"] = to_json(node.sequent);
    n["rule"] = node.rule ? to_json(*node.rule) : Json(nullptr);
    n["children"] = node.children;
    j["nodes"].push_back(n);
  }
  j["back_edges"] = Json::array();
  for (const auto& [src, edge] : g.back_edges) {
    Json e;
    e["from"] = src;
    e["to"] = edge.target;
    e["renaming"] = Json::object();
    for (const auto& [a, b] : edge.renaming) e["renaming"][to_string(a)] = to_string(b);
    e["pivot"] = Json::array({to_string(edge.pivot.first), to_string(edge.pivot.second)});
    j["back_edges"].push_back(e);
  }
  return j;
}

ProofGraph proof_graph_from_json(const Json& j) {
  ProofGraph g;
  g.root = j.at("root").get<NodeId>();
  const Json& nodes = j.at("nodes");
  g.nodes.resize(nodes.size());
  for (const Json& n : nodes) {
    NodeId id = n.at("id").get<NodeId>();
    if (id < 0 || id >= static_cast<NodeId>(g.nodes.size()))
      throw std::invalid_argument("node id out of range");
    ProofNode& node = g.nodes[id];
    node.sequent = sequent_from_json(n.at("sequent"));
    if (!n.at("rule").is_null()) {
      node.rule = rule_instance_from_json(n.at("rule"));
      node.rule->conclusion = node.sequent;
    }
    node.children = n.at("children").get<std::vector<NodeId>>();
  }
  for (const Json& e : j.at("back_edges")) {
    BackEdge edge;
    edge.target = e.at("to").get<NodeId>();
    for (const auto& [a, b] : e.at("renaming").items())
      edge.renaming[parse_label(a)] = parse_label(b.get<std::string>());
    edge.pivot = {parse_label(e.at("pivot")[0].get<std::string>()),
                  parse_label(e.at("pivot")[1].get<std::string>())};
    g.back_edges[e.at("from").get<NodeId>()] = edge;
  }
  return g;
}

Json to_json(const CarlsonModel& m) {
  Json j;
  j["worlds"] = m.worlds;
  j["prec"] = Json::array();
  for (const auto& [a, b] : m.prec) j["prec"].push_back(Json::array({a, b}));
  j["m0"] = m.m0;
  j["m1"] = m.m1;
  j["valuation"] = Json::object();
  for (const auto& [atom, set] : m.valuation) j["valuation"][atom] = set;
  return j;
}

CarlsonModel model_from_json(const Json& j) {
  CarlsonModel m;
  for (const Json& w : j.at("worlds")) m.worlds.insert(w.get<std::string>());
  for (const Json& p : j.at("prec")) {
    if (!p.is_array() || p.size() != 2) throw std::invalid_argument("bad prec pair");
    m.prec.insert({p[0].get<std::string>(), p[1].get<std::string>()});
  }
  for (const Json& w : j.at("m0")) m.m0.insert(w.get<std::string>());
  for (const Json& w : j.at("m1")) m.m1.insert(w.get<std::string>());
  for (const auto& [atom, set] : j.at("valuation").items())
    for (const Json& w : set) m.valuation[atom].insert(w.get<std::string>());
  return m;
}

}  // namespace cs
