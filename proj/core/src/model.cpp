#include "cs/model.hpp"

#include <algorithm>
#include <functional>
#include <vector>

namespace cs {

bool forces(const CarlsonModel& m, const WorldId& w, const Formula& f) {
  if (m.worlds.count(w) == 0) throw std::out_of_range("forces: unknown world " + w);
  switch (f.conn()) {
    case Conn::Bot:
      return false;
    case Conn::Atom: {
      auto it = m.valuation.find(f.atom_name());
      return it != m.valuation.end() && it->second.count(w) > 0;
    }
    case Conn::Imp:
      return forces(m, w, f.right()) || !forces(m, w, f.left());
    case Conn::Box:
      for (const auto& [a, b] : m.prec)
        if (a == w && m.m0.count(b) > 0 && !forces(m, b, f.body())) return false;
      return true;
    case Conn::Tri:
      for (const auto& [a, b] : m.prec)
        if (a == w && m.m1.count(b) > 0 && !forces(m, b, f.body())) return false;
      return true;
  }
  return false;
}

bool is_interpretation(const CarlsonModel& m, const Sequent& s, const Interpretation& i) {
  for (const RelAtom& a : s.rels) {
    auto sit = i.assignment.find(a.src);
    auto dit = i.assignment.find(a.dst);
    if (sit == i.assignment.end() || dit == i.assignment.end()) return false;
    if (m.prec.count({sit->second, dit->second}) == 0) return false;
    const auto& member = a.kind == RelKind::R ? m.m0 : m.m1;
    if (member.count(dit->second) == 0) return false;
  }
  return true;
}

namespace {

// Truth set of f, memoised over subformulas. Used to keep the exhaustive
// interpretation sweep in sequent_holds cheap.
const std::set<WorldId>& truth_set(const CarlsonModel& m, const Formula& f,
                                   std::map<Formula, std::set<WorldId>>& memo) {
  auto it = memo.find(f);
  if (it != memo.end()) return it->second;
  std::set<WorldId> out;
  for (const WorldId& w : m.worlds)
    if (forces(m, w, f)) out.insert(w);
  return memo.emplace(f, std::move(out)).first->second;
}

}  // namespace

bool sequent_holds(const CarlsonModel& m, const Sequent& s) {
  std::set<Label> label_set = labels_of(s);
  std::vector<Label> labels(label_set.begin(), label_set.end());
  std::vector<WorldId> worlds(m.worlds.begin(), m.worlds.end());
  std::map<Formula, std::set<WorldId>> memo;

  // Relational constraints indexed by the later label of the pair, so each
  // partial assignment is checked as soon as both ends are fixed.
  auto index_of = [&](Label x) {
    return static_cast<std::size_t>(std::lower_bound(labels.begin(), labels.end(), x) -
                                    labels.begin());
  };
  std::vector<std::vector<RelAtom>> checks(labels.size());
  for (const RelAtom& a : s.rels)
    checks[std::max(index_of(a.src), index_of(a.dst))].push_back(a);

  Interpretation i;
  // Searches for a falsifying interpretation; true means none below here.
  std::function<bool(std::size_t)> assign = [&](std::size_t k) {
    if (k == labels.size()) {
      for (const LabelledFormula& lf : s.left)
        if (truth_set(m, lf.formula, memo).count(i.assignment.at(lf.label)) == 0) return true;
      for (const LabelledFormula& lf : s.right)
        if (truth_set(m, lf.formula, memo).count(i.assignment.at(lf.label)) > 0) return true;
      return false;  // all left hold, all right fail
    }
    for (const WorldId& w : worlds) {
      i.assignment[labels[k]] = w;
      bool ok = true;
      for (const RelAtom& a : checks[k]) {
        const auto& member = a.kind == RelKind::R ? m.m0 : m.m1;
        if (m.prec.count({i.assignment.at(a.src), i.assignment.at(a.dst)}) == 0 ||
            member.count(i.assignment.at(a.dst)) == 0) {
          ok = false;
          break;
        }
      }
      if (ok && !assign(k + 1)) return false;
    }
    i.assignment.erase(labels[k]);
    return true;
  };
  return assign(0);
}

std::pair<CarlsonModel, Interpretation> extract_model(const Sequent& s) {
  if (!is_fully_saturated(s))
    throw std::invalid_argument("extract_model: sequent is not fully saturated");

  CarlsonModel m;
  Interpretation ident;
  for (Label x : labels_of(s)) {
    m.worlds.insert(to_string(x));
    ident.assignment[x] = to_string(x);
  }
  for (const RelAtom& a : s.rels) {
    m.prec.insert({to_string(a.src), to_string(a.dst)});
    (a.kind == RelKind::R ? m.m0 : m.m1).insert(to_string(a.dst));
  }
  for (const LabelledFormula& lf : s.left)
    if (lf.formula.is(Conn::Atom)) m.valuation[lf.formula.atom_name()].insert(to_string(lf.label));
  return {std::move(m), std::move(ident)};
}

namespace {

bool transitive(const std::vector<std::pair<int, int>>& pairs, unsigned mask,
                const std::vector<std::vector<int>>& pair_index, int n) {
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == b || !(mask >> pair_index[a][b] & 1u)) continue;
      for (int c = 0; c < n; ++c) {
        if (c == b || !(mask >> pair_index[b][c] & 1u)) continue;
        if (c == a || !(mask >> pair_index[a][c] & 1u)) return false;
      }
    }
  return true;
}

}  // namespace

std::optional<std::pair<CarlsonModel, WorldId>> refute_semantic(const Formula& f,
                                                               int max_worlds) {
  if (max_worlds < 1) throw std::invalid_argument("refute_semantic: max_worlds must be >= 1");
  std::set<std::string> atom_set = atoms_of(f);
  std::vector<std::string> atoms(atom_set.begin(), atom_set.end());

  for (int n = 1; n <= max_worlds; ++n) {
    std::vector<WorldId> names;
    for (int i = 0; i < n; ++i) names.push_back("w" + std::to_string(i));

    std::vector<std::pair<int, int>> pairs;
    std::vector<std::vector<int>> pair_index(n, std::vector<int>(n, -1));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (a != b) {
          pair_index[a][b] = static_cast<int>(pairs.size());
          pairs.emplace_back(a, b);
        }

    auto subset_of = [&](unsigned mask) {
      std::set<WorldId> out;
      for (int i = 0; i < n; ++i)
        if (mask >> i & 1u) out.insert(names[i]);
      return out;
    };

    for (unsigned rel = 0; rel < 1u << pairs.size(); ++rel) {
      if (!transitive(pairs, rel, pair_index, n)) continue;
      std::set<std::pair<WorldId, WorldId>> prec;
      for (std::size_t k = 0; k < pairs.size(); ++k)
        if (rel >> k & 1u) prec.insert({names[pairs[k].first], names[pairs[k].second]});

      for (unsigned m0 = 0; m0 < 1u << n; ++m0)
        for (unsigned m1 = 0; m1 < 1u << n; ++m1) {
          CarlsonModel m;
          m.worlds.insert(names.begin(), names.end());
          m.prec = prec;
          m.m0 = subset_of(m0);
          m.m1 = subset_of(m1);

          // One counter digit per atom, least significant first.
          std::vector<unsigned> val(atoms.size(), 0);
          while (true) {
            m.valuation.clear();
            for (std::size_t a = 0; a < atoms.size(); ++a)
              m.valuation[atoms[a]] = subset_of(val[a]);
            for (const WorldId& w : names)
              if (!forces(m, w, f)) return std::make_pair(m, w);
            std::size_t d = 0;
            for (; d < val.size(); ++d) {
              if (++val[d] < 1u << n) break;
              val[d] = 0;
            }
            if (d == val.size()) break;
          }
        }
    }
  }
  return std::nullopt;
}

std::optional<std::string> validate_model(const CarlsonModel& m) {
  for (const auto& [a, b] : m.prec) {
    if (m.worlds.count(a) == 0 || m.worlds.count(b) == 0)
      return "prec uses unknown world (" + a + "," + b + ")";
    if (a == b) return "prec is not irreflexive at " + a;
  }
  for (const auto& [a, b] : m.prec)
    for (const auto& [c, d] : m.prec)
      if (b == c && m.prec.count({a, d}) == 0)
        return "prec is not transitive: missing (" + a + "," + d + ")";
  // With transitivity, a cycle would force a reflexive pair; check anyway so
  // partially broken inputs get a direct answer.
  for (const auto& [a, b] : m.prec)
    if (m.prec.count({b, a}) > 0) return "prec has a cycle through " + a;
  for (const WorldId& w : m.m0)
    if (m.worlds.count(w) == 0) return "m0 contains unknown world " + w;
  for (const WorldId& w : m.m1)
    if (m.worlds.count(w) == 0) return "m1 contains unknown world " + w;
  for (const auto& [atom, set] : m.valuation)
    for (const WorldId& w : set)
      if (m.worlds.count(w) == 0)
        return "valuation of " + atom + " contains unknown world " + w;
  return std::nullopt;
}

std::string to_dot(const CarlsonModel& m) {
  std::string out = "digraph carlson {\n";
  for (const WorldId& w : m.worlds) {
    bool in0 = m.m0.count(w) > 0, in1 = m.m1.count(w) > 0;
    std::string shape = in0 && in1 ? "box" : in0 ? "doublecircle" : in1 ? "diamond" : "circle";
    std::string label = w;
    std::string atoms;
    for (const auto& [atom, set] : m.valuation)
      if (set.count(w) > 0) atoms += atoms.empty() ? atom : " " + atom;
    if (!atoms.empty()) label += "\\n" + atoms;
    out += "  \"" + w + "\" [shape=" + shape + ", label=\"" + label + "\"];\n";
  }
  for (const auto& [a, b] : m.prec)
    out += "  \"" + a + "\" -> \"" + b + "\";\n";
  out += "}\n";
  return out;
}

}  // namespace cs
