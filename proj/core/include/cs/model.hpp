#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>

#include "cs/sequent.hpp"

namespace cs {

using WorldId = std::string;

/// Finite Carlson model: a GL frame (strict, transitive, conversely
/// wellfounded order) with two world subsets m0/m1 scoping the two
/// modalities, and a valuation.
struct CarlsonModel {
  std::set<WorldId> worlds;
  std::set<std::pair<WorldId, WorldId>> prec;
  std::set<WorldId> m0;
  std::set<WorldId> m1;
  std::map<std::string, std::set<WorldId>> valuation;
  auto operator<=>(const CarlsonModel&) const = default;
};

/// Assignment of sequent labels to worlds.
struct Interpretation {
  std::map<Label, WorldId> assignment;
};

/// Forcing relation, structural recursion over f. Throws std::out_of_range
/// if w is not a world of m.
bool forces(const CarlsonModel& m, const WorldId& w, const Formula& f);

/// True iff i respects every relational atom of s: xRy demands
/// i(x) prec i(y) with i(y) in m0, xSy the same with m1.
bool is_interpretation(const CarlsonModel& m, const Sequent& s, const Interpretation& i);

/// Semantic truth of a sequent: under every interpretation, some left
/// formula fails or some right formula holds.
bool sequent_holds(const CarlsonModel& m, const Sequent& s);

/// Countermodel construction from a fully saturated sequent. Worlds are the
/// sequent's labels, m0/m1 the R/S targets, prec the projection of all
/// relational atoms, and the valuation reads off the left atoms. The
/// returned interpretation is the identity; it falsifies s.
/// Throws std::invalid_argument if s is not fully saturated.
std::pair<CarlsonModel, Interpretation> extract_model(const Sequent& s);

/// Brute-force refutation oracle: enumerates every model with at most
/// max_worlds worlds over the atoms of f (all transitive irreflexive
/// orders, all m0/m1 subsets, all valuations) and returns the first
/// (model, world) where f fails, in a fixed deterministic order.
std::optional<std::pair<CarlsonModel, WorldId>> refute_semantic(const Formula& f,
                                                               int max_worlds);

/// Frame and subset conditions: prec transitive, irreflexive, acyclic;
/// m0/m1/valuation contained in worlds. Returns an error description or
/// nothing if the model is well formed.
std::optional<std::string> validate_model(const CarlsonModel& m);

/// Graphviz export: double circle for m0 worlds, diamond for m1, box for
/// both; true atoms listed in the node label.
std::string to_dot(const CarlsonModel& m);

}  // namespace cs
