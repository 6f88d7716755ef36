#pragma once

#include <random>

#include "cs/formula.hpp"

namespace cs_test {

/// Random formula with the given maximum depth over the given atoms.
inline cs::Formula random_formula(std::mt19937& rng, int max_depth,
                                  const std::vector<std::string>& atoms) {
  std::uniform_int_distribution<int> kind(0, max_depth <= 1 ? 1 : 4);
  std::uniform_int_distribution<std::size_t> atom(0, atoms.size() - 1);
  switch (kind(rng)) {
    case 0: return cs::Formula::bot();
    case 1: return cs::Formula::atom(atoms[atom(rng)]);
    case 2:
      return cs::Formula::imp(random_formula(rng, max_depth - 1, atoms),
                              random_formula(rng, max_depth - 1, atoms));
    case 3: return cs::Formula::box(random_formula(rng, max_depth - 1, atoms));
    default: return cs::Formula::tri(random_formula(rng, max_depth - 1, atoms));
  }
}

inline int node_count(const cs::Formula& f) {
  switch (f.conn()) {
    case cs::Conn::Bot:
    case cs::Conn::Atom: return 1;
    case cs::Conn::Imp: return 1 + node_count(f.left()) + node_count(f.right());
    default: return 1 + node_count(f.body());
  }
}

inline int height(const cs::Formula& f) {
  switch (f.conn()) {
    case cs::Conn::Bot:
    case cs::Conn::Atom: return 1;
    case cs::Conn::Imp: return 1 + std::max(height(f.left()), height(f.right()));
    default: return 1 + height(f.body());
  }
}

}  // namespace cs_test
