#include "cs/sequent.hpp"

#include "doctest.h"

using namespace cs;

namespace {

const Label x{0}, y{1}, z{2};
const Formula p = Formula::atom("p");
const Formula q = Formula::atom("q");

Sequent mixed_mid() {
  // xSy, yRz, x:[b]([b]p -> p) => z:p
  Sequent s;
  s.rels = {{x, RelKind::S, y}, {y, RelKind::R, z}};
  s.left = {{x, parse_formula("[b]([b]p -> p)")}};
  s.right = {{z, p}};
  return s;
}

}  // namespace

TEST_CASE("labels_of") {
  CHECK(labels_of(Sequent{}).empty());
  Sequent s;
  s.rels = {{x, RelKind::R, y}};
  s.left = {{x, parse_formula("[b]p")}};
  CHECK(labels_of(s) == std::set<Label>{x, y});
  CHECK(labels_of(mixed_mid()) == std::set<Label>{x, y, z});
}

TEST_CASE("label printing round trips") {
  CHECK(to_string(Label{12}) == "x12");
  CHECK(parse_label("x12") == Label{12});
  CHECK_THROWS_AS(parse_label("y2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_label("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_label("x1b"), std::invalid_argument);
}

TEST_CASE("is_initial: Id on atoms only, Bot on left bottoms") {
  Sequent id;
  id.left = {{x, p}};
  id.right = {{x, p}};
  CHECK(is_initial(id) == RuleName::Id);

  Sequent boxed;
  boxed.left = {{x, parse_formula("[b]p")}};
  boxed.right = {{x, parse_formula("[b]p")}};
  CHECK(!is_initial(boxed));

  Sequent bot;
  bot.left = {{x, Formula::bot()}};
  CHECK(is_initial(bot) == RuleName::Bot);

  Sequent mismatch;  // same atom, different labels
  mismatch.left = {{x, p}};
  mismatch.right = {{y, p}};
  CHECK(!is_initial(mismatch));
}

TEST_CASE("formula_saturated per connective clause") {
  SUBCASE("left box with no outgoing R atoms is vacuously saturated") {
    Sequent s;
    s.left = {{x, parse_formula("[b]p")}};
    CHECK(formula_saturated(s, {x, parse_formula("[b]p")}, Side::Left));
  }
  SUBCASE("left implication saturated via right antecedent") {
    Sequent s;
    s.left = {{x, parse_formula("p -> q")}};
    s.right = {{x, p}};
    CHECK(formula_saturated(s, {x, parse_formula("p -> q")}, Side::Left));
  }
  SUBCASE("left box unsaturated when a successor misses the body") {
    Sequent s;
    s.rels = {{x, RelKind::R, y}};
    s.left = {{x, parse_formula("[b]p")}};
    CHECK_FALSE(formula_saturated(s, {x, parse_formula("[b]p")}, Side::Left));
    s.left.insert({y, p});
    CHECK(formula_saturated(s, {x, parse_formula("[b]p")}, Side::Left));
  }
  SUBCASE("left box ignores S successors, left tri ignores R successors") {
    Sequent s;
    s.rels = {{x, RelKind::S, y}};
    s.left = {{x, parse_formula("[b]p")}, {x, parse_formula("[d]p")}};
    CHECK(formula_saturated(s, {x, parse_formula("[b]p")}, Side::Left));
    CHECK_FALSE(formula_saturated(s, {x, parse_formula("[d]p")}, Side::Left));
  }
  SUBCASE("right implication needs both sides") {
    Sequent s;
    s.right = {{x, parse_formula("p -> q")}, {x, q}};
    CHECK_FALSE(formula_saturated(s, {x, parse_formula("p -> q")}, Side::Right));
    s.left.insert({x, p});
    CHECK(formula_saturated(s, {x, parse_formula("p -> q")}, Side::Right));
  }
  SUBCASE("right modals are never saturated by this predicate") {
    Sequent s;
    s.right = {{x, parse_formula("[b]p")}};
    CHECK_FALSE(formula_saturated(s, {x, parse_formula("[b]p")}, Side::Right));
  }
}

TEST_CASE("trans saturation and closure") {
  Sequent closed;
  closed.rels = {{x, RelKind::S, y}, {y, RelKind::R, z}, {x, RelKind::R, z}};
  CHECK(trans_saturated(closed));

  Sequent open;
  open.rels = {{x, RelKind::S, y}, {y, RelKind::R, z}};
  CHECK_FALSE(trans_saturated(open));
  CHECK(trans_closure(open.rels) == closed.rels);

  // Result kind comes from the second atom.
  std::set<RelAtom> rs = {{x, RelKind::R, y}, {y, RelKind::S, z}};
  CHECK(trans_closure(rs) ==
        std::set<RelAtom>{{x, RelKind::R, y}, {y, RelKind::S, z}, {x, RelKind::S, z}});

  std::set<RelAtom> single = {{x, RelKind::R, y}};
  CHECK(trans_closure(single) == single);
  CHECK(trans_saturated(Sequent{}));
}

TEST_CASE("trans_closure is idempotent, monotone, and quadratically bounded") {
  std::set<RelAtom> chain = {{x, RelKind::R, y}, {y, RelKind::S, z}, {z, RelKind::R, Label{3}}};
  auto once = trans_closure(chain);
  CHECK(trans_closure(once) == once);
  CHECK(std::includes(once.begin(), once.end(), chain.begin(), chain.end()));
  auto labels = 4u;
  CHECK(once.size() <= 2 * labels * labels);  // two kinds per ordered pair
}

TEST_CASE("is_fully_saturated") {
  Sequent good;
  good.rels = {{x, RelKind::R, y}};
  good.left = {{x, parse_formula("[b]p")}, {y, p}};
  good.right = {{y, q}};
  CHECK(is_fully_saturated(good));

  Sequent pending_label;
  pending_label.right = {{x, parse_formula("[b]p")}};
  CHECK_FALSE(is_fully_saturated(pending_label));

  Sequent id_applies;
  id_applies.left = {{x, p}};
  id_applies.right = {{x, p}};
  CHECK_FALSE(is_fully_saturated(id_applies));
}
