#pragma once

#include <compare>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cs {

enum class Conn { Bot, Atom, Imp, Box, Tri };

/// Immutable formula of the bimodal language: bot, atoms, ->, [b], [d].
/// Only the four primitive constructors are ever stored; ~, &, |, <-> are
/// parser sugar. Formulas are cheap to copy and compare structurally.
class Formula {
public:
  static Formula bot();
  static Formula atom(std::string name);
  static Formula imp(Formula lhs, Formula rhs);
  static Formula box(Formula body);
  static Formula tri(Formula body);

  Conn conn() const;
  bool is(Conn c) const { return conn() == c; }

  const std::string& atom_name() const;  // Atom only
  Formula left() const;                  // Imp only
  Formula right() const;                 // Imp only
  Formula body() const;                  // Box/Tri only

  bool operator==(const Formula& other) const;
  std::strong_ordering operator<=>(const Formula& other) const;

private:
  struct Node;
  static std::strong_ordering compare(const Node* x, const Node* y);
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, std::size_t offset)
      : std::runtime_error(msg), offset(offset) {}
  std::size_t offset;  // byte offset into the input
};

/// Parses the concrete syntax (see README for the grammar) and desugars
/// ~, &, |, <-> into the primitive connectives. Throws ParseError.
Formula parse_formula(std::string_view text);

/// Canonical printing: minimal parentheses, no sugar. parse(print(f)) == f.
std::string print_formula(const Formula& f);

/// Least set containing f and closed under immediate subformulas.
std::set<Formula> subformula_closure(const Formula& f);

/// Maximum nesting of [b]/[d] constructors.
int modal_depth(const Formula& f);

/// Names of the propositional atoms occurring in f.
std::set<std::string> atoms_of(const Formula& f);

}  // namespace cs
