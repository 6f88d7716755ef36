#include "cs/formula.hpp"

#include <cctype>

namespace cs {

struct Formula::Node {
  Conn conn;
  std::string name;                      // Atom
  std::shared_ptr<const Node> a, b;      // Imp: a -> b; Box/Tri: a
};

Formula Formula::bot() {
  static const auto node = std::make_shared<const Node>(Node{Conn::Bot, {}, nullptr, nullptr});
  return Formula(node);
}

Formula Formula::atom(std::string name) {
  return Formula(std::make_shared<const Node>(Node{Conn::Atom, std::move(name), nullptr, nullptr}));
}

Formula Formula::imp(Formula lhs, Formula rhs) {
  return Formula(std::make_shared<const Node>(Node{Conn::Imp, {}, lhs.node_, rhs.node_}));
}

Formula Formula::box(Formula body) {
  return Formula(std::make_shared<const Node>(Node{Conn::Box, {}, body.node_, nullptr}));
}

Formula Formula::tri(Formula body) {
  return Formula(std::make_shared<const Node>(Node{Conn::Tri, {}, body.node_, nullptr}));
}

const std::string& Formula::atom_name() const {
  if (node_->conn != Conn::Atom) throw std::logic_error("atom_name: not an atom");
  return node_->name;
}

Formula Formula::left() const {
  if (node_->conn != Conn::Imp) throw std::logic_error("left: not an implication");
  return Formula(node_->a);
}

Formula Formula::right() const {
  if (node_->conn != Conn::Imp) throw std::logic_error("right: not an implication");
  return Formula(node_->b);
}

Formula Formula::body() const {
  if (node_->conn != Conn::Box && node_->conn != Conn::Tri)
    throw std::logic_error("body: not a modal formula");
  return Formula(node_->a);
}

Conn Formula::conn() const { return node_->conn; }

std::strong_ordering Formula::compare(const Node* x, const Node* y) {
  if (x == y) return std::strong_ordering::equal;
  if (auto c = x->conn <=> y->conn; c != 0) return c;
  switch (x->conn) {
    case Conn::Bot:
      return std::strong_ordering::equal;
    case Conn::Atom:
      return x->name <=> y->name;
    case Conn::Box:
    case Conn::Tri:
      return compare(x->a.get(), y->a.get());
    case Conn::Imp: {
      auto c = compare(x->a.get(), y->a.get());
      if (c != 0) return c;
      return compare(x->b.get(), y->b.get());
    }
  }
  return std::strong_ordering::equal;
}

bool Formula::operator==(const Formula& other) const {
  return (*this <=> other) == 0;
}

std::strong_ordering Formula::operator<=>(const Formula& other) const {
  return compare(node_.get(), other.node_.get());
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class Parser {
public:
  explicit Parser(std::string_view text) : text_(text) {}

  Formula parse() {
    Formula f = parse_imp();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return f;
  }

private:
  std::string_view text_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(std::string_view tok) {
    skip_ws();
    if (text_.substr(pos_).starts_with(tok)) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  bool peek(std::string_view tok) {
    skip_ws();
    return text_.substr(pos_).starts_with(tok);
  }

  // imp := iff ('->' imp)?   right-associative
  Formula parse_imp() {
    Formula lhs = parse_iff();
    // '<->' also starts with '<', never with '-'.
    if (peek("->")) {
      eat("->");
      return Formula::imp(lhs, parse_imp());
    }
    return lhs;
  }

  // iff := disj ('<->' disj)*    A<->B = (A->B)&(B->A)
  Formula parse_iff() {
    Formula lhs = parse_disj();
    while (eat("<->")) {
      Formula rhs = parse_disj();
      lhs = make_conj(Formula::imp(lhs, rhs), Formula::imp(rhs, lhs));
    }
    return lhs;
  }

  // disj := conj ('|' conj)*     A|B = (A->bot)->B
  Formula parse_disj() {
    Formula lhs = parse_conj();
    while (eat("|")) lhs = Formula::imp(Formula::imp(lhs, Formula::bot()), parse_conj());
    return lhs;
  }

  // conj := unary ('&' unary)*
  Formula parse_conj() {
    Formula lhs = parse_unary();
    while (eat("&")) lhs = make_conj(lhs, parse_unary());
    return lhs;
  }

  // A&B = (A->(B->bot))->bot
  static Formula make_conj(Formula a, Formula b) {
    return Formula::imp(Formula::imp(a, Formula::imp(b, Formula::bot())), Formula::bot());
  }

  Formula parse_unary() {
    if (eat("~")) return Formula::imp(parse_unary(), Formula::bot());
    if (eat("[b]")) return Formula::box(parse_unary());
    if (eat("[d]")) return Formula::tri(parse_unary());
    return parse_atom();
  }

  Formula parse_atom() {
    skip_ws();
    if (eat("(")) {
      Formula f = parse_imp();
      if (!eat(")")) fail("expected ')'");
      return f;
    }
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c < 'a' || c > 'z') fail("expected formula");
    std::size_t start = pos_;
    while (pos_ < text_.size()) {
      char d = text_[pos_];
      if ((d >= 'a' && d <= 'z') || (d >= '0' && d <= '9') || d == '_') ++pos_;
      else break;
    }
    std::string name(text_.substr(start, pos_ - start));
    if (name == "bot") return Formula::bot();
    return Formula::atom(std::move(name));
  }
};

void print_unary(const Formula& f, std::string& out);

void print_imp(const Formula& f, std::string& out) {
  if (f.is(Conn::Imp)) {
    print_unary(f.left(), out);
    out += " -> ";
    print_imp(f.right(), out);
  } else {
    print_unary(f, out);
  }
}

void print_unary(const Formula& f, std::string& out) {
  switch (f.conn()) {
    case Conn::Bot: out += "bot"; return;
    case Conn::Atom: out += f.atom_name(); return;
    case Conn::Box: out += "[b]"; print_unary(f.body(), out); return;
    case Conn::Tri: out += "[d]"; print_unary(f.body(), out); return;
    case Conn::Imp:
      out += '(';
      print_imp(f, out);
      out += ')';
      return;
  }
}

}  // namespace

Formula parse_formula(std::string_view text) { return Parser(text).parse(); }

std::string print_formula(const Formula& f) {
  std::string out;
  print_imp(f, out);
  return out;
}

namespace {

void collect_closure(const Formula& f, std::set<Formula>& out) {
  if (!out.insert(f).second) return;
  switch (f.conn()) {
    case Conn::Bot:
    case Conn::Atom:
      return;
    case Conn::Imp:
      collect_closure(f.left(), out);
      collect_closure(f.right(), out);
      return;
    case Conn::Box:
    case Conn::Tri:
      collect_closure(f.body(), out);
      return;
  }
}

}  // namespace

std::set<Formula> subformula_closure(const Formula& f) {
  std::set<Formula> out;
  collect_closure(f, out);
  return out;
}

int modal_depth(const Formula& f) {
  switch (f.conn()) {
    case Conn::Bot:
    case Conn::Atom:
      return 0;
    case Conn::Imp:
      return std::max(modal_depth(f.left()), modal_depth(f.right()));
    case Conn::Box:
    case Conn::Tri:
      return 1 + modal_depth(f.body());
  }
  return 0;
}

std::set<std::string> atoms_of(const Formula& f) {
  std::set<std::string> out;
  for (const Formula& g : subformula_closure(f))
    if (g.is(Conn::Atom)) out.insert(g.atom_name());
  return out;
}

}  // namespace cs
