#include "plogic/temporal_formula.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace plogic {

struct TemporalFormula::Node {
  Kind kind;
  std::optional<PronounAtom> atom;
  std::vector<TemporalFormula> children;
  int bound = 0;
  std::size_t size = 1;
};

namespace {

using Kind = TemporalFormula::Kind;

bool unaryKind(Kind k) {
  switch (k) {
  case Kind::Not: case Kind::Box: case Kind::Diamond: case Kind::Next:
  case Kind::BoxK: case Kind::DiamondK:
    return true;
  default:
    return false;
  }
}

bool binaryKind(Kind k) { return k == Kind::And || k == Kind::Or || k == Kind::Implies; }

} // namespace

TemporalFormula TemporalFormula::atom(PronounAtom a) {
  return TemporalFormula(std::make_shared<const Node>(Node{Kind::Atom, std::move(a), {}, 0, 1}));
}
TemporalFormula TemporalFormula::top() {
  static const TemporalFormula t(std::make_shared<const Node>(Node{Kind::True, {}, {}, 0, 1}));
  return t;
}
TemporalFormula TemporalFormula::bottom() {
  static const TemporalFormula f(std::make_shared<const Node>(Node{Kind::False, {}, {}, 0, 1}));
  return f;
}

TemporalFormula TemporalFormula::unary(Kind kind, TemporalFormula f) {
  if (!unaryKind(kind) || kind == Kind::BoxK || kind == Kind::DiamondK)
    throw std::invalid_argument("TemporalFormula::unary: not an unbounded unary kind");
  std::size_t n = 1 + size(f);
  return TemporalFormula(std::make_shared<const Node>(Node{kind, {}, {std::move(f)}, 0, n}));
}

TemporalFormula TemporalFormula::binary(Kind kind, TemporalFormula l, TemporalFormula r) {
  if (!binaryKind(kind))
    throw std::invalid_argument("TemporalFormula::binary: not a binary kind");
  std::size_t n = 1 + size(l) + size(r);
  return TemporalFormula(
      std::make_shared<const Node>(Node{kind, {}, {std::move(l), std::move(r)}, 0, n}));
}

TemporalFormula TemporalFormula::negation(TemporalFormula f) { return unary(Kind::Not, std::move(f)); }
TemporalFormula TemporalFormula::box(TemporalFormula f) { return unary(Kind::Box, std::move(f)); }
TemporalFormula TemporalFormula::diamond(TemporalFormula f) { return unary(Kind::Diamond, std::move(f)); }
TemporalFormula TemporalFormula::next(TemporalFormula f) { return unary(Kind::Next, std::move(f)); }
TemporalFormula TemporalFormula::conj(TemporalFormula l, TemporalFormula r) {
  return binary(Kind::And, std::move(l), std::move(r));
}
TemporalFormula TemporalFormula::disj(TemporalFormula l, TemporalFormula r) {
  return binary(Kind::Or, std::move(l), std::move(r));
}
TemporalFormula TemporalFormula::implies(TemporalFormula l, TemporalFormula r) {
  return binary(Kind::Implies, std::move(l), std::move(r));
}

TemporalFormula TemporalFormula::boxK(int k, TemporalFormula f) {
  if (k < 1)
    throw std::invalid_argument("bounded modality requires k >= 1");
  std::size_t n = 1 + size(f);
  return TemporalFormula(std::make_shared<const Node>(Node{Kind::BoxK, {}, {std::move(f)}, k, n}));
}
TemporalFormula TemporalFormula::diamondK(int k, TemporalFormula f) {
  if (k < 1)
    throw std::invalid_argument("bounded modality requires k >= 1");
  std::size_t n = 1 + size(f);
  return TemporalFormula(
      std::make_shared<const Node>(Node{Kind::DiamondK, {}, {std::move(f)}, k, n}));
}

TemporalFormula::Kind TemporalFormula::kind() const noexcept { return node_->kind; }
const PronounAtom& TemporalFormula::atom() const { return *node_->atom; }
const TemporalFormula& TemporalFormula::left() const { return node_->children.at(0); }
const TemporalFormula& TemporalFormula::right() const { return node_->children.at(1); }
int TemporalFormula::bound() const noexcept { return node_->bound; }
bool TemporalFormula::isUnary() const noexcept { return unaryKind(node_->kind); }
bool TemporalFormula::isBinary() const noexcept { return binaryKind(node_->kind); }

std::size_t size(const TemporalFormula& f) noexcept { return f.node_->size; }

bool operator==(const TemporalFormula& a, const TemporalFormula& b) {
  if (a.node_ == b.node_)
    return true;
  if (a.kind() != b.kind() || size(a) != size(b) || a.bound() != b.bound())
    return false;
  if (a.kind() == Kind::Atom)
    return a.atom() == b.atom();
  return a.node_->children == b.node_->children;
}

std::strong_ordering operator<=>(const TemporalFormula& a, const TemporalFormula& b) {
  if (a.node_ == b.node_)
    return std::strong_ordering::equal;
  if (auto c = a.kind() <=> b.kind(); c != 0)
    return c;
  if (auto c = a.bound() <=> b.bound(); c != 0)
    return c;
  if (a.kind() == Kind::Atom)
    return a.atom() <=> b.atom();
  const auto& ca = a.node_->children;
  const auto& cb = b.node_->children;
  for (std::size_t i = 0; i < ca.size(); ++i)
    if (auto c = ca[i] <=> cb[i]; c != 0)
      return c;
  return std::strong_ordering::equal;
}

namespace {

std::string prefix(const TemporalFormula& f) {
  switch (f.kind()) {
  case Kind::Not: return "!";
  case Kind::Box: return "[] ";
  case Kind::Diamond: return "<> ";
  case Kind::Next: return "() ";
  case Kind::BoxK: return "[]<=" + std::to_string(f.bound()) + " ";
  case Kind::DiamondK: return "<><=" + std::to_string(f.bound()) + " ";
  default: return "";
  }
}

const char* infix(Kind k) {
  switch (k) {
  case Kind::And: return " /\\ ";
  case Kind::Or: return " \\/ ";
  case Kind::Implies: return " -> ";
  default: return "";
  }
}

void renderInto(const TemporalFormula& f, std::string& out) {
  switch (f.kind()) {
  case Kind::Atom: out += f.atom().key(); return;
  case Kind::True: out += "true"; return;
  case Kind::False: out += "false"; return;
  default: break;
  }
  if (f.isUnary()) {
    out += prefix(f);
    bool paren = f.left().isBinary();
    if (paren) out += '(';
    renderInto(f.left(), out);
    if (paren) out += ')';
    return;
  }
  // /\ and \/ associate to the left, -> to the right.
  bool rightAssoc = f.kind() == Kind::Implies;
  auto operand = [&](const TemporalFormula& child, bool rightSide) {
    bool paren = child.isBinary() && !(child.kind() == f.kind() && rightSide == rightAssoc);
    if (paren) out += '(';
    renderInto(child, out);
    if (paren) out += ')';
  };
  operand(f.left(), false);
  out += infix(f.kind());
  operand(f.right(), true);
}

void collect(const TemporalFormula& f, AtomSet& out) {
  if (f.kind() == Kind::Atom) {
    out.insert(f.atom());
    return;
  }
  if (f.isUnary())
    collect(f.left(), out);
  else if (f.isBinary()) {
    collect(f.left(), out);
    collect(f.right(), out);
  }
}

} // namespace

std::string render(const TemporalFormula& f) {
  std::string out;
  renderInto(f, out);
  return out;
}

AtomSet atoms(const TemporalFormula& f) {
  AtomSet out;
  collect(f, out);
  return out;
}

} // namespace plogic
