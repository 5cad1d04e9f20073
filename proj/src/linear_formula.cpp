#include "plogic/linear_formula.hpp"

#include <stdexcept>

namespace plogic {

LinearFormula LinearFormula::atom(PronounAtom a) {
  return LinearFormula(std::make_shared<const Node>(
      Node{Kind::Atom, std::make_shared<const PronounAtom>(std::move(a)), nullptr, 1}));
}

LinearFormula LinearFormula::binary(Kind kind, LinearFormula l, LinearFormula r) {
  if (kind == Kind::Atom)
    throw std::invalid_argument("LinearFormula::binary called with Kind::Atom");
  std::size_t n = 1 + size(l) + size(r);
  return LinearFormula(std::make_shared<const Node>(
      Node{kind, nullptr,
           std::make_shared<const std::pair<LinearFormula, LinearFormula>>(std::move(l), std::move(r)),
           n}));
}

LinearFormula LinearFormula::with(LinearFormula l, LinearFormula r) {
  return binary(Kind::With, std::move(l), std::move(r));
}
LinearFormula LinearFormula::plus(LinearFormula l, LinearFormula r) {
  return binary(Kind::Plus, std::move(l), std::move(r));
}
LinearFormula LinearFormula::tensor(LinearFormula l, LinearFormula r) {
  return binary(Kind::Tensor, std::move(l), std::move(r));
}
LinearFormula LinearFormula::lolli(LinearFormula antecedent, LinearFormula consequent) {
  return binary(Kind::Lolli, std::move(antecedent), std::move(consequent));
}

bool operator==(const LinearFormula& a, const LinearFormula& b) {
  if (a.node_ == b.node_)
    return true;
  if (a.kind() != b.kind() || size(a) != size(b))
    return false;
  if (a.isAtom())
    return a.atom() == b.atom();
  return a.left() == b.left() && a.right() == b.right();
}

std::strong_ordering operator<=>(const LinearFormula& a, const LinearFormula& b) {
  if (a.node_ == b.node_)
    return std::strong_ordering::equal;
  if (auto c = a.kind() <=> b.kind(); c != 0)
    return c;
  if (a.isAtom())
    return a.atom() <=> b.atom();
  if (auto c = a.left() <=> b.left(); c != 0)
    return c;
  return a.right() <=> b.right();
}

std::size_t size(const LinearFormula& f) noexcept { return f.node_->size; }

const char* operatorToken(LinearFormula::Kind kind) noexcept {
  switch (kind) {
  case LinearFormula::Kind::With: return "&";
  case LinearFormula::Kind::Plus: return "(+)";
  case LinearFormula::Kind::Tensor: return "*";
  case LinearFormula::Kind::Lolli: return "-o";
  case LinearFormula::Kind::Atom: break;
  }
  return "";
}

namespace {

// All linear connectives are right-associative. An operand is bare only when
// it is an atom, or the same connective sitting in right position.
void renderInto(const LinearFormula& f, std::string& out) {
  if (f.isAtom()) {
    out += f.atom().key();
    return;
  }
  auto operand = [&](const LinearFormula& child, bool rightSide) {
    bool bare = child.isAtom() || (rightSide && child.kind() == f.kind());
    if (!bare)
      out += '(';
    renderInto(child, out);
    if (!bare)
      out += ')';
  };
  operand(f.left(), false);
  out += ' ';
  out += operatorToken(f.kind());
  out += ' ';
  operand(f.right(), true);
}

void collect(const LinearFormula& f, AtomSet& out) {
  if (f.isAtom()) {
    out.insert(f.atom());
    return;
  }
  collect(f.left(), out);
  collect(f.right(), out);
}

} // namespace

std::string render(const LinearFormula& f) {
  std::string out;
  renderInto(f, out);
  return out;
}

AtomSet atoms(const LinearFormula& f) {
  AtomSet out;
  collect(f, out);
  return out;
}

} // namespace plogic
