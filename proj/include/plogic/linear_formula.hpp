#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <string>

#include "plogic/atom.hpp"

namespace plogic {

// Descriptor of the linear pronoun logic: atoms combined with & (speaker's
// choice), (+) (referent's choice), * (both) and -o (correction).
//
// Values are immutable and share structure; copying is cheap.
class LinearFormula {
public:
  enum class Kind { Atom, With, Plus, Tensor, Lolli };

  static LinearFormula atom(PronounAtom a);
  static LinearFormula with(LinearFormula l, LinearFormula r);
  static LinearFormula plus(LinearFormula l, LinearFormula r);
  static LinearFormula tensor(LinearFormula l, LinearFormula r);
  static LinearFormula lolli(LinearFormula antecedent, LinearFormula consequent);
  static LinearFormula binary(Kind kind, LinearFormula l, LinearFormula r);

  Kind kind() const noexcept { return node_->kind; }
  bool isAtom() const noexcept { return node_->kind == Kind::Atom; }
  // Precondition: isAtom().
  const PronounAtom& atom() const { return *node_->atom; }
  // Precondition: !isAtom().
  const LinearFormula& left() const { return node_->children->first; }
  const LinearFormula& right() const { return node_->children->second; }

  // Structural, order-sensitive comparison. Tensor(a,b) != Tensor(b,a).
  friend bool operator==(const LinearFormula& a, const LinearFormula& b);
  friend std::strong_ordering operator<=>(const LinearFormula& a, const LinearFormula& b);

private:
  struct Node {
    Kind kind;
    std::shared_ptr<const PronounAtom> atom;
    std::shared_ptr<const std::pair<LinearFormula, LinearFormula>> children;
    std::size_t size;
  };
  explicit LinearFormula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  std::shared_ptr<const Node> node_;

  friend std::size_t size(const LinearFormula& f) noexcept;
};

std::size_t size(const LinearFormula& f) noexcept;
std::string render(const LinearFormula& f);
AtomSet atoms(const LinearFormula& f);

const char* operatorToken(LinearFormula::Kind kind) noexcept;

} // namespace plogic
