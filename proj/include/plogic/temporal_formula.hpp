#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <string>

#include "plogic/atom.hpp"

namespace plogic {

// Descriptor of the linear-temporal pronoun logic over finite utterance
// traces. BoxK/DiamondK are the bounded modalities "for all / some of the
// next k utterances"; expandBounded() rewrites them away.
class TemporalFormula {
public:
  enum class Kind { Atom, True, False, Not, And, Or, Implies, Box, Diamond, Next, BoxK, DiamondK };

  static TemporalFormula atom(PronounAtom a);
  static TemporalFormula top();
  static TemporalFormula bottom();
  static TemporalFormula negation(TemporalFormula f);
  static TemporalFormula conj(TemporalFormula l, TemporalFormula r);
  static TemporalFormula disj(TemporalFormula l, TemporalFormula r);
  static TemporalFormula implies(TemporalFormula l, TemporalFormula r);
  static TemporalFormula box(TemporalFormula f);
  static TemporalFormula diamond(TemporalFormula f);
  static TemporalFormula next(TemporalFormula f);
  // k must be >= 1; throws std::invalid_argument otherwise.
  static TemporalFormula boxK(int k, TemporalFormula f);
  static TemporalFormula diamondK(int k, TemporalFormula f);

  static TemporalFormula unary(Kind kind, TemporalFormula f);
  static TemporalFormula binary(Kind kind, TemporalFormula l, TemporalFormula r);

  Kind kind() const noexcept;
  const PronounAtom& atom() const;
  // Operand of a unary node, or left operand of a binary node.
  const TemporalFormula& left() const;
  const TemporalFormula& right() const;
  // Only meaningful for BoxK/DiamondK.
  int bound() const noexcept;

  bool isUnary() const noexcept;
  bool isBinary() const noexcept;

  friend bool operator==(const TemporalFormula& a, const TemporalFormula& b);
  friend std::strong_ordering operator<=>(const TemporalFormula& a, const TemporalFormula& b);

  struct Node;

private:
  explicit TemporalFormula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;

  friend std::size_t size(const TemporalFormula& f) noexcept;
};

std::size_t size(const TemporalFormula& f) noexcept;
std::string render(const TemporalFormula& f);
AtomSet atoms(const TemporalFormula& f);

} // namespace plogic
