#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace plogic {

class FreeFormula;

// Term of the free gender logic: a variable, or a definite (iota) or
// indefinite (epsilon) description binding one variable in a formula body.
class FreeTerm {
public:
  enum class Kind { Var, Iota, Epsilon };

  static FreeTerm var(std::string name);
  static FreeTerm iota(std::string boundVar, FreeFormula body);
  static FreeTerm epsilon(std::string boundVar, FreeFormula body);

  Kind kind() const noexcept;
  // Variable name for Var, bound variable for descriptions.
  const std::string& name() const noexcept;
  // Precondition: kind() != Var.
  const FreeFormula& body() const;

  friend bool operator==(const FreeTerm& a, const FreeTerm& b);
  friend std::strong_ordering operator<=>(const FreeTerm& a, const FreeTerm& b);

  struct Node;

private:
  explicit FreeTerm(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
  friend std::size_t size(const FreeTerm&) noexcept;
};

class FreeFormula {
public:
  enum class Kind { Pred, Eq, Not, And, Or, Implies, Forall, Exists };

  static FreeFormula pred(std::string name, std::vector<FreeTerm> args);
  static FreeFormula eq(FreeTerm l, FreeTerm r);
  static FreeFormula negation(FreeFormula f);
  static FreeFormula conj(FreeFormula l, FreeFormula r);
  static FreeFormula disj(FreeFormula l, FreeFormula r);
  static FreeFormula implies(FreeFormula l, FreeFormula r);
  static FreeFormula forall(std::string var, FreeFormula body);
  static FreeFormula exists(std::string var, FreeFormula body);
  static FreeFormula binary(Kind kind, FreeFormula l, FreeFormula r);
  static FreeFormula quantifier(Kind kind, std::string var, FreeFormula body);

  Kind kind() const noexcept;
  // Predicate name for Pred, bound variable for quantifiers.
  const std::string& name() const noexcept;
  // Pred arguments, or the two sides of Eq.
  const std::vector<FreeTerm>& terms() const noexcept;
  // Operand of Not/quantifiers, or left operand of a binary connective.
  const FreeFormula& left() const;
  const FreeFormula& right() const;

  bool isBinary() const noexcept;
  bool isQuantifier() const noexcept;

  friend bool operator==(const FreeFormula& a, const FreeFormula& b);
  friend std::strong_ordering operator<=>(const FreeFormula& a, const FreeFormula& b);

  struct Node;

private:
  explicit FreeFormula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
  friend std::size_t size(const FreeFormula&) noexcept;
};

std::size_t size(const FreeTerm& t) noexcept;
std::size_t size(const FreeFormula& f) noexcept;
std::string render(const FreeTerm& t);
std::string render(const FreeFormula& f);

std::set<std::string> freeVariables(const FreeTerm& t);
std::set<std::string> freeVariables(const FreeFormula& f);

// Name -> arity of every predicate used. Throws std::invalid_argument when a
// name is used with two different arities.
std::map<std::string, std::size_t> predicateArities(const FreeFormula& f);

} // namespace plogic
