#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "plogic/free_formula.hpp"

namespace plogic {

// Finite first-order structure. Domain order is significant: it fixes which
// satisfier an epsilon term picks.
class Model {
public:
  using Tuple = std::vector<std::string>;
  using PredicateKey = std::pair<std::string, std::size_t>; // (name, arity)

  // Throws std::invalid_argument on an empty domain or duplicate individuals.
  explicit Model(std::vector<std::string> domain);

  // Throws std::invalid_argument if a tuple has the wrong arity or mentions an
  // individual outside the domain, or if the predicate was already declared.
  void addPredicate(std::string name, std::size_t arity, std::set<Tuple> extension);

  const std::vector<std::string>& domain() const noexcept { return domain_; }
  bool inDomain(std::string_view individual) const;
  // nullptr if (name, arity) is not declared.
  const std::set<Tuple>* extension(const std::string& name, std::size_t arity) const;
  const std::map<PredicateKey, std::set<Tuple>>& predicates() const noexcept { return predicates_; }

  // Same predicates, domain listed in a different order. `order` must be a
  // permutation of domain().
  Model reordered(std::vector<std::string> order) const;

private:
  std::vector<std::string> domain_;
  std::map<PredicateKey, std::set<Tuple>> predicates_;
};

// Value(individual) or NonDenoting.
class Denotation {
public:
  static Denotation value(std::string individual) { return Denotation(std::move(individual)); }
  static Denotation nonDenoting() { return Denotation(std::nullopt); }

  bool denotes() const noexcept { return individual_.has_value(); }
  // Precondition: denotes().
  const std::string& individual() const { return *individual_; }

  friend bool operator==(const Denotation&, const Denotation&) = default;

private:
  explicit Denotation(std::optional<std::string> v) : individual_(std::move(v)) {}
  std::optional<std::string> individual_;
};

// Variables only ever range over denoting values.
using Environment = std::map<std::string, std::string>;

class EvalError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Var -> its binding; iota -> the unique satisfier, if exactly one exists;
// eps -> the first satisfier in domain order, if any. Throws EvalError on an
// unbound variable or an undeclared predicate.
Denotation evalTerm(const Model& model, const Environment& env, const FreeTerm& term);

// Negative free logic: an atom with a non-denoting argument is false, and
// equality holds only between two denoting terms with the same value.
// Quantifiers range over the domain only.
bool evalFormula(const Model& model, const Environment& env, const FreeFormula& formula);

// evalFormula with an empty environment. Throws EvalError if the formula has
// free variables.
bool checkSentence(const Model& model, const FreeFormula& formula);

// Model file: "domain: a b c" exactly once, then "pred name/n: t1 t2 ..."
// lines whose tuples are comma-joined individuals; "#" comments. Throws
// ParseError.
Model parseModel(std::string_view text);

} // namespace plogic
