#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "plogic/parser.hpp"

namespace plogic {

// Rules of the cut-free intuitionistic sequent calculus for atoms, &, (+), *
// and -o. Contexts are multisets: no weakening, no contraction.
enum class Rule { Id, TensorR, TensorL, WithR, WithL1, WithL2, PlusR1, PlusR2, PlusL, LolliR, LolliL };

std::string_view ruleName(Rule r) noexcept;
std::optional<Rule> ruleFromName(std::string_view name) noexcept;

struct ProofTree {
  Rule rule;
  Sequent conclusion;
  std::vector<ProofTree> premises;

  friend bool operator==(const ProofTree&, const ProofTree&) = default;
};

// Thrown when proof search exceeds its node budget. Distinct from "not
// derivable": the search did not finish.
class ResourceLimit : public std::runtime_error {
public:
  explicit ResourceLimit(std::size_t budget)
      : std::runtime_error("proof search exceeded its budget of " + std::to_string(budget) + " nodes"),
        budget_(budget) {}
  std::size_t budget() const noexcept { return budget_; }

private:
  std::size_t budget_;
};

struct ProverOptions {
  std::size_t nodeBudget = 1'000'000;
};

// Complete backward search. Returns std::nullopt iff the sequent has no
// derivation; the returned tree's root conclusion is `sequent` as given.
std::optional<ProofTree> prove(const Sequent& sequent, const ProverOptions& options = {});

// True iff |- goal is derivable.
bool derivable(const LinearFormula& goal, const ProverOptions& options = {});

struct CheckResult {
  bool accepted = true;
  // Dot-separated premise indices from the root to the offending node;
  // "root" for the root itself.
  std::string path;
  std::string reason;

  explicit operator bool() const noexcept { return accepted; }
};

// Local rule-instance check of every node; does no search.
CheckResult checkProof(const ProofTree& proof);

// One node per line, "Rule | sequent", children indented two spaces deeper
// than their parent.
std::string serializeProof(const ProofTree& proof);
ProofTree parseProof(std::string_view text);

} // namespace plogic
