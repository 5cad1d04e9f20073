#include "plogic/linear_prover.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <memory>
#include <utility>

namespace plogic {

namespace {

using Kind = LinearFormula::Kind;
using Context = std::vector<LinearFormula>;

constexpr std::array<std::pair<Rule, std::string_view>, 11> kRuleNames{{
    {Rule::Id, "Id"},
    {Rule::TensorR, "TensorR"},
    {Rule::TensorL, "TensorL"},
    {Rule::WithR, "WithR"},
    {Rule::WithL1, "WithL1"},
    {Rule::WithL2, "WithL2"},
    {Rule::PlusR1, "PlusR1"},
    {Rule::PlusR2, "PlusR2"},
    {Rule::PlusL, "PlusL"},
    {Rule::LolliR, "LolliR"},
    {Rule::LolliL, "LolliL"},
}};

Context sorted(Context c) {
  std::sort(c.begin(), c.end());
  return c;
}

Context without(const Context& c, std::size_t index) {
  Context out;
  out.reserve(c.size());
  for (std::size_t i = 0; i < c.size(); ++i)
    if (i != index)
      out.push_back(c[i]);
  return out;
}

Context with(Context c, std::initializer_list<LinearFormula> extra) {
  for (const auto& f : extra)
    c.insert(std::upper_bound(c.begin(), c.end(), f), f);
  return c;
}

struct Key {
  Context context;
  LinearFormula goal;

  friend bool operator<(const Key& a, const Key& b) {
    if (auto c = a.context <=> b.context; c != 0)
      return c < 0;
    return a.goal < b.goal;
  }
};

using ProofPtr = std::shared_ptr<const ProofTree>;

// Backward search. Invertible rules (LolliR, WithR, TensorL, PlusL) are
// applied eagerly to the first applicable formula; the remaining rules are
// tried exhaustively. Every rule shrinks the sequent, so the search ends.
class Prover {
public:
  explicit Prover(const ProverOptions& options) : budget_(options.nodeBudget) {}

  ProofPtr search(const Context& ctx, const LinearFormula& goal) {
    Key key{ctx, goal};
    if (auto it = memo_.find(key); it != memo_.end())
      return it->second;
    if (++nodes_ > budget_)
      throw ResourceLimit(budget_);
    ProofPtr result = searchUncached(ctx, goal);
    memo_.emplace(std::move(key), result);
    return result;
  }

private:
  static ProofPtr node(Rule r, const Context& ctx, const LinearFormula& goal,
                       std::vector<ProofPtr> premises) {
    ProofTree t{r, Sequent{ctx, goal}, {}};
    t.premises.reserve(premises.size());
    for (auto& p : premises)
      t.premises.push_back(*p);
    return std::make_shared<const ProofTree>(std::move(t));
  }

  ProofPtr searchUncached(const Context& ctx, const LinearFormula& goal) {
    // Invertible right rules.
    if (goal.kind() == Kind::Lolli) {
      auto p = search(with(ctx, {goal.left()}), goal.right());
      return p ? node(Rule::LolliR, ctx, goal, {p}) : nullptr;
    }
    if (goal.kind() == Kind::With) {
      auto p = search(ctx, goal.left());
      if (!p)
        return nullptr;
      auto q = search(ctx, goal.right());
      return q ? node(Rule::WithR, ctx, goal, {p, q}) : nullptr;
    }
    // Invertible left rules.
    for (std::size_t i = 0; i < ctx.size(); ++i) {
      const LinearFormula& f = ctx[i];
      if (f.kind() == Kind::Tensor) {
        auto p = search(with(without(ctx, i), {f.left(), f.right()}), goal);
        return p ? node(Rule::TensorL, ctx, goal, {p}) : nullptr;
      }
      if (f.kind() == Kind::Plus) {
        Context rest = without(ctx, i);
        auto p = search(with(rest, {f.left()}), goal);
        if (!p)
          return nullptr;
        auto q = search(with(rest, {f.right()}), goal);
        return q ? node(Rule::PlusL, ctx, goal, {p, q}) : nullptr;
      }
    }

    // Remaining context holds only atoms, & and -o formulas.
    if (goal.isAtom() && ctx.size() == 1 && ctx[0] == goal)
      return node(Rule::Id, ctx, goal, {});

    if (goal.kind() == Kind::Tensor) {
      ProofPtr found;
      forEachSplit(ctx, [&](const Context& left, const Context& right) {
        auto p = search(left, goal.left());
        if (!p)
          return false;
        auto q = search(right, goal.right());
        if (!q)
          return false;
        found = node(Rule::TensorR, ctx, goal, {p, q});
        return true;
      });
      if (found)
        return found;
    }
    if (goal.kind() == Kind::Plus) {
      if (auto p = search(ctx, goal.left()))
        return node(Rule::PlusR1, ctx, goal, {p});
      if (auto p = search(ctx, goal.right()))
        return node(Rule::PlusR2, ctx, goal, {p});
    }

    for (std::size_t i = 0; i < ctx.size(); ++i) {
      if (i > 0 && ctx[i] == ctx[i - 1])
        continue;
      const LinearFormula& f = ctx[i];
      if (f.kind() == Kind::With) {
        Context rest = without(ctx, i);
        if (auto p = search(with(rest, {f.left()}), goal))
          return node(Rule::WithL1, ctx, goal, {p});
        if (auto p = search(with(rest, {f.right()}), goal))
          return node(Rule::WithL2, ctx, goal, {p});
      } else if (f.kind() == Kind::Lolli) {
        ProofPtr found;
        forEachSplit(without(ctx, i), [&](const Context& left, const Context& right) {
          auto p = search(left, f.left());
          if (!p)
            return false;
          auto q = search(with(right, {f.right()}), goal);
          if (!q)
            return false;
          found = node(Rule::LolliL, ctx, goal, {p, q});
          return true;
        });
        if (found)
          return found;
      }
    }
    return nullptr;
  }

  // Calls visit(left, right) for every way of splitting the sorted multiset
  // ctx in two, each distinct split once, until visit returns true.
  template <class Visit>
  void forEachSplit(const Context& ctx, Visit&& visit) {
    std::vector<std::pair<std::size_t, std::size_t>> groups; // (first index, count)
    for (std::size_t i = 0; i < ctx.size(); ++i) {
      if (i > 0 && ctx[i] == ctx[i - 1])
        ++groups.back().second;
      else
        groups.emplace_back(i, 1);
    }
    std::vector<std::size_t> take(groups.size(), 0);
    while (true) {
      Context left, right;
      for (std::size_t g = 0; g < groups.size(); ++g) {
        auto [first, count] = groups[g];
        for (std::size_t j = 0; j < count; ++j)
          (j < take[g] ? left : right).push_back(ctx[first + j]);
      }
      if (visit(left, right))
        return;
      std::size_t g = 0;
      while (g < groups.size() && take[g] == groups[g].second)
        take[g++] = 0;
      if (g == groups.size())
        return;
      ++take[g];
    }
  }

  std::size_t budget_;
  std::size_t nodes_ = 0;
  std::map<Key, ProofPtr> memo_;
};

// --- checking ---

bool sameMultiset(Context a, Context b) { return sorted(std::move(a)) == sorted(std::move(b)); }

Context concat(const Context& a, const Context& b) {
  Context out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Context plus(Context c, const LinearFormula& f) {
  c.push_back(f);
  return c;
}

std::string checkNode(const ProofTree& t) {
  const Context& ctx = t.conclusion.context;
  const LinearFormula& goal = t.conclusion.goal;
  const auto& ps = t.premises;
  auto arity = [&](std::size_t n) -> std::string {
    if (ps.size() != n)
      return std::string(ruleName(t.rule)) + " needs " + std::to_string(n) + " premise(s), found " +
             std::to_string(ps.size());
    return {};
  };
  auto someContextFormula = [&](Kind k, auto&& accepts) {
    for (std::size_t i = 0; i < ctx.size(); ++i)
      if (ctx[i].kind() == k && accepts(ctx[i], without(ctx, i)))
        return true;
    return false;
  };

  switch (t.rule) {
  case Rule::Id:
    if (auto e = arity(0); !e.empty())
      return e;
    if (!goal.isAtom())
      return "Id requires an atomic formula";
    if (ctx.size() != 1 || !(ctx[0] == goal))
      return "Id requires the context to be exactly the goal atom";
    return {};
  case Rule::TensorR:
    if (auto e = arity(2); !e.empty())
      return e;
    if (goal.kind() != Kind::Tensor)
      return "TensorR requires a tensor goal";
    if (!(ps[0].conclusion.goal == goal.left()) || !(ps[1].conclusion.goal == goal.right()))
      return "TensorR premise goals must be the tensor's operands";
    if (!sameMultiset(concat(ps[0].conclusion.context, ps[1].conclusion.context), ctx))
      return "TensorR premise contexts do not partition the conclusion context";
    return {};
  case Rule::TensorL:
    if (auto e = arity(1); !e.empty())
      return e;
    if (!(ps[0].conclusion.goal == goal))
      return "TensorL must keep the goal";
    if (!someContextFormula(Kind::Tensor, [&](const LinearFormula& f, Context rest) {
          return sameMultiset(plus(plus(std::move(rest), f.left()), f.right()), ps[0].conclusion.context);
        }))
      return "TensorL premise is not the conclusion with a tensor split into its operands";
    return {};
  case Rule::WithR:
    if (auto e = arity(2); !e.empty())
      return e;
    if (goal.kind() != Kind::With)
      return "WithR requires a & goal";
    if (!(ps[0].conclusion.goal == goal.left()) || !(ps[1].conclusion.goal == goal.right()))
      return "WithR premise goals must be the &'s operands";
    if (!sameMultiset(ps[0].conclusion.context, ctx) || !sameMultiset(ps[1].conclusion.context, ctx))
      return "WithR premises must share the conclusion context";
    return {};
  case Rule::WithL1:
  case Rule::WithL2: {
    if (auto e = arity(1); !e.empty())
      return e;
    if (!(ps[0].conclusion.goal == goal))
      return std::string(ruleName(t.rule)) + " must keep the goal";
    bool first = t.rule == Rule::WithL1;
    if (!someContextFormula(Kind::With, [&](const LinearFormula& f, Context rest) {
          return sameMultiset(plus(std::move(rest), first ? f.left() : f.right()), ps[0].conclusion.context);
        }))
      return std::string(ruleName(t.rule)) + " premise does not select the " +
             (first ? "left" : "right") + " operand of a & in the context";
    return {};
  }
  case Rule::PlusR1:
  case Rule::PlusR2:
    if (auto e = arity(1); !e.empty())
      return e;
    if (goal.kind() != Kind::Plus)
      return std::string(ruleName(t.rule)) + " requires a (+) goal";
    if (!(ps[0].conclusion.goal == (t.rule == Rule::PlusR1 ? goal.left() : goal.right())))
      return std::string(ruleName(t.rule)) + " premise goal is not the selected operand";
    if (!sameMultiset(ps[0].conclusion.context, ctx))
      return std::string(ruleName(t.rule)) + " must keep the context";
    return {};
  case Rule::PlusL:
    if (auto e = arity(2); !e.empty())
      return e;
    if (!(ps[0].conclusion.goal == goal) || !(ps[1].conclusion.goal == goal))
      return "PlusL must keep the goal in both premises";
    if (!someContextFormula(Kind::Plus, [&](const LinearFormula& f, const Context& rest) {
          return sameMultiset(plus(rest, f.left()), ps[0].conclusion.context) &&
                 sameMultiset(plus(rest, f.right()), ps[1].conclusion.context);
        }))
      return "PlusL premises do not case-split a (+) in the context";
    return {};
  case Rule::LolliR:
    if (auto e = arity(1); !e.empty())
      return e;
    if (goal.kind() != Kind::Lolli)
      return "LolliR requires a -o goal";
    if (!(ps[0].conclusion.goal == goal.right()))
      return "LolliR premise goal must be the consequent";
    if (!sameMultiset(plus(ctx, goal.left()), ps[0].conclusion.context))
      return "LolliR premise context must be the conclusion context plus the antecedent";
    return {};
  case Rule::LolliL:
    if (auto e = arity(2); !e.empty())
      return e;
    if (!(ps[1].conclusion.goal == goal))
      return "LolliL right premise must keep the goal";
    if (!someContextFormula(Kind::Lolli, [&](const LinearFormula& f, const Context& rest) {
          if (!(ps[0].conclusion.goal == f.left()))
            return false;
          const Context& rightCtx = ps[1].conclusion.context;
          auto it = std::find(rightCtx.begin(), rightCtx.end(), f.right());
          if (it == rightCtx.end())
            return false;
          Context delta = without(rightCtx, static_cast<std::size_t>(it - rightCtx.begin()));
          return sameMultiset(concat(ps[0].conclusion.context, delta), rest);
        }))
      return "LolliL premises do not match a -o in the context with a partition of the rest";
    return {};
  }
  return "unknown rule";
}

CheckResult checkAt(const ProofTree& t, const std::string& path) {
  if (auto reason = checkNode(t); !reason.empty())
    return CheckResult{false, path, reason};
  for (std::size_t i = 0; i < t.premises.size(); ++i) {
    auto r = checkAt(t.premises[i], path == "root" ? std::to_string(i) : path + "." + std::to_string(i));
    if (!r)
      return r;
  }
  return {};
}

void serializeInto(const ProofTree& t, std::size_t depth, std::string& out) {
  out.append(2 * depth, ' ');
  out += ruleName(t.rule);
  out += " | ";
  out += render(t.conclusion);
  out += '\n';
  for (const auto& p : t.premises)
    serializeInto(p, depth + 1, out);
}

} // namespace

std::string_view ruleName(Rule r) noexcept {
  for (auto [rule, name] : kRuleNames)
    if (rule == r)
      return name;
  return "?";
}

std::optional<Rule> ruleFromName(std::string_view name) noexcept {
  for (auto [rule, n] : kRuleNames)
    if (n == name)
      return rule;
  return std::nullopt;
}

std::optional<ProofTree> prove(const Sequent& sequent, const ProverOptions& options) {
  Prover prover(options);
  auto proof = prover.search(sorted(sequent.context), sequent.goal);
  if (!proof)
    return std::nullopt;
  ProofTree root = *proof;
  root.conclusion = sequent;
  return root;
}

bool derivable(const LinearFormula& goal, const ProverOptions& options) {
  return prove(Sequent{{}, goal}, options).has_value();
}

CheckResult checkProof(const ProofTree& proof) { return checkAt(proof, "root"); }

std::string serializeProof(const ProofTree& proof) {
  std::string out;
  serializeInto(proof, 0, out);
  return out;
}

ProofTree parseProof(std::string_view text) {
  struct Pending {
    std::size_t depth;
    ProofTree tree;
  };
  std::vector<Pending> stack;
  std::optional<ProofTree> root;

  auto closeTo = [&](std::size_t depth) {
    while (!stack.empty() && stack.back().depth >= depth) {
      Pending done = std::move(stack.back());
      stack.pop_back();
      if (stack.empty())
        root = std::move(done.tree);
      else
        stack.back().tree.premises.push_back(std::move(done.tree));
    }
  };

  std::size_t lineStart = 0;
  while (lineStart < text.size()) {
    std::size_t lineEnd = text.find('\n', lineStart);
    if (lineEnd == std::string_view::npos)
      lineEnd = text.size();
    std::string_view line = text.substr(lineStart, lineEnd - lineStart);
    if (!line.empty() && line.back() == '\r')
      line.remove_suffix(1);
    std::size_t indent = line.find_first_not_of(' ');
    if (indent != std::string_view::npos) {
      auto error = [&](std::size_t col, std::string msg) {
        return ParseError::at(text, lineStart + col, std::move(msg));
      };
      if (indent % 2 != 0)
        throw error(indent, "indentation must be a multiple of two spaces");
      std::size_t depth = indent / 2;
      if (root || (stack.empty() && depth != 0))
        throw error(indent, "proof must have exactly one root at indentation 0");
      if (!stack.empty() && depth > stack.back().depth + 1)
        throw error(indent, "child indented more than one level below its parent");
      std::size_t bar = line.find(" | ", indent);
      if (bar == std::string_view::npos)
        throw error(indent, "expected 'Rule | sequent'");
      auto rule = ruleFromName(line.substr(indent, bar - indent));
      if (!rule)
        throw error(indent, "unknown rule '" + std::string(line.substr(indent, bar - indent)) + "'");
      Sequent seq = [&] {
        try {
          return parseSequent(line.substr(bar + 3));
        } catch (const ParseError& e) {
          throw error(bar + 3 + e.byteOffset(), e.message());
        }
      }();
      closeTo(depth);
      if (root)
        throw error(indent, "proof must have exactly one root at indentation 0");
      stack.push_back({depth, ProofTree{*rule, std::move(seq), {}}});
    }
    lineStart = lineEnd + 1;
  }
  closeTo(0);
  if (!root)
    throw ParseError::at(text, text.size(), "empty proof");
  return *root;
}

} // namespace plogic
