#include "plogic/free_formula.hpp"

#include <optional>
#include <stdexcept>

namespace plogic {

struct FreeTerm::Node {
  Kind kind;
  std::string name;
  std::optional<FreeFormula> body;
  std::size_t size;
};

struct FreeFormula::Node {
  Kind kind;
  std::string name;
  std::vector<FreeTerm> terms;
  std::vector<FreeFormula> children;
  std::size_t size;
};

// Terms

FreeTerm FreeTerm::var(std::string name) {
  return FreeTerm(std::make_shared<const Node>(Node{Kind::Var, std::move(name), std::nullopt, 1}));
}
FreeTerm FreeTerm::iota(std::string boundVar, FreeFormula body) {
  std::size_t n = 1 + size(body);
  return FreeTerm(std::make_shared<const Node>(Node{Kind::Iota, std::move(boundVar), std::move(body), n}));
}
FreeTerm FreeTerm::epsilon(std::string boundVar, FreeFormula body) {
  std::size_t n = 1 + size(body);
  return FreeTerm(
      std::make_shared<const Node>(Node{Kind::Epsilon, std::move(boundVar), std::move(body), n}));
}

FreeTerm::Kind FreeTerm::kind() const noexcept { return node_->kind; }
const std::string& FreeTerm::name() const noexcept { return node_->name; }
const FreeFormula& FreeTerm::body() const {
  if (!node_->body)
    throw std::logic_error("FreeTerm::body on a variable");
  return *node_->body;
}

std::size_t size(const FreeTerm& t) noexcept { return t.node_->size; }

bool operator==(const FreeTerm& a, const FreeTerm& b) {
  if (a.node_ == b.node_)
    return true;
  return a.kind() == b.kind() && a.name() == b.name() && a.node_->body == b.node_->body;
}

std::strong_ordering operator<=>(const FreeTerm& a, const FreeTerm& b) {
  if (auto c = a.kind() <=> b.kind(); c != 0)
    return c;
  if (auto c = a.name() <=> b.name(); c != 0)
    return c;
  if (a.kind() == FreeTerm::Kind::Var)
    return std::strong_ordering::equal;
  return a.body() <=> b.body();
}

// Formulas

FreeFormula FreeFormula::pred(std::string name, std::vector<FreeTerm> args) {
  if (args.empty())
    throw std::invalid_argument("predicate '" + name + "' needs at least one argument");
  std::size_t n = 1;
  for (const auto& a : args)
    n += size(a);
  return FreeFormula(std::make_shared<const Node>(Node{Kind::Pred, std::move(name), std::move(args), {}, n}));
}

FreeFormula FreeFormula::eq(FreeTerm l, FreeTerm r) {
  std::size_t n = 1 + size(l) + size(r);
  return FreeFormula(
      std::make_shared<const Node>(Node{Kind::Eq, "", {std::move(l), std::move(r)}, {}, n}));
}

FreeFormula FreeFormula::negation(FreeFormula f) {
  std::size_t n = 1 + size(f);
  return FreeFormula(std::make_shared<const Node>(Node{Kind::Not, "", {}, {std::move(f)}, n}));
}

FreeFormula FreeFormula::binary(Kind kind, FreeFormula l, FreeFormula r) {
  if (kind != Kind::And && kind != Kind::Or && kind != Kind::Implies)
    throw std::invalid_argument("FreeFormula::binary: not a binary kind");
  std::size_t n = 1 + size(l) + size(r);
  return FreeFormula(
      std::make_shared<const Node>(Node{kind, "", {}, {std::move(l), std::move(r)}, n}));
}

FreeFormula FreeFormula::quantifier(Kind kind, std::string var, FreeFormula body) {
  if (kind != Kind::Forall && kind != Kind::Exists)
    throw std::invalid_argument("FreeFormula::quantifier: not a quantifier kind");
  std::size_t n = 1 + size(body);
  return FreeFormula(
      std::make_shared<const Node>(Node{kind, std::move(var), {}, {std::move(body)}, n}));
}

FreeFormula FreeFormula::conj(FreeFormula l, FreeFormula r) { return binary(Kind::And, std::move(l), std::move(r)); }
FreeFormula FreeFormula::disj(FreeFormula l, FreeFormula r) { return binary(Kind::Or, std::move(l), std::move(r)); }
FreeFormula FreeFormula::implies(FreeFormula l, FreeFormula r) {
  return binary(Kind::Implies, std::move(l), std::move(r));
}
FreeFormula FreeFormula::forall(std::string var, FreeFormula body) {
  return quantifier(Kind::Forall, std::move(var), std::move(body));
}
FreeFormula FreeFormula::exists(std::string var, FreeFormula body) {
  return quantifier(Kind::Exists, std::move(var), std::move(body));
}

FreeFormula::Kind FreeFormula::kind() const noexcept { return node_->kind; }
const std::string& FreeFormula::name() const noexcept { return node_->name; }
const std::vector<FreeTerm>& FreeFormula::terms() const noexcept { return node_->terms; }
const FreeFormula& FreeFormula::left() const { return node_->children.at(0); }
const FreeFormula& FreeFormula::right() const { return node_->children.at(1); }
bool FreeFormula::isBinary() const noexcept {
  return kind() == Kind::And || kind() == Kind::Or || kind() == Kind::Implies;
}
bool FreeFormula::isQuantifier() const noexcept {
  return kind() == Kind::Forall || kind() == Kind::Exists;
}

std::size_t size(const FreeFormula& f) noexcept { return f.node_->size; }

bool operator==(const FreeFormula& a, const FreeFormula& b) {
  if (a.node_ == b.node_)
    return true;
  return a.kind() == b.kind() && size(a) == size(b) && a.name() == b.name() &&
         a.terms() == b.terms() && a.node_->children == b.node_->children;
}

std::strong_ordering operator<=>(const FreeFormula& a, const FreeFormula& b) {
  if (auto c = a.kind() <=> b.kind(); c != 0)
    return c;
  if (auto c = a.name() <=> b.name(); c != 0)
    return c;
  if (auto c = a.terms() <=> b.terms(); c != 0)
    return c;
  return a.node_->children <=> b.node_->children;
}

// Rendering. Binder bodies (quantifiers and descriptions) extend as far right
// as possible, so anything that ends in a binder is parenthesized when
// something follows it.

namespace {

using FK = FreeFormula::Kind;

void renderFormula(const FreeFormula& f, std::string& out);

void renderTerm(const FreeTerm& t, std::string& out) {
  switch (t.kind()) {
  case FreeTerm::Kind::Var:
    out += t.name();
    return;
  case FreeTerm::Kind::Iota:
    out += "iota ";
    break;
  case FreeTerm::Kind::Epsilon:
    out += "eps ";
    break;
  }
  out += t.name();
  out += ". ";
  renderFormula(t.body(), out);
}

bool leftAssociative(FK k) { return k == FK::And || k == FK::Or; }

bool bareOperand(const FreeFormula& parent, const FreeFormula& child, bool rightSide) {
  if (!child.isBinary())
    return true;
  return child.kind() == parent.kind() && rightSide != leftAssociative(parent.kind());
}

bool endsOpen(const FreeFormula& f) {
  if (f.isQuantifier())
    return true;
  if (f.kind() == FK::Not)
    return endsOpen(f.left());
  if (f.isBinary())
    return bareOperand(f, f.right(), true) && endsOpen(f.right());
  return false;
}

const char* infix(FK k) {
  switch (k) {
  case FK::And: return " /\\ ";
  case FK::Or: return " \\/ ";
  case FK::Implies: return " -> ";
  default: return "";
  }
}

void renderFormula(const FreeFormula& f, std::string& out) {
  switch (f.kind()) {
  case FK::Pred: {
    out += f.name();
    out += '(';
    bool first = true;
    for (const auto& t : f.terms()) {
      if (!first)
        out += ", ";
      first = false;
      renderTerm(t, out);
    }
    out += ')';
    return;
  }
  case FK::Eq: {
    auto side = [&](const FreeTerm& t) {
      bool paren = t.kind() != FreeTerm::Kind::Var;
      if (paren) out += '(';
      renderTerm(t, out);
      if (paren) out += ')';
    };
    side(f.terms()[0]);
    out += " = ";
    side(f.terms()[1]);
    return;
  }
  case FK::Not: {
    out += '!';
    bool paren = f.left().isBinary();
    if (paren) out += '(';
    renderFormula(f.left(), out);
    if (paren) out += ')';
    return;
  }
  case FK::Forall:
  case FK::Exists:
    out += f.kind() == FK::Forall ? "forall " : "exists ";
    out += f.name();
    out += ". ";
    renderFormula(f.left(), out);
    return;
  case FK::And:
  case FK::Or:
  case FK::Implies: {
    bool lparen = !bareOperand(f, f.left(), false) || endsOpen(f.left());
    if (lparen) out += '(';
    renderFormula(f.left(), out);
    if (lparen) out += ')';
    out += infix(f.kind());
    bool rparen = !bareOperand(f, f.right(), true);
    if (rparen) out += '(';
    renderFormula(f.right(), out);
    if (rparen) out += ')';
    return;
  }
  }
}

void freeVarsTerm(const FreeTerm& t, std::set<std::string>& bound, std::set<std::string>& out);

void freeVarsFormula(const FreeFormula& f, std::set<std::string>& bound, std::set<std::string>& out) {
  auto underBinder = [&](const std::string& var, const FreeFormula& body) {
    bool fresh = bound.insert(var).second;
    freeVarsFormula(body, bound, out);
    if (fresh)
      bound.erase(var);
  };
  switch (f.kind()) {
  case FK::Pred:
  case FK::Eq:
    for (const auto& t : f.terms())
      freeVarsTerm(t, bound, out);
    return;
  case FK::Not:
    freeVarsFormula(f.left(), bound, out);
    return;
  case FK::Forall:
  case FK::Exists:
    underBinder(f.name(), f.left());
    return;
  default:
    freeVarsFormula(f.left(), bound, out);
    freeVarsFormula(f.right(), bound, out);
  }
}

void freeVarsTerm(const FreeTerm& t, std::set<std::string>& bound, std::set<std::string>& out) {
  if (t.kind() == FreeTerm::Kind::Var) {
    if (!bound.count(t.name()))
      out.insert(t.name());
    return;
  }
  bool fresh = bound.insert(t.name()).second;
  freeVarsFormula(t.body(), bound, out);
  if (fresh)
    bound.erase(t.name());
}

void aritiesFormula(const FreeFormula& f, std::map<std::string, std::size_t>& out);

void aritiesTerm(const FreeTerm& t, std::map<std::string, std::size_t>& out) {
  if (t.kind() != FreeTerm::Kind::Var)
    aritiesFormula(t.body(), out);
}

void aritiesFormula(const FreeFormula& f, std::map<std::string, std::size_t>& out) {
  switch (f.kind()) {
  case FK::Pred: {
    auto [it, inserted] = out.emplace(f.name(), f.terms().size());
    if (!inserted && it->second != f.terms().size())
      throw std::invalid_argument("predicate '" + f.name() + "' used with arities " +
                                  std::to_string(it->second) + " and " +
                                  std::to_string(f.terms().size()));
    [[fallthrough]];
  }
  case FK::Eq:
    for (const auto& t : f.terms())
      aritiesTerm(t, out);
    return;
  case FK::Not:
  case FK::Forall:
  case FK::Exists:
    aritiesFormula(f.left(), out);
    return;
  default:
    aritiesFormula(f.left(), out);
    aritiesFormula(f.right(), out);
  }
}

} // namespace

std::string render(const FreeTerm& t) {
  std::string out;
  renderTerm(t, out);
  return out;
}

std::string render(const FreeFormula& f) {
  std::string out;
  renderFormula(f, out);
  return out;
}

std::set<std::string> freeVariables(const FreeTerm& t) {
  std::set<std::string> bound, out;
  freeVarsTerm(t, bound, out);
  return out;
}

std::set<std::string> freeVariables(const FreeFormula& f) {
  std::set<std::string> bound, out;
  freeVarsFormula(f, bound, out);
  return out;
}

std::map<std::string, std::size_t> predicateArities(const FreeFormula& f) {
  std::map<std::string, std::size_t> out;
  aritiesFormula(f, out);
  return out;
}

} // namespace plogic
