#include "plogic/free_logic.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "plogic/parser.hpp"

namespace plogic {

Model::Model(std::vector<std::string> domain) : domain_(std::move(domain)) {
  if (domain_.empty())
    throw std::invalid_argument("model domain must be nonempty");
  std::set<std::string> seen;
  for (const auto& d : domain_)
    if (!seen.insert(d).second)
      throw std::invalid_argument("duplicate individual '" + d + "' in domain");
}

bool Model::inDomain(std::string_view individual) const {
  return std::find(domain_.begin(), domain_.end(), individual) != domain_.end();
}

void Model::addPredicate(std::string name, std::size_t arity, std::set<Tuple> extension) {
  if (arity == 0)
    throw std::invalid_argument("predicate '" + name + "' must have arity >= 1");
  for (const auto& t : extension) {
    if (t.size() != arity)
      throw std::invalid_argument("tuple of wrong arity in predicate '" + name + "'");
    for (const auto& d : t)
      if (!inDomain(d))
        throw std::invalid_argument("unknown individual '" + d + "' in predicate '" + name + "'");
  }
  PredicateKey key{name, arity};
  if (predicates_.count(key))
    throw std::invalid_argument("predicate '" + name + "/" + std::to_string(arity) + "' declared twice");
  predicates_.emplace(std::move(key), std::move(extension));
}

const std::set<Model::Tuple>* Model::extension(const std::string& name, std::size_t arity) const {
  auto it = predicates_.find({name, arity});
  return it == predicates_.end() ? nullptr : &it->second;
}

Model Model::reordered(std::vector<std::string> order) const {
  if (!std::is_permutation(order.begin(), order.end(), domain_.begin(), domain_.end()))
    throw std::invalid_argument("reordered: not a permutation of the domain");
  Model m(std::move(order));
  m.predicates_ = predicates_;
  return m;
}

namespace {

using FK = FreeFormula::Kind;

// Individuals d, in domain order, for which body holds with var bound to d.
template <class Visit>
void forEachSatisfier(const Model& model, const Environment& env, const std::string& var,
                      const FreeFormula& body, Visit&& visit) {
  Environment inner = env;
  for (const auto& d : model.domain()) {
    inner[var] = d;
    if (evalFormula(model, inner, body) && visit(d))
      return;
  }
}

} // namespace

Denotation evalTerm(const Model& model, const Environment& env, const FreeTerm& term) {
  switch (term.kind()) {
  case FreeTerm::Kind::Var: {
    auto it = env.find(term.name());
    if (it == env.end())
      throw EvalError("unbound variable '" + term.name() + "'");
    return Denotation::value(it->second);
  }
  case FreeTerm::Kind::Iota: {
    std::optional<std::string> unique;
    std::size_t count = 0;
    forEachSatisfier(model, env, term.name(), term.body(), [&](const std::string& d) {
      unique = d;
      return ++count > 1;
    });
    return count == 1 ? Denotation::value(*unique) : Denotation::nonDenoting();
  }
  case FreeTerm::Kind::Epsilon: {
    std::optional<std::string> first;
    forEachSatisfier(model, env, term.name(), term.body(), [&](const std::string& d) {
      first = d;
      return true;
    });
    return first ? Denotation::value(*first) : Denotation::nonDenoting();
  }
  }
  return Denotation::nonDenoting();
}

bool evalFormula(const Model& model, const Environment& env, const FreeFormula& f) {
  switch (f.kind()) {
  case FK::Pred: {
    const auto* ext = model.extension(f.name(), f.terms().size());
    if (!ext)
      throw EvalError("unknown predicate '" + f.name() + "/" + std::to_string(f.terms().size()) + "'");
    Model::Tuple tuple;
    bool allDenote = true;
    // Every argument is evaluated, so scope errors surface even when an
    // earlier argument fails to denote.
    for (const auto& t : f.terms()) {
      Denotation d = evalTerm(model, env, t);
      if (!d.denotes())
        allDenote = false;
      else
        tuple.push_back(d.individual());
    }
    return allDenote && ext->count(tuple) > 0;
  }
  case FK::Eq: {
    Denotation l = evalTerm(model, env, f.terms()[0]);
    Denotation r = evalTerm(model, env, f.terms()[1]);
    return l.denotes() && r.denotes() && l.individual() == r.individual();
  }
  case FK::Not: return !evalFormula(model, env, f.left());
  case FK::And: return evalFormula(model, env, f.left()) && evalFormula(model, env, f.right());
  case FK::Or: return evalFormula(model, env, f.left()) || evalFormula(model, env, f.right());
  case FK::Implies: return !evalFormula(model, env, f.left()) || evalFormula(model, env, f.right());
  case FK::Forall:
  case FK::Exists: {
    bool universal = f.kind() == FK::Forall;
    Environment inner = env;
    for (const auto& d : model.domain()) {
      inner[f.name()] = d;
      if (evalFormula(model, inner, f.left()) != universal)
        return !universal;
    }
    return universal;
  }
  }
  return false;
}

bool checkSentence(const Model& model, const FreeFormula& formula) {
  auto free = freeVariables(formula);
  if (!free.empty())
    throw EvalError("sentence has free variable '" + *free.begin() + "'");
  return evalFormula(model, {}, formula);
}

namespace {

bool isIdentifier(std::string_view s) {
  if (s.empty() || std::isdigit(static_cast<unsigned char>(s[0])))
    return false;
  return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isalnum(c) || c == '_'; });
}

struct Word {
  std::string_view text;
  std::size_t offset;
};

std::vector<Word> words(std::string_view line, std::size_t base) {
  std::vector<Word> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    if (i > start)
      out.push_back({line.substr(start, i - start), base + start});
  }
  return out;
}

} // namespace

Model parseModel(std::string_view text) {
  std::string masked = maskComments(text);
  std::string_view all(masked);
  std::optional<Model> model;

  struct PendingPredicate {
    std::string name;
    std::size_t arity;
    std::vector<Word> tuples;
    std::size_t offset;
  };
  std::vector<PendingPredicate> pending;

  std::size_t lineStart = 0;
  while (lineStart <= all.size()) {
    std::size_t lineEnd = all.find('\n', lineStart);
    if (lineEnd == std::string_view::npos)
      lineEnd = all.size();
    std::string_view line = all.substr(lineStart, lineEnd - lineStart);
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first != std::string_view::npos) {
      std::size_t colon = line.find(':', first);
      if (colon == std::string_view::npos)
        throw ParseError::at(text, lineStart + first, "expected 'domain:' or 'pred name/arity:'");
      auto head = words(line.substr(0, colon), lineStart);
      auto body = words(line.substr(colon + 1), lineStart + colon + 1);
      if (head.size() == 1 && head[0].text == "domain") {
        if (model)
          throw ParseError::at(text, head[0].offset, "'domain:' declared twice");
        std::vector<std::string> domain;
        for (const auto& w : body) {
          if (!isIdentifier(w.text))
            throw ParseError::at(text, w.offset, "individual names must be identifiers");
          domain.emplace_back(w.text);
        }
        try {
          model.emplace(std::move(domain));
        } catch (const std::invalid_argument& e) {
          throw ParseError::at(text, head[0].offset, e.what());
        }
      } else if (head.size() == 2 && head[0].text == "pred") {
        std::string_view sig = head[1].text;
        std::size_t slash = sig.find('/');
        std::size_t arity = 0;
        std::string_view name = sig.substr(0, slash);
        if (slash == std::string_view::npos || !isIdentifier(name))
          throw ParseError::at(text, head[1].offset, "expected predicate signature name/arity");
        std::string_view digits = sig.substr(slash + 1);
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), arity);
        if (ec != std::errc() || ptr != digits.data() + digits.size() || arity == 0)
          throw ParseError::at(text, head[1].offset + slash + 1, "arity must be a positive integer");
        pending.push_back({std::string(name), arity, body, head[0].offset});
      } else {
        throw ParseError::at(text, lineStart + first, "expected 'domain:' or 'pred name/arity:'");
      }
    }
    lineStart = lineEnd + 1;
  }

  if (!model)
    throw ParseError::at(text, text.size(), "model has no 'domain:' line");
  for (auto& p : pending) {
    std::set<Model::Tuple> extension;
    for (const auto& w : p.tuples) {
      Model::Tuple tuple;
      std::size_t start = 0;
      while (true) {
        std::size_t comma = w.text.find(',', start);
        std::string_view part = w.text.substr(start, comma == std::string_view::npos ? comma : comma - start);
        if (!model->inDomain(part))
          throw ParseError::at(text, w.offset + start,
                               "unknown individual '" + std::string(part) + "' in predicate '" + p.name + "'");
        tuple.emplace_back(part);
        if (comma == std::string_view::npos)
          break;
        start = comma + 1;
      }
      if (tuple.size() != p.arity)
        throw ParseError::at(text, w.offset,
                             "tuple has " + std::to_string(tuple.size()) + " individual(s), predicate '" +
                                 p.name + "' has arity " + std::to_string(p.arity));
      extension.insert(std::move(tuple));
    }
    try {
      model->addPredicate(p.name, p.arity, std::move(extension));
    } catch (const std::invalid_argument& e) {
      throw ParseError::at(text, p.offset, e.what());
    }
  }
  return *model;
}

} // namespace plogic
