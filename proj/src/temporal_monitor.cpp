#include "plogic/temporal_monitor.hpp"

#include <cctype>
#include <stdexcept>

#include "plogic/parser.hpp"

namespace plogic {

namespace {

using Kind = TemporalFormula::Kind;
using TF = TemporalFormula;

bool holds(const TF& f, const std::vector<Utterance>& trace, std::size_t i) {
  const std::size_t n = trace.size();
  switch (f.kind()) {
  case Kind::Atom: return i < n && trace[i].atoms.count(f.atom()) > 0;
  case Kind::True: return true;
  case Kind::False: return false;
  case Kind::Not: return !holds(f.left(), trace, i);
  case Kind::And: return holds(f.left(), trace, i) && holds(f.right(), trace, i);
  case Kind::Or: return holds(f.left(), trace, i) || holds(f.right(), trace, i);
  case Kind::Implies: return !holds(f.left(), trace, i) || holds(f.right(), trace, i);
  case Kind::Next: return i + 1 < n && holds(f.left(), trace, i + 1);
  case Kind::Box:
    for (std::size_t j = i; j < n; ++j)
      if (!holds(f.left(), trace, j))
        return false;
    return true;
  case Kind::Diamond:
    for (std::size_t j = i; j < n; ++j)
      if (holds(f.left(), trace, j))
        return true;
    return false;
  case Kind::BoxK:
    for (std::size_t j = i; j < n && j < i + static_cast<std::size_t>(f.bound()); ++j)
      if (!holds(f.left(), trace, j))
        return false;
    return true;
  case Kind::DiamondK:
    for (std::size_t j = i; j < n && j < i + static_cast<std::size_t>(f.bound()); ++j)
      if (holds(f.left(), trace, j))
        return true;
    return false;
  }
  return false;
}

bool holdsOnEmpty(const TF& f) { return holds(f, {}, 0); }

TF weakNext(TF f) { return TF::negation(TF::next(TF::negation(std::move(f)))); }

void flatten(const TF& f, Kind k, std::vector<TF>& out) {
  if (f.kind() == k) {
    flatten(f.left(), k, out);
    flatten(f.right(), k, out);
  } else {
    out.push_back(f);
  }
}

// Rebuilds a simplified /\ or \/ chain. `unit` is absorbed, `zero` absorbs.
TF chain(const TF& l, const TF& r, Kind k) {
  const Kind unit = k == Kind::And ? Kind::True : Kind::False;
  const Kind zero = k == Kind::And ? Kind::False : Kind::True;
  std::vector<TF> parts, kept;
  flatten(l, k, parts);
  flatten(r, k, parts);
  for (const auto& p : parts) {
    if (p.kind() == zero)
      return p;
    if (p.kind() == unit)
      continue;
    bool dup = false;
    for (const auto& q : kept)
      if (q == p) {
        dup = true;
        break;
      }
    if (!dup)
      kept.push_back(p);
  }
  if (kept.empty())
    return k == Kind::And ? TF::top() : TF::bottom();
  TF out = kept.front();
  for (std::size_t i = 1; i < kept.size(); ++i)
    out = TF::binary(k, std::move(out), kept[i]);
  return out;
}

TF negate(const TF& f) {
  switch (f.kind()) {
  case Kind::True: return TF::bottom();
  case Kind::False: return TF::top();
  case Kind::Not: return f.left();
  default: return TF::negation(f);
  }
}

TF implication(const TF& l, const TF& r) {
  if (l.kind() == Kind::True)
    return r;
  if (l.kind() == Kind::False || r.kind() == Kind::True)
    return TF::top();
  if (r.kind() == Kind::False)
    return negate(l);
  return TF::implies(l, r);
}

} // namespace

std::string_view verdictName(VerdictKind v) noexcept {
  switch (v) {
  case VerdictKind::Inconclusive: return "Inconclusive";
  case VerdictKind::Satisfied: return "Satisfied";
  case VerdictKind::Violated: return "Violated";
  }
  return "?";
}

bool evaluate(const TemporalFormula& formula, const std::vector<Utterance>& trace, std::size_t position) {
  if (position > trace.size())
    throw std::out_of_range("position " + std::to_string(position) + " is past the end of a trace of length " +
                            std::to_string(trace.size()));
  return holds(formula, trace, position);
}

TemporalFormula expandBounded(const TemporalFormula& f) {
  switch (f.kind()) {
  case Kind::Atom:
  case Kind::True:
  case Kind::False:
    return f;
  case Kind::BoxK: {
    TF body = expandBounded(f.left());
    TF out = holdsOnEmpty(body) ? body : TF::disj(body, TF::box(TF::bottom()));
    TF shifted = body;
    for (int i = 1; i < f.bound(); ++i) {
      shifted = weakNext(shifted);
      out = TF::conj(std::move(out), shifted);
    }
    return out;
  }
  case Kind::DiamondK: {
    TF body = expandBounded(f.left());
    TF out = holdsOnEmpty(body) ? TF::conj(body, TF::diamond(TF::top())) : body;
    TF shifted = body;
    for (int i = 1; i < f.bound(); ++i) {
      shifted = TF::next(shifted);
      out = TF::disj(std::move(out), shifted);
    }
    return out;
  }
  default:
    break;
  }
  if (f.isUnary())
    return TF::unary(f.kind(), expandBounded(f.left()));
  return TF::binary(f.kind(), expandBounded(f.left()), expandBounded(f.right()));
}

TemporalFormula simplify(const TemporalFormula& f) {
  switch (f.kind()) {
  case Kind::Atom:
  case Kind::True:
  case Kind::False:
    return f;
  case Kind::Not:
    return negate(simplify(f.left()));
  case Kind::And:
  case Kind::Or:
    return chain(simplify(f.left()), simplify(f.right()), f.kind());
  case Kind::Implies:
    return implication(simplify(f.left()), simplify(f.right()));
  case Kind::Box: {
    TF body = simplify(f.left());
    return body.kind() == Kind::True ? body : TF::box(body);
  }
  case Kind::Diamond: {
    TF body = simplify(f.left());
    return body.kind() == Kind::False ? body : TF::diamond(body);
  }
  case Kind::Next: {
    TF body = simplify(f.left());
    return body.kind() == Kind::False ? body : TF::next(body);
  }
  case Kind::BoxK:
    return TF::boxK(f.bound(), simplify(f.left()));
  case Kind::DiamondK:
    return TF::diamondK(f.bound(), simplify(f.left()));
  }
  return f;
}

namespace {

TF derive(const TF& f, const Utterance& u) {
  switch (f.kind()) {
  case Kind::Atom: return u.atoms.count(f.atom()) ? TF::top() : TF::bottom();
  case Kind::True:
  case Kind::False: return f;
  case Kind::Not: return TF::negation(derive(f.left(), u));
  case Kind::And:
  case Kind::Or:
  case Kind::Implies: return TF::binary(f.kind(), derive(f.left(), u), derive(f.right(), u));
  case Kind::Box: return TF::conj(derive(f.left(), u), f);
  case Kind::Diamond: return TF::disj(derive(f.left(), u), f);
  case Kind::Next:
    // Strong next also demands that another utterance exists. When the body
    // already fails on the empty remainder that demand is implied.
    if (!holdsOnEmpty(f.left()))
      return f.left();
    return TF::conj(f.left(), TF::diamond(TF::top()));
  case Kind::BoxK:
  case Kind::DiamondK:
    break;
  }
  throw std::invalid_argument("progress: expand bounded modalities first (found " + render(f) + ")");
}

} // namespace

TemporalFormula progress(const TemporalFormula& formula, const Utterance& utterance) {
  return simplify(derive(formula, utterance));
}

Monitor::Monitor(const TemporalFormula& formula) : residual_(simplify(expandBounded(formula))) {}

Verdict Monitor::step(const Utterance& utterance) {
  std::size_t position = consumed_++;
  if (verdict_.kind != VerdictKind::Inconclusive)
    return verdict_;
  residual_ = progress(residual_, utterance);
  if (residual_.kind() == Kind::True)
    verdict_ = Verdict{VerdictKind::Satisfied, position};
  else if (residual_.kind() == Kind::False)
    verdict_ = Verdict{VerdictKind::Violated, position};
  return verdict_;
}

Verdict Monitor::finish() const {
  if (verdict_.kind != VerdictKind::Inconclusive)
    return verdict_;
  return Verdict{holdsOnEmpty(residual_) ? VerdictKind::Satisfied : VerdictKind::Violated, std::nullopt};
}

MonitorRun monitor(const TemporalFormula& formula, const std::vector<Utterance>& utterances) {
  Monitor m(formula);
  MonitorRun run;
  run.steps.reserve(utterances.size());
  for (const auto& u : utterances)
    run.steps.push_back(m.step(u));
  run.final = m.finish();
  return run;
}

Trace parseTrace(std::string_view text) {
  std::string masked = maskComments(text);
  Trace trace;
  std::size_t lineStart = 0;
  while (lineStart <= masked.size()) {
    std::size_t lineEnd = masked.find('\n', lineStart);
    if (lineEnd == std::string::npos)
      lineEnd = masked.size();
    Utterance u;
    bool any = false, dash = false;
    std::size_t i = lineStart;
    while (i < lineEnd) {
      while (i < lineEnd && std::isspace(static_cast<unsigned char>(masked[i])))
        ++i;
      if (i == lineEnd)
        break;
      std::size_t start = i;
      while (i < lineEnd && !std::isspace(static_cast<unsigned char>(masked[i])))
        ++i;
      std::string_view token(masked.data() + start, i - start);
      if (token == "-") {
        if (any)
          throw ParseError::at(text, start, "'-' must be the only token on its line");
        dash = true;
      } else {
        if (dash)
          throw ParseError::at(text, start, "'-' must be the only token on its line");
        try {
          u.atoms.insert(PronounAtom::fromKey(token));
        } catch (const std::invalid_argument&) {
          throw ParseError::at(text, start, "malformed pronoun atom '" + std::string(token) + "'",
                               {"pronoun atom", "'-'"});
        }
      }
      any = true;
    }
    if (any)
      trace.push_back(std::move(u));
    lineStart = lineEnd + 1;
  }
  return trace;
}

} // namespace plogic
