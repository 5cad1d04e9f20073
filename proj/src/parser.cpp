#include "plogic/parser.hpp"

#include <algorithm>
#include <charconv>
#include <optional>

namespace plogic {

ParseError::ParseError(std::size_t byteOffset, std::size_t line, std::size_t column, std::string message,
                       std::vector<std::string> expected)
    : std::runtime_error([&] {
        std::string what = std::to_string(line) + ":" + std::to_string(column) + ": " + message;
        if (!expected.empty()) {
          what += " (expected ";
          for (std::size_t i = 0; i < expected.size(); ++i)
            what += (i ? ", " : "") + expected[i];
          what += ")";
        }
        return what;
      }()),
      byteOffset_(byteOffset), line_(line), column_(column), message_(std::move(message)),
      expected_(std::move(expected)) {}

ParseError ParseError::at(std::string_view input, std::size_t byteOffset, std::string message,
                          std::vector<std::string> expected) {
  byteOffset = std::min(byteOffset, input.size());
  std::size_t line = 1, lineStart = 0;
  for (std::size_t i = 0; i < byteOffset; ++i)
    if (input[i] == '\n') {
      ++line;
      lineStart = i + 1;
    }
  return ParseError(byteOffset, line, byteOffset - lineStart + 1, std::move(message), std::move(expected));
}

std::string render(const Sequent& s) {
  std::string out;
  for (std::size_t i = 0; i < s.context.size(); ++i) {
    if (i)
      out += ", ";
    out += render(s.context[i]);
  }
  out += s.context.empty() ? "|- " : " |- ";
  out += render(s.goal);
  return out;
}

std::string maskComments(std::string_view text) {
  std::string out(text);
  bool inComment = false;
  for (char& c : out) {
    if (c == '\n')
      inComment = false;
    else if (c == '#')
      inComment = true;
    if (inComment)
      c = ' ';
  }
  return out;
}

namespace {

enum class Tok {
  End, Atom, Ident, Int,
  With, Plus, Tensor, Lolli,             // & (+) * -o
  Box, Diamond, Next, Le,                // [] <> () <=
  Not, And, Or, Implies,                 // ! /\ \/ ->
  LParen, RParen, Comma, Dot, Eq, Turnstile,
  Iota, Eps, Forall, Exists, True, False,
};

const char* describe(Tok t) {
  switch (t) {
  case Tok::End: return "end of input";
  case Tok::Atom: return "pronoun atom";
  case Tok::Ident: return "identifier";
  case Tok::Int: return "integer";
  case Tok::With: return "'&'";
  case Tok::Plus: return "'(+)'";
  case Tok::Tensor: return "'*'";
  case Tok::Lolli: return "'-o'";
  case Tok::Box: return "'[]'";
  case Tok::Diamond: return "'<>'";
  case Tok::Next: return "'()'";
  case Tok::Le: return "'<='";
  case Tok::Not: return "'!'";
  case Tok::And: return "'/\\'";
  case Tok::Or: return "'\\/'";
  case Tok::Implies: return "'->'";
  case Tok::LParen: return "'('";
  case Tok::RParen: return "')'";
  case Tok::Comma: return "','";
  case Tok::Dot: return "'.'";
  case Tok::Eq: return "'='";
  case Tok::Turnstile: return "'|-'";
  case Tok::Iota: return "'iota'";
  case Tok::Eps: return "'eps'";
  case Tok::Forall: return "'forall'";
  case Tok::Exists: return "'exists'";
  case Tok::True: return "'true'";
  case Tok::False: return "'false'";
  }
  return "token";
}

struct Token {
  Tok type;
  std::string_view text;
  std::size_t offset;
};

bool isLetter(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }
bool isDigit(char c) { return c >= '0' && c <= '9'; }
bool isIdentChar(char c) { return isLetter(c) || isDigit(c) || c == '_'; }

struct Symbol {
  std::string_view spelling;
  Tok type;
};

// Longest spellings first where prefixes overlap.
constexpr Symbol kSymbols[] = {
    {"(+)", Tok::Plus}, {"()", Tok::Next}, {"(", Tok::LParen}, {")", Tok::RParen},
    {"&", Tok::With},   {"*", Tok::Tensor}, {"-o", Tok::Lolli}, {"->", Tok::Implies},
    {"[]", Tok::Box},   {"<>", Tok::Diamond}, {"<=", Tok::Le},  {"!", Tok::Not},
    {"/\\", Tok::And},  {"\\/", Tok::Or},   {",", Tok::Comma},  {".", Tok::Dot},
    {"=", Tok::Eq},     {"|-", Tok::Turnstile},
    // Unicode aliases, accepted on input only.
    {"⊕", Tok::Plus}, {"⊗", Tok::Tensor}, {"⊸", Tok::Lolli},
    {"□", Tok::Box},  {"◇", Tok::Diamond}, {"○", Tok::Next},
    {"¬", Tok::Not},  {"∧", Tok::And},    {"∨", Tok::Or},
    {"→", Tok::Implies}, {"ι", Tok::Iota}, {"ε", Tok::Eps},
    {"∀", Tok::Forall},  {"∃", Tok::Exists}, {"⊢", Tok::Turnstile},
    {"≤", Tok::Le},
};

std::vector<Token> lex(std::string_view in) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < in.size()) {
    char c = in[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v') {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (isLetter(c)) {
      while (i < in.size() && isLetter(in[i]))
        ++i;
      // Pronoun atoms are letter+ "/" letter+ and win over identifiers.
      if (i + 1 < in.size() && in[i] == '/' && isLetter(in[i + 1])) {
        ++i;
        while (i < in.size() && isLetter(in[i]))
          ++i;
        if (i < in.size() && (isDigit(in[i]) || in[i] == '_'))
          throw ParseError::at(in, i, "pronoun atoms may contain only letters");
        out.push_back({Tok::Atom, in.substr(start, i - start), start});
        continue;
      }
      while (i < in.size() && isIdentChar(in[i]))
        ++i;
      std::string_view word = in.substr(start, i - start);
      Tok t = Tok::Ident;
      if (word == "iota") t = Tok::Iota;
      else if (word == "eps") t = Tok::Eps;
      else if (word == "forall") t = Tok::Forall;
      else if (word == "exists") t = Tok::Exists;
      else if (word == "true") t = Tok::True;
      else if (word == "false") t = Tok::False;
      out.push_back({t, word, start});
      continue;
    }
    if (c == '_') {
      while (i < in.size() && isIdentChar(in[i]))
        ++i;
      out.push_back({Tok::Ident, in.substr(start, i - start), start});
      continue;
    }
    if (isDigit(c)) {
      while (i < in.size() && isDigit(in[i]))
        ++i;
      out.push_back({Tok::Int, in.substr(start, i - start), start});
      continue;
    }
    bool matched = false;
    for (const auto& sym : kSymbols) {
      if (in.substr(i).starts_with(sym.spelling)) {
        out.push_back({sym.type, sym.spelling, start});
        i += sym.spelling.size();
        matched = true;
        break;
      }
    }
    if (!matched)
      throw ParseError::at(in, i, "unexpected character");
  }
  out.push_back({Tok::End, {}, in.size()});
  return out;
}

class Parser {
public:
  explicit Parser(std::string_view input) : input_(input), tokens_(lex(input)) {}

  // --- shared machinery ---

  const Token& peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }
  bool at(Tok t) const { return peek().type == t; }
  const Token& advance() {
    const Token& t = tokens_[pos_];
    if (pos_ + 1 < tokens_.size())
      ++pos_;
    return t;
  }
  bool accept(Tok t) {
    if (!at(t))
      return false;
    advance();
    return true;
  }
  [[noreturn]] void fail(std::string message, std::vector<std::string> expected) const {
    const Token& t = peek();
    if (message.empty())
      message = t.type == Tok::End ? "unexpected end of input"
                                   : "unexpected " + std::string(describe(t.type));
    throw ParseError::at(input_, t.offset, std::move(message), std::move(expected));
  }
  const Token& expect(Tok t) {
    if (!at(t))
      fail("", {describe(t)});
    return advance();
  }
  void expectEnd() {
    if (!at(Tok::End))
      fail("", {"end of input"});
  }

  struct DepthGuard {
    Parser& p;
    explicit DepthGuard(Parser& parser) : p(parser) {
      if (++p.depth_ > kMaxNestingDepth)
        p.fail("formula nested too deeply", {});
    }
    ~DepthGuard() { --p.depth_; }
  };

  PronounAtom atomFrom(const Token& t) const { return PronounAtom::fromKey(t.text); }

  // --- linear ---
  // -o  <  (+)  <  &  <  *   (loosest to tightest), all right-associative.

  LinearFormula linear() { return linearLevel(0); }

  LinearFormula linearLevel(int level) {
    static constexpr Tok kOps[] = {Tok::Lolli, Tok::Plus, Tok::With, Tok::Tensor};
    static constexpr LinearFormula::Kind kKinds[] = {
        LinearFormula::Kind::Lolli, LinearFormula::Kind::Plus, LinearFormula::Kind::With,
        LinearFormula::Kind::Tensor};
    if (level == 4)
      return linearPrimary();
    DepthGuard guard(*this);
    LinearFormula lhs = linearLevel(level + 1);
    if (accept(kOps[level]))
      return LinearFormula::binary(kKinds[level], std::move(lhs), linearLevel(level));
    return lhs;
  }

  LinearFormula linearPrimary() {
    DepthGuard guard(*this);
    if (at(Tok::Atom))
      return LinearFormula::atom(atomFrom(advance()));
    if (accept(Tok::LParen)) {
      LinearFormula f = linear();
      expect(Tok::RParen);
      return f;
    }
    fail(at(Tok::End) ? "expected formula" : "", {"formula"});
  }

  // --- temporal ---

  TemporalFormula temporal() {
    DepthGuard guard(*this);
    TemporalFormula lhs = temporalOr();
    if (accept(Tok::Implies))
      return TemporalFormula::implies(std::move(lhs), temporal());
    return lhs;
  }

  TemporalFormula temporalOr() {
    TemporalFormula lhs = temporalAnd();
    while (accept(Tok::Or))
      lhs = TemporalFormula::disj(std::move(lhs), temporalAnd());
    return lhs;
  }

  TemporalFormula temporalAnd() {
    TemporalFormula lhs = temporalUnary();
    while (accept(Tok::And))
      lhs = TemporalFormula::conj(std::move(lhs), temporalUnary());
    return lhs;
  }

  std::optional<int> modalBound() {
    if (!accept(Tok::Le))
      return std::nullopt;
    if (!at(Tok::Int))
      fail("bounded modality needs a positive integer bound", {"integer"});
    const Token& t = advance();
    int k = 0;
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), k);
    if (ec != std::errc() || k > kMaxModalBound)
      throw ParseError::at(input_, t.offset,
                           "bound exceeds the maximum of " + std::to_string(kMaxModalBound));
    if (k < 1)
      throw ParseError::at(input_, t.offset, "bound must be >= 1", {"positive integer"});
    return k;
  }

  TemporalFormula temporalUnary() {
    DepthGuard guard(*this);
    if (accept(Tok::Not))
      return TemporalFormula::negation(temporalUnary());
    if (accept(Tok::Next))
      return TemporalFormula::next(temporalUnary());
    if (accept(Tok::Box)) {
      auto k = modalBound();
      TemporalFormula body = temporalUnary();
      return k ? TemporalFormula::boxK(*k, std::move(body)) : TemporalFormula::box(std::move(body));
    }
    if (accept(Tok::Diamond)) {
      auto k = modalBound();
      TemporalFormula body = temporalUnary();
      return k ? TemporalFormula::diamondK(*k, std::move(body))
               : TemporalFormula::diamond(std::move(body));
    }
    if (at(Tok::Atom))
      return TemporalFormula::atom(atomFrom(advance()));
    if (accept(Tok::True))
      return TemporalFormula::top();
    if (accept(Tok::False))
      return TemporalFormula::bottom();
    if (accept(Tok::LParen)) {
      TemporalFormula f = temporal();
      expect(Tok::RParen);
      return f;
    }
    fail(at(Tok::End) ? "expected formula" : "", {"formula"});
  }

  // --- free logic ---
  // Binders (forall, exists, iota, eps) extend as far right as possible.

  FreeFormula freeFormula() {
    DepthGuard guard(*this);
    FreeFormula lhs = freeOr();
    if (accept(Tok::Implies))
      return FreeFormula::implies(std::move(lhs), freeFormula());
    return lhs;
  }

  FreeFormula freeOr() {
    FreeFormula lhs = freeAnd();
    while (accept(Tok::Or))
      lhs = FreeFormula::disj(std::move(lhs), freeAnd());
    return lhs;
  }

  FreeFormula freeAnd() {
    FreeFormula lhs = freeUnary();
    while (accept(Tok::And))
      lhs = FreeFormula::conj(std::move(lhs), freeUnary());
    return lhs;
  }

  std::string binderVariable() {
    std::string var(expect(Tok::Ident).text);
    expect(Tok::Dot);
    return var;
  }

  FreeFormula freeUnary() {
    DepthGuard guard(*this);
    if (accept(Tok::Not))
      return FreeFormula::negation(freeUnary());
    if (at(Tok::Forall) || at(Tok::Exists)) {
      bool universal = advance().type == Tok::Forall;
      std::string var = binderVariable();
      FreeFormula body = freeFormula();
      return universal ? FreeFormula::forall(std::move(var), std::move(body))
                       : FreeFormula::exists(std::move(var), std::move(body));
    }
    if (at(Tok::LParen)) {
      // Either a parenthesized formula or a parenthesized term opening an
      // equation; try the formula first.
      std::size_t mark = pos_;
      int depthMark = depth_;
      try {
        advance();
        FreeFormula f = freeFormula();
        expect(Tok::RParen);
        return f;
      } catch (const ParseError& asFormula) {
        pos_ = mark;
        depth_ = depthMark;
        try {
          return freeEquation();
        } catch (const ParseError& asTerm) {
          if (asTerm.byteOffset() >= asFormula.byteOffset())
            throw;
          throw asFormula;
        }
      }
    }
    if (at(Tok::Ident) && peek(1).type == Tok::LParen) {
      std::string name(advance().text);
      advance();
      std::vector<FreeTerm> args;
      args.push_back(freeTerm());
      while (accept(Tok::Comma))
        args.push_back(freeTerm());
      expect(Tok::RParen);
      return FreeFormula::pred(std::move(name), std::move(args));
    }
    if (at(Tok::Ident) || at(Tok::Iota) || at(Tok::Eps))
      return freeEquation();
    fail(at(Tok::End) ? "expected formula" : "", {"formula"});
  }

  FreeFormula freeEquation() {
    FreeTerm lhs = freeTerm();
    expect(Tok::Eq);
    return FreeFormula::eq(std::move(lhs), freeTerm());
  }

  FreeTerm freeTerm() {
    DepthGuard guard(*this);
    if (at(Tok::Iota) || at(Tok::Eps)) {
      bool definite = advance().type == Tok::Iota;
      std::string var = binderVariable();
      FreeFormula body = freeFormula();
      return definite ? FreeTerm::iota(std::move(var), std::move(body))
                      : FreeTerm::epsilon(std::move(var), std::move(body));
    }
    if (at(Tok::Ident))
      return FreeTerm::var(std::string(advance().text));
    if (accept(Tok::LParen)) {
      FreeTerm t = freeTerm();
      expect(Tok::RParen);
      return t;
    }
    fail(at(Tok::End) ? "expected term" : "", {"term"});
  }

  // Predicate arity must be consistent within one formula.
  void checkArities(const FreeFormula& f) const {
    try {
      (void)predicateArities(f);
    } catch (const std::invalid_argument& e) {
      throw ParseError::at(input_, 0, e.what());
    }
  }

  // --- sequents ---

  Sequent sequent() {
    std::vector<LinearFormula> context;
    if (!accept(Tok::Turnstile)) {
      while (true) {
        context.push_back(linear());
        if (accept(Tok::Turnstile))
          break;
        if (!accept(Tok::Comma))
          fail("", {"','", "'|-'"});
      }
    }
    LinearFormula goal = linear();
    expectEnd();
    return Sequent{std::move(context), std::move(goal)};
  }

  std::string_view input_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  int depth_ = 0;
};

} // namespace

LinearFormula parseLinear(std::string_view input) {
  Parser p(input);
  LinearFormula f = p.linear();
  p.expectEnd();
  return f;
}

TemporalFormula parseTemporal(std::string_view input) {
  Parser p(input);
  TemporalFormula f = p.temporal();
  p.expectEnd();
  return f;
}

FreeFormula parseFree(std::string_view input) {
  Parser p(input);
  FreeFormula f = p.freeFormula();
  p.expectEnd();
  p.checkArities(f);
  return f;
}

FreeTerm parseFreeTerm(std::string_view input) {
  Parser p(input);
  FreeTerm t = p.freeTerm();
  p.expectEnd();
  if (t.kind() != FreeTerm::Kind::Var)
    p.checkArities(t.body());
  return t;
}

Sequent parseSequent(std::string_view input) {
  Parser p(input);
  return p.sequent();
}

} // namespace plogic
