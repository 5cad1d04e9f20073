#include <gtest/gtest.h>

#include "plogic/parser.hpp"
#include "support/generators.hpp"

using namespace plogic;

namespace {

const PronounAtom she("she", "her");
const PronounAtom they("they", "them");
const PronounAtom he("he", "him");

LinearFormula L(const PronounAtom& a) { return LinearFormula::atom(a); }
TemporalFormula T(const PronounAtom& a) { return TemporalFormula::atom(a); }
FreeFormula man(const char* v) { return FreeFormula::pred("man", {FreeTerm::var(v)}); }

ParseError errorOf(auto&& parse) {
  try {
    parse();
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "expected a ParseError";
  return ParseError(0, 1, 1, "none");
}

} // namespace

TEST(ParseLinear, SpeakerChoiceWithOptionalExtra) {
  EXPECT_EQ(parseLinear("she/her & (she/her * they/them)"),
            LinearFormula::with(L(she), LinearFormula::tensor(L(she), L(they))));
}

TEST(ParseLinear, Correction) { EXPECT_EQ(parseLinear("he/him -o she/her"), LinearFormula::lolli(L(he), L(she))); }

TEST(ParseLinear, DanglingOperator) {
  auto e = errorOf([] { parseLinear("she/her &"); });
  EXPECT_EQ(e.byteOffset(), 9u);
  EXPECT_EQ(e.line(), 1u);
  EXPECT_EQ(e.column(), 10u);
  EXPECT_EQ(e.expected(), std::vector<std::string>{"formula"});
}

TEST(ParseLinear, Precedence) {
  EXPECT_EQ(parseLinear("a/b & c/d (+) e/f"), parseLinear("(a/b & c/d) (+) e/f"));
  // * binds tighter than &, & tighter than (+), (+) tighter than -o.
  EXPECT_EQ(parseLinear("a/b * c/d & e/f"), parseLinear("(a/b * c/d) & e/f"));
  EXPECT_EQ(parseLinear("a/b (+) c/d -o e/f"), parseLinear("(a/b (+) c/d) -o e/f"));
  EXPECT_EQ(parseLinear("a/b -o b/c -o c/d"), parseLinear("a/b -o (b/c -o c/d)"));
  EXPECT_EQ(parseLinear("a/b * b/c * c/d"), parseLinear("a/b * (b/c * c/d)"));
}

TEST(ParseLinear, UnicodeAliases) {
  EXPECT_EQ(parseLinear("she/her ⊸ (she/her ⊕ (she/her ⊗ they/them))"),
            parseLinear("she/her -o (she/her (+) (she/her * they/them))"));
}

TEST(ParseLinear, Errors) {
  EXPECT_THROW(parseLinear(""), ParseError);
  EXPECT_THROW(parseLinear("(she/her"), ParseError);
  EXPECT_THROW(parseLinear("she/her)"), ParseError);
  EXPECT_THROW(parseLinear("she"), ParseError);
  EXPECT_THROW(parseLinear("she/her $ he/him"), ParseError);
  EXPECT_THROW(parseLinear("she/her they/them"), ParseError);
}

TEST(ParseTemporal, PromptFix) {
  EXPECT_EQ(parseTemporal("!she/her -> ()she/her"),
            TemporalFormula::implies(TemporalFormula::negation(T(she)), TemporalFormula::next(T(she))));
}

TEST(ParseTemporal, NeverTheyThenNeverHe) {
  EXPECT_EQ(parseTemporal("[]!they/them -> []!he/him"),
            TemporalFormula::implies(TemporalFormula::box(TemporalFormula::negation(T(they))),
                                     TemporalFormula::box(TemporalFormula::negation(T(he)))));
}

TEST(ParseTemporal, BoundedDiamond) { EXPECT_EQ(parseTemporal("<><=5 she/her"), TemporalFormula::diamondK(5, T(she))); }

TEST(ParseTemporal, BoundMustBePositive) {
  auto e = errorOf([] { parseTemporal("[]<=0 she/her"); });
  EXPECT_EQ(e.byteOffset(), 4u);
  EXPECT_THROW(parseTemporal("<><= she/her"), ParseError);
  EXPECT_THROW(parseTemporal("[]<=99999999999 she/her"), ParseError);
}

TEST(ParseTemporal, Precedence) {
  EXPECT_EQ(parseTemporal("a/b /\\ c/d \\/ e/f -> g/h -> i/j"),
            parseTemporal("((a/b /\\ c/d) \\/ e/f) -> (g/h -> i/j)"));
  EXPECT_EQ(parseTemporal("[] a/b /\\ c/d"), parseTemporal("([] a/b) /\\ c/d"));
  EXPECT_EQ(parseTemporal("!a/b \\/ c/d"), parseTemporal("(!a/b) \\/ c/d"));
  EXPECT_EQ(parseTemporal("□¬they/them → ◇○they/them"), parseTemporal("[]!they/them -> <>()they/them"));
}

TEST(ParseTemporal, Constants) {
  EXPECT_EQ(parseTemporal("true /\\ false"), TemporalFormula::conj(TemporalFormula::top(), TemporalFormula::bottom()));
}

TEST(ParseFree, DefiniteDescriptionInEquation) {
  EXPECT_EQ(parseFree("exists y. y = iota x. man(x)"),
            FreeFormula::exists("y", FreeFormula::eq(FreeTerm::var("y"), FreeTerm::iota("x", man("x")))));
}

TEST(ParseFree, ContradictoryIndefinite) {
  EXPECT_EQ(parseFreeTerm("eps x. (man(x) /\\ !man(x))"),
            FreeTerm::epsilon("x", FreeFormula::conj(man("x"), FreeFormula::negation(man("x")))));
}

TEST(ParseFree, UniversalTautologyShape) {
  EXPECT_EQ(parseFree("forall x. man(x) -> man(x)"), FreeFormula::forall("x", FreeFormula::implies(man("x"), man("x"))));
}

TEST(ParseFree, BinderBodyExtendsRight) {
  EXPECT_EQ(parseFree("forall x. man(x) /\\ man(y)"),
            FreeFormula::forall("x", FreeFormula::conj(man("x"), man("y"))));
  EXPECT_EQ(parseFree("loves(iota x. man(x), y)"),
            FreeFormula::pred("loves", {FreeTerm::iota("x", man("x")), FreeTerm::var("y")}));
}

TEST(ParseFree, ParenthesizedTerms) {
  EXPECT_EQ(parseFree("(iota x. man(x)) = y"), FreeFormula::eq(FreeTerm::iota("x", man("x")), FreeTerm::var("y")));
  EXPECT_EQ(parseFree("((x)) = y"), FreeFormula::eq(FreeTerm::var("x"), FreeTerm::var("y")));
  EXPECT_EQ(parseFree("!(x = x)"), FreeFormula::negation(FreeFormula::eq(FreeTerm::var("x"), FreeTerm::var("x"))));
}

TEST(ParseFree, UnicodeBinders) {
  EXPECT_EQ(parseFree("∃y. y = ιx. man(x)"), parseFree("exists y. y = iota x. man(x)"));
  EXPECT_EQ(parseFreeTerm("εx. man(x)"), parseFreeTerm("eps x. man(x)"));
}

TEST(ParseFree, Errors) {
  auto e = errorOf([] { parseFree("forall x man(x)"); });
  EXPECT_EQ(e.expected(), std::vector<std::string>{"'.'"});
  EXPECT_THROW(parseFree("man(x) /\\ man(x, y)"), ParseError);
  EXPECT_THROW(parseFree("man()"), ParseError);
  EXPECT_THROW(parseFree("x"), ParseError);
  EXPECT_THROW(parseFree("(man(x)"), ParseError);
}

TEST(ParseSequent, Identity) {
  EXPECT_EQ(parseSequent("she/her |- she/her"), (Sequent{{L(she)}, L(she)}));
}

TEST(ParseSequent, EmptyContext) {
  auto s = parseSequent("|- she/her -o (she/her (+) (she/her * they/them))");
  EXPECT_TRUE(s.context.empty());
  EXPECT_EQ(s.goal, LinearFormula::lolli(L(she), LinearFormula::plus(L(she), LinearFormula::tensor(L(she), L(they)))));
}

TEST(ParseSequent, MultisetContextKeepsOrderAndMultiplicity) {
  auto s = parseSequent("b/c, a/b, a/b |- a/b");
  ASSERT_EQ(s.context.size(), 3u);
  EXPECT_EQ(render(s.context[0]), "b/c");
  EXPECT_EQ(render(s), "b/c, a/b, a/b |- a/b");
}

TEST(ParseSequent, Errors) {
  auto e = errorOf([] { parseSequent("a/b b/c |- a/b"); });
  EXPECT_EQ(e.byteOffset(), 4u);
  EXPECT_EQ(e.expected(), (std::vector<std::string>{"','", "'|-'"}));
  EXPECT_THROW(parseSequent("she/her |-"), ParseError);
  EXPECT_THROW(parseSequent("she/her"), ParseError);
  EXPECT_THROW(parseSequent("|-"), ParseError);
}

TEST(ParseError, LineAndColumn) {
  auto e = errorOf([] { parseLinear("she/her &\n  (he/him"); });
  EXPECT_EQ(e.line(), 2u);
  EXPECT_EQ(e.column(), 10u);
  EXPECT_FALSE(e.message().empty());
}

TEST(MaskComments, PreservesOffsets) {
  std::string text = "# a comment\nshe/her & # trailing\n he/him\n";
  std::string masked = maskComments(text);
  EXPECT_EQ(masked.size(), text.size());
  EXPECT_EQ(parseLinear(masked), LinearFormula::with(L(she), L(he)));
  auto e = errorOf([&] { parseLinear(maskComments("# c\nshe/her &")); });
  EXPECT_EQ(e.line(), 2u);
}

TEST(ParserDepth, DeepNestingIsAnErrorNotACrash) {
  std::string deep(100000, '(');
  EXPECT_THROW(parseLinear(deep), ParseError);
  EXPECT_THROW(parseTemporal(std::string(100000, '!')), ParseError);
  EXPECT_THROW(parseFree(deep), ParseError);
}

// Property: parse(render(f)) == f for each family.
TEST(RoundTrip, Linear) {
  gen::Rng rng(1);
  for (int i = 0; i < 3000; ++i) {
    auto f = gen::randomLinear(rng, 5);
    ASSERT_EQ(parseLinear(render(f)), f) << render(f);
  }
}

TEST(RoundTrip, Temporal) {
  gen::Rng rng(2);
  for (int i = 0; i < 3000; ++i) {
    auto f = gen::randomTemporal(rng, 5);
    ASSERT_EQ(parseTemporal(render(f)), f) << render(f);
  }
}

TEST(RoundTrip, Free) {
  gen::Rng rng(3);
  for (int i = 0; i < 3000; ++i) {
    auto f = gen::randomFree(rng, 5);
    ASSERT_EQ(parseFree(render(f)), f) << render(f);
  }
}

TEST(Fuzz, ArbitraryBytesNeverCrash) {
  gen::Rng rng(4);
  const std::string alphabet = "abhs/ert()[]<>-o&*+!=.,|\\x 0123456789\n#";
  for (int i = 0; i < 3000; ++i) {
    std::string s;
    std::size_t n = gen::pick(rng, 40);
    for (std::size_t j = 0; j < n; ++j)
      s += gen::pick(rng, 2) ? alphabet[gen::pick(rng, alphabet.size())]
                                 : static_cast<char>(gen::pick(rng, 256));
    for (auto parse : {+[](std::string_view v) { (void)parseLinear(v); },
                       +[](std::string_view v) { (void)parseTemporal(v); },
                       +[](std::string_view v) { (void)parseFree(v); },
                       +[](std::string_view v) { (void)parseSequent(v); }}) {
      try {
        parse(s);
      } catch (const ParseError& e) {
        EXPECT_LE(e.byteOffset(), s.size());
        EXPECT_FALSE(e.message().empty());
      }
    }
  }
}
