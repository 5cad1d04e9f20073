#include <gtest/gtest.h>

#include <stdexcept>

#include "plogic/parser.hpp"
#include "plogic/temporal_monitor.hpp"
#include "support/generators.hpp"
#include "support/printers.hpp"
#include "support/temporal_oracle.hpp"

using namespace plogic;
using TF = TemporalFormula;
using VK = VerdictKind;

namespace {

const PronounAtom kShe("she", "her"), kHe("he", "him"), kThey("they", "them");

Utterance utter(std::initializer_list<PronounAtom> atoms) { return Utterance{AtomSet(atoms), std::nullopt}; }

TF atomF(const PronounAtom& a) { return TF::atom(a); }

// Every single-utterance alphabet letter over `pool`.
std::vector<Utterance> letters(const std::vector<PronounAtom>& pool) {
  std::vector<Utterance> out;
  for (const auto& t : gen::allTraces(1, pool))
    if (!t.empty())
      out.push_back(t[0]);
  return out;
}

const std::vector<PronounAtom> kSmallPool{PronounAtom("she", "her"), PronounAtom("they", "them")};

} // namespace

TEST(Evaluate, Examples) {
  Trace t{utter({kShe}), utter({kShe}), utter({kThey})};
  EXPECT_FALSE(evaluate(TF::box(atomF(kShe)), t, 0));
  EXPECT_TRUE(evaluate(TF::diamond(atomF(kThey)), t, 0));
  EXPECT_TRUE(evaluate(TF::box(atomF(kShe)), {}, 0));
  EXPECT_FALSE(evaluate(TF::diamond(atomF(kShe)), {}, 0));
  EXPECT_FALSE(evaluate(TF::next(TF::top()), t, 2));
  EXPECT_TRUE(evaluate(TF::next(atomF(kThey)), t, 1));
}

TEST(Evaluate, PositionPastEndThrows) {
  Trace t{utter({kShe})};
  EXPECT_NO_THROW(evaluate(atomF(kShe), t, 1));
  EXPECT_THROW(evaluate(atomF(kShe), t, 2), std::out_of_range);
}

TEST(Evaluate, BoundedModalities) {
  Trace t{utter({kShe}), utter({kShe}), utter({kThey})};
  EXPECT_TRUE(evaluate(TF::boxK(2, atomF(kShe)), t, 0));
  EXPECT_FALSE(evaluate(TF::boxK(3, atomF(kShe)), t, 0));
  EXPECT_TRUE(evaluate(TF::boxK(5, atomF(kThey)), t, 2));
  EXPECT_FALSE(evaluate(TF::diamondK(2, atomF(kThey)), t, 0));
  EXPECT_TRUE(evaluate(TF::diamondK(3, atomF(kThey)), t, 0));
}

TEST(ExpandBounded, Examples) {
  auto a = atomF(kShe);
  EXPECT_EQ(expandBounded(TF::boxK(2, a)),
            TF::conj(TF::disj(a, TF::box(TF::bottom())), TF::negation(TF::next(TF::negation(a)))));
  EXPECT_EQ(expandBounded(TF::diamondK(1, a)), a);
  EXPECT_EQ(expandBounded(TF::diamondK(2, a)), TF::disj(a, TF::next(a)));
  EXPECT_EQ(expandBounded(TF::box(a)), TF::box(a));
  EXPECT_EQ(expandBounded(TF::boxK(2, TF::negation(a))),
            TF::conj(TF::negation(a), TF::negation(TF::next(TF::negation(TF::negation(a))))));
  EXPECT_EQ(expandBounded(TF::diamondK(2, TF::negation(a))),
            TF::disj(TF::conj(TF::negation(a), TF::diamond(TF::top())), TF::next(TF::negation(a))));
}

TEST(ExpandBounded, EquivalentAtEveryPosition) {
  gen::Rng rng(21);
  auto traces = gen::allTraces(4, kSmallPool);
  for (int i = 0; i < 300; ++i) {
    auto f = gen::randomTemporal(rng, 3, kSmallPool);
    auto g = expandBounded(f);
    for (const auto& t : traces)
      for (std::size_t p = 0; p <= t.size(); ++p)
        ASSERT_EQ(evaluate(f, t, p), evaluate(g, t, p)) << render(f) << " at " << p;
  }
}

TEST(Simplify, Rules) {
  auto a = atomF(kShe), b = atomF(kThey);
  EXPECT_EQ(simplify(TF::conj(TF::top(), a)), a);
  EXPECT_EQ(simplify(TF::conj(a, TF::bottom())), TF::bottom());
  EXPECT_EQ(simplify(TF::disj(a, TF::top())), TF::top());
  EXPECT_EQ(simplify(TF::disj(TF::bottom(), a)), a);
  EXPECT_EQ(simplify(TF::conj(a, a)), a);
  EXPECT_EQ(simplify(TF::conj(TF::conj(a, b), a)), TF::conj(a, b));
  EXPECT_EQ(simplify(TF::negation(TF::negation(a))), a);
  EXPECT_EQ(simplify(TF::negation(TF::top())), TF::bottom());
}

TEST(Simplify, PreservesMeaning) {
  gen::Rng rng(22);
  auto traces = gen::allTraces(3, kSmallPool);
  for (int i = 0; i < 500; ++i) {
    auto f = expandBounded(gen::randomTemporal(rng, 4, kSmallPool));
    auto g = simplify(f);
    for (const auto& t : traces)
      for (std::size_t p = 0; p <= t.size(); ++p)
        ASSERT_EQ(evaluate(f, t, p), evaluate(g, t, p)) << render(f) << " vs " << render(g);
  }
}

TEST(Progress, Examples) {
  auto she = atomF(kShe), they = atomF(kThey);
  EXPECT_EQ(simplify(progress(TF::box(she), utter({kShe}))), TF::box(she));
  EXPECT_EQ(simplify(progress(TF::box(she), utter({kThey}))), TF::bottom());
  EXPECT_EQ(simplify(progress(TF::diamond(they), utter({kThey}))), TF::top());
  EXPECT_EQ(simplify(progress(TF::diamond(they), utter({kShe}))), TF::diamond(they));
  EXPECT_EQ(progress(TF::next(she), utter({kThey})), she);
  EXPECT_EQ(progress(TF::next(TF::box(she)), utter({kThey})), TF::conj(TF::box(she), TF::diamond(TF::top())));
}

TEST(Progress, RejectsBoundedModalities) {
  EXPECT_THROW(progress(TF::boxK(2, atomF(kShe)), utter({})), std::invalid_argument);
  EXPECT_THROW(progress(TF::negation(TF::diamondK(2, atomF(kShe))), utter({})), std::invalid_argument);
}

// evaluate(f, u.t) == evaluate(progress(f, u), t) for every u and t.
TEST(Progress, Contract) {
  gen::Rng rng(23);
  auto traces = gen::allTraces(3, kSmallPool);
  auto us = letters(kSmallPool);
  for (int i = 0; i < 400; ++i) {
    auto f = expandBounded(gen::randomTemporal(rng, 4, kSmallPool));
    for (const auto& u : us) {
      auto g = progress(f, u);
      auto gs = simplify(g);
      for (const auto& t : traces) {
        Trace whole{u};
        whole.insert(whole.end(), t.begin(), t.end());
        bool expect = gen::truthVector(f, whole)[0];
        ASSERT_EQ(expect, evaluate(g, t, 0)) << render(f);
        ASSERT_EQ(expect, evaluate(gs, t, 0)) << render(f);
      }
    }
  }
}

TEST(Monitor, AlwaysSheViolatedAtThirdUtterance) {
  auto run = monitor(TF::box(atomF(kShe)), {utter({kShe}), utter({kShe}), utter({kThey})});
  ASSERT_EQ(run.steps.size(), 3u);
  EXPECT_EQ(run.steps[0], (Verdict{VK::Inconclusive, std::nullopt}));
  EXPECT_EQ(run.steps[1], (Verdict{VK::Inconclusive, std::nullopt}));
  EXPECT_EQ(run.steps[2], (Verdict{VK::Violated, 2}));
  EXPECT_EQ(run.final, (Verdict{VK::Violated, 2}));
}

TEST(Monitor, EventuallyTheySatisfied) {
  auto run = monitor(TF::diamond(atomF(kThey)), {utter({kShe}), utter({kThey})});
  EXPECT_EQ(run.steps[0].kind, VK::Inconclusive);
  EXPECT_EQ(run.steps[1], (Verdict{VK::Satisfied, 1}));
}

TEST(Monitor, ConjunctionViolatedImmediately) {
  auto f = TF::conj(TF::box(TF::negation(atomF(kHe))), TF::diamond(atomF(kThey)));
  auto run = monitor(f, {utter({kHe})});
  EXPECT_EQ(run.steps[0], (Verdict{VK::Violated, 0}));
}

TEST(Monitor, FinishDecidesOnEmptyRemainder) {
  Monitor m(TF::diamond(atomF(kThey)));
  m.step(utter({kShe}));
  EXPECT_EQ(m.current().kind, VK::Inconclusive);
  EXPECT_EQ(m.finish(), (Verdict{VK::Violated, std::nullopt}));
  Monitor vacuous(TF::box(atomF(kShe)));
  EXPECT_EQ(vacuous.finish(), (Verdict{VK::Satisfied, std::nullopt}));
}

TEST(Monitor, BoundedBoxNotViolatedByShortTrace) {
  auto run = monitor(TF::boxK(3, atomF(kShe)), {utter({kShe})});
  EXPECT_EQ(run.final.kind, VK::Satisfied);
}

// Conclusive verdicts agree with every continuation, and the final verdict
// agrees with the reference semantics.
TEST(Monitor, SoundMonotoneAndFaithful) {
  gen::Rng rng(24);
  auto traces = gen::allTraces(3, kSmallPool);
  auto extensions = gen::allTraces(2, kSmallPool);
  for (int i = 0; i < 150; ++i) {
    auto f = gen::randomTemporal(rng, 3, kSmallPool);
    for (const auto& t : traces) {
      Monitor m(f);
      Verdict last;
      for (std::size_t j = 0; j < t.size(); ++j) {
        Verdict v = m.step(t[j]);
        if (last.kind != VK::Inconclusive)
          ASSERT_EQ(v, last) << render(f);
        if (v.kind != VK::Inconclusive)
          for (const auto& ext : extensions) {
            Trace whole(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(j) + 1);
            whole.insert(whole.end(), ext.begin(), ext.end());
            ASSERT_EQ(gen::truthVector(f, whole)[0], v.kind == VK::Satisfied) << render(f);
          }
        last = v;
      }
      Verdict fin = m.finish();
      ASSERT_EQ(fin.kind == VK::Satisfied, gen::truthVector(f, t)[0]) << render(f);
      if (last.kind != VK::Inconclusive)
        ASSERT_EQ(fin, last);
    }
  }
}

TEST(Properties, DualitiesHold) {
  gen::Rng rng(25);
  auto traces = gen::allTraces(3, kSmallPool);
  for (int i = 0; i < 200; ++i) {
    auto f = gen::randomTemporal(rng, 3, kSmallPool);
    for (const auto& t : traces)
      for (std::size_t p = 0; p <= t.size(); ++p) {
        ASSERT_EQ(evaluate(TF::box(f), t, p), !evaluate(TF::diamond(TF::negation(f)), t, p));
        ASSERT_EQ(evaluate(TF::boxK(3, f), t, p), !evaluate(TF::diamondK(3, TF::negation(f)), t, p));
      }
  }
}

TEST(Properties, EvaluateMatchesReference) {
  gen::Rng rng(26);
  auto traces = gen::allTraces(4, kSmallPool);
  for (int i = 0; i < 300; ++i) {
    auto f = gen::randomTemporal(rng, 4, kSmallPool);
    for (const auto& t : traces) {
      auto ref = gen::truthVector(f, t);
      for (std::size_t p = 0; p <= t.size(); ++p)
        ASSERT_EQ(evaluate(f, t, p), ref[p]) << render(f);
    }
  }
}

TEST(ParseTrace, Format) {
  auto t = parseTrace("she/her\n\n# comment\nshe/her they/them  # trailing\n-\n");
  ASSERT_EQ(t.size(), 3u);
  EXPECT_EQ(t[0].atoms, AtomSet{kShe});
  EXPECT_EQ(t[1].atoms, (AtomSet{kShe, kThey}));
  EXPECT_TRUE(t[2].atoms.empty());
}

TEST(ParseTrace, Errors) {
  EXPECT_THROW(parseTrace("she/her\nshe\n"), ParseError);
  EXPECT_THROW(parseTrace("she/her - \n"), ParseError);
  try {
    parseTrace("she/her\nhe/him 7/x\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 8u);
  }
}
