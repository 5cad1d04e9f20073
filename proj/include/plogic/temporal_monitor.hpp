#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "plogic/atom.hpp"
#include "plogic/temporal_formula.hpp"

namespace plogic {

struct ByteSpan {
  std::size_t start = 0;
  std::size_t end = 0;

  friend bool operator==(const ByteSpan&, const ByteSpan&) = default;
};

// One time step: the pronoun atoms used by one utterance.
struct Utterance {
  AtomSet atoms;
  std::optional<ByteSpan> sourceSpan;

  friend bool operator==(const Utterance&, const Utterance&) = default;
};

using Trace = std::vector<Utterance>;

enum class VerdictKind { Inconclusive, Satisfied, Violated };

std::string_view verdictName(VerdictKind v) noexcept;

struct Verdict {
  VerdictKind kind = VerdictKind::Inconclusive;
  std::optional<std::size_t> position;

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

// Finite-trace semantics of `formula` at `position` (0 <= position <=
// trace.size(); position == size is the empty suffix). Next is strong,
// Box is vacuous and Diamond false on the empty suffix. Throws
// std::out_of_range for positions past the end.
bool evaluate(const TemporalFormula& formula, const std::vector<Utterance>& trace, std::size_t position = 0);

// Rewrites BoxK/DiamondK into Next-chains:
//   DiamondK(k, f) = f' \/ () f \/ ... \/ ()^(k-1) f           (strong next)
//   BoxK(k, f)     = f'' /\ W f /\ ... /\ W^(k-1) f
// with W g = !()!g (weak next). f' is f /\ <> true when f holds on the
// empty suffix and f otherwise; f'' is f \/ [] false when f fails on the
// empty suffix and f otherwise. Both keep the first step off the empty
// suffix, where the bounded window is empty.
TemporalFormula expandBounded(const TemporalFormula& formula);

// True/False absorption, idempotence of /\ and \/ (over flattened chains) and
// double-negation elimination. Nothing else.
TemporalFormula simplify(const TemporalFormula& formula);

// One-step formula progression. For every non-empty trace t,
//   evaluate(f, t, 0) == evaluate(progress(f, t[0]), t[1..], 0).
// Throws std::invalid_argument if f contains a bounded modality.
TemporalFormula progress(const TemporalFormula& formula, const Utterance& utterance);

// Online monitor over an utterance stream. Verdicts are monotone: once
// Satisfied or Violated, they never change.
class Monitor {
public:
  // Bounded modalities are expanded on construction.
  explicit Monitor(const TemporalFormula& formula);

  Verdict step(const Utterance& utterance);
  // Decides the residual on the empty remainder. Always conclusive.
  Verdict finish() const;

  const TemporalFormula& residual() const noexcept { return residual_; }
  const Verdict& current() const noexcept { return verdict_; }
  std::size_t consumed() const noexcept { return consumed_; }

private:
  TemporalFormula residual_;
  Verdict verdict_;
  std::size_t consumed_ = 0;
};

struct MonitorRun {
  std::vector<Verdict> steps;
  Verdict final;
};

MonitorRun monitor(const TemporalFormula& formula, const std::vector<Utterance>& utterances);

// Trace file: one utterance per line of whitespace-separated atoms, "-" for
// an utterance without atoms, "#" comments, blank lines ignored. Throws
// ParseError.
Trace parseTrace(std::string_view text);

} // namespace plogic
