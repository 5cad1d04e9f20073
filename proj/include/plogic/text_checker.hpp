#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "plogic/temporal_formula.hpp"
#include "plogic/temporal_monitor.hpp"

namespace plogic {

class ConfigError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

enum class FormRole { Subject, Object, Other };

// Surface word forms (she, her, herself, ...) mapped to pronoun atoms.
// Lookup is case-insensitive; a form may belong to several atoms.
class Lexicon {
public:
  // Throws std::invalid_argument unless surface is nonempty ASCII letters.
  void add(std::string_view surface, const PronounAtom& atom);

  // nullptr if the token is not a known form.
  const AtomSet* lookup(std::string_view token) const;
  // Subject/object by comparison with the atom's own tokens.
  static FormRole role(std::string_view surface, const PronounAtom& atom);

  AtomSet coveredAtoms() const;
  const std::map<std::string, AtomSet>& entries() const noexcept { return entries_; }

  // Throws ConfigError if some atom lacks its subject or object form.
  void validate() const;

private:
  std::map<std::string, AtomSet> entries_;
};

// "<surface> -> <atom> [<atom>...]" lines, "#" comments. Throws ParseError;
// the result is validated (ConfigError).
Lexicon parseLexicon(std::string_view text);
std::string_view defaultLexiconText() noexcept;
const Lexicon& defaultLexicon();

struct ReferentSpec {
  std::vector<std::string> referentNames;
  TemporalFormula descriptor;
  Lexicon lexicon;
};

// Throws ConfigError when names are empty or the descriptor mentions an atom
// the lexicon cannot recognize.
ReferentSpec makeReferentSpec(std::vector<std::string> names, TemporalFormula descriptor, Lexicon lexicon);

// "referent: <name>...", "descriptor: <formula>", optional "lexicon: <path>"
// (relative paths resolve against baseDir). Throws ParseError / ConfigError.
ReferentSpec parseReferentSpec(std::string_view text, const std::filesystem::path& baseDir = {});
ReferentSpec loadReferentSpec(const std::filesystem::path& file);

struct Sentence {
  std::string_view text;
  ByteSpan span;
};

// Splits after runs of '.', '!' or '?' that are followed by whitespace or the
// end of input. Spans are half-open, trimmed of surrounding whitespace and
// include the terminator.
std::vector<Sentence> segment(std::string_view text);

// One utterance per sentence containing at least one lexicon form; sentences
// without forms are skipped.
Trace extractTrace(std::string_view text, const ReferentSpec& spec);

struct Diagnostic {
  ByteSpan span;
  // 0-based; empty for end-of-document diagnostics.
  std::optional<std::size_t> sentenceIndex;
  AtomSet atomsFound;
  std::string message;

  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

struct Report {
  Verdict verdict;
  std::vector<Diagnostic> diagnostics;
  Trace trace;

  friend bool operator==(const Report&, const Report&) = default;
};

// Attributes every pronoun in the document to the referent (no coreference
// resolution) and monitors the resulting trace against the descriptor. The
// verdict is always forced at the end of the document.
Report checkDocument(std::string_view text, const ReferentSpec& spec);

// "<byte_start>\t<byte_end>\t<verdict>\t<atoms>" per diagnostic.
std::string formatReportMachine(const Report& report);
std::string formatReportHuman(const Report& report, std::string_view text, const ReferentSpec& spec,
                              std::string_view documentName);

} // namespace plogic
