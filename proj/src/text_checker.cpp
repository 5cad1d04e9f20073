#include "plogic/text_checker.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "plogic/parser.hpp"

namespace plogic {

namespace {

bool isAsciiLetter(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }

bool isSpace(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

std::string lowered(std::string_view s) {
  std::string out(s);
  for (char& c : out)
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::string joinAtoms(const AtomSet& atoms, std::string_view sep) {
  std::string out;
  for (const auto& a : atoms) {
    if (!out.empty())
      out += sep;
    out += a.key();
  }
  return out;
}

} // namespace

// --- lexicon ---

void Lexicon::add(std::string_view surface, const PronounAtom& atom) {
  if (!isPronounToken(surface))
    throw std::invalid_argument("lexicon forms must be ASCII letters: '" + std::string(surface) + "'");
  entries_[lowered(surface)].insert(atom);
}

const AtomSet* Lexicon::lookup(std::string_view token) const {
  auto it = entries_.find(lowered(token));
  return it == entries_.end() ? nullptr : &it->second;
}

FormRole Lexicon::role(std::string_view surface, const PronounAtom& atom) {
  std::string s = lowered(surface);
  if (s == atom.subject())
    return FormRole::Subject;
  if (s == atom.object())
    return FormRole::Object;
  return FormRole::Other;
}

AtomSet Lexicon::coveredAtoms() const {
  AtomSet out;
  for (const auto& [surface, atoms] : entries_)
    out.insert(atoms.begin(), atoms.end());
  return out;
}

void Lexicon::validate() const {
  for (const auto& atom : coveredAtoms()) {
    for (const std::string* form : {&atom.subject(), &atom.object()}) {
      const AtomSet* hit = lookup(*form);
      if (!hit || !hit->count(atom))
        throw ConfigError("lexicon maps forms to " + atom.key() + " but has no entry '" + *form + " -> " +
                          atom.key() + "'");
    }
  }
}

Lexicon parseLexicon(std::string_view text) {
  std::string masked = maskComments(text);
  Lexicon lex;
  std::size_t lineStart = 0;
  while (lineStart <= masked.size()) {
    std::size_t lineEnd = masked.find('\n', lineStart);
    if (lineEnd == std::string::npos)
      lineEnd = masked.size();
    std::string_view line(masked.data() + lineStart, lineEnd - lineStart);
    std::vector<std::pair<std::string_view, std::size_t>> words;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && isSpace(line[i]))
        ++i;
      std::size_t start = i;
      while (i < line.size() && !isSpace(line[i]))
        ++i;
      if (i > start)
        words.emplace_back(line.substr(start, i - start), lineStart + start);
    }
    if (!words.empty()) {
      if (words.size() < 3 || words[1].first != "->")
        throw ParseError::at(text, words[0].second, "expected '<form> -> <atom> [<atom>...]'");
      if (!isPronounToken(words[0].first))
        throw ParseError::at(text, words[0].second, "lexicon forms must be ASCII letters");
      for (std::size_t w = 2; w < words.size(); ++w) {
        try {
          lex.add(words[0].first, PronounAtom::fromKey(words[w].first));
        } catch (const std::invalid_argument&) {
          throw ParseError::at(text, words[w].second,
                               "malformed pronoun atom '" + std::string(words[w].first) + "'", {"pronoun atom"});
        }
      }
    }
    lineStart = lineEnd + 1;
  }
  lex.validate();
  return lex;
}

const Lexicon& defaultLexicon() {
  static const Lexicon lex = parseLexicon(defaultLexiconText());
  return lex;
}

// --- referent specs ---

ReferentSpec makeReferentSpec(std::vector<std::string> names, TemporalFormula descriptor, Lexicon lexicon) {
  if (names.empty())
    throw ConfigError("referent spec needs at least one name");
  lexicon.validate();
  AtomSet covered = lexicon.coveredAtoms();
  for (const auto& a : atoms(descriptor))
    if (!covered.count(a))
      throw ConfigError("descriptor atom " + a.key() + " has no forms in the lexicon");
  return ReferentSpec{std::move(names), std::move(descriptor), std::move(lexicon)};
}

ReferentSpec parseReferentSpec(std::string_view text, const std::filesystem::path& baseDir) {
  std::string masked = maskComments(text);
  std::optional<std::vector<std::string>> names;
  std::optional<TemporalFormula> descriptor;
  std::optional<Lexicon> lexicon;

  std::size_t lineStart = 0;
  while (lineStart <= masked.size()) {
    std::size_t lineEnd = masked.find('\n', lineStart);
    if (lineEnd == std::string::npos)
      lineEnd = masked.size();
    std::string_view line(masked.data() + lineStart, lineEnd - lineStart);
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first != std::string_view::npos) {
      std::size_t colon = line.find(':', first);
      if (colon == std::string_view::npos)
        throw ParseError::at(text, lineStart + first, "expected '<key>: <value>'",
                             {"'referent:'", "'descriptor:'", "'lexicon:'"});
      std::string_view key = line.substr(first, colon - first);
      while (!key.empty() && isSpace(key.back()))
        key.remove_suffix(1);
      std::size_t valueStart = colon + 1;
      std::string_view value = line.substr(valueStart);
      auto duplicate = [&] {
        return ParseError::at(text, lineStart + first, "'" + std::string(key) + ":' given twice");
      };
      if (key == "referent") {
        if (names)
          throw duplicate();
        std::vector<std::string> list;
        std::istringstream in{std::string(value)};
        for (std::string name; in >> name;)
          list.push_back(name);
        if (list.empty())
          throw ParseError::at(text, lineStart + valueStart, "referent needs at least one name", {"name"});
        names = std::move(list);
      } else if (key == "descriptor") {
        if (descriptor)
          throw duplicate();
        try {
          descriptor = parseTemporal(value);
        } catch (const ParseError& e) {
          throw ParseError::at(text, lineStart + valueStart + e.byteOffset(), e.message(), e.expected());
        }
      } else if (key == "lexicon") {
        if (lexicon)
          throw duplicate();
        std::string path(value);
        path.erase(0, path.find_first_not_of(" \t"));
        path.erase(path.find_last_not_of(" \t\r") + 1);
        if (path.empty())
          throw ParseError::at(text, lineStart + valueStart, "lexicon needs a path", {"path"});
        std::filesystem::path p(path);
        if (p.is_relative() && !baseDir.empty())
          p = baseDir / p;
        std::ifstream in(p, std::ios::binary);
        if (!in)
          throw ConfigError("cannot read lexicon file '" + p.string() + "'");
        std::stringstream buf;
        buf << in.rdbuf();
        try {
          lexicon = parseLexicon(buf.str());
        } catch (const ParseError& e) {
          throw ConfigError("in lexicon '" + p.string() + "': " + e.what());
        }
      } else {
        throw ParseError::at(text, lineStart + first, "unknown key '" + std::string(key) + "'",
                             {"'referent:'", "'descriptor:'", "'lexicon:'"});
      }
    }
    lineStart = lineEnd + 1;
  }
  if (!names)
    throw ParseError::at(text, text.size(), "spec has no 'referent:' line");
  if (!descriptor)
    throw ParseError::at(text, text.size(), "spec has no 'descriptor:' line");
  return makeReferentSpec(std::move(*names), std::move(*descriptor), lexicon ? std::move(*lexicon) : defaultLexicon());
}

ReferentSpec loadReferentSpec(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in)
    throw ConfigError("cannot read spec file '" + file.string() + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parseReferentSpec(buf.str(), file.parent_path());
}

// --- documents ---

std::vector<Sentence> segment(std::string_view text) {
  std::vector<Sentence> out;
  std::size_t i = 0;
  const std::size_t n = text.size();
  auto emit = [&](std::size_t start, std::size_t end) {
    while (end > start && isSpace(text[end - 1]))
      --end;
    if (end > start)
      out.push_back({text.substr(start, end - start), {start, end}});
  };
  while (i < n) {
    while (i < n && isSpace(text[i]))
      ++i;
    if (i == n)
      break;
    std::size_t start = i;
    while (i < n) {
      if (text[i] == '.' || text[i] == '!' || text[i] == '?') {
        std::size_t run = i;
        while (run < n && (text[run] == '.' || text[run] == '!' || text[run] == '?'))
          ++run;
        if (run == n || isSpace(text[run])) {
          i = run;
          break;
        }
        i = run;
        continue;
      }
      ++i;
    }
    emit(start, i);
  }
  return out;
}

namespace {

struct Extracted {
  Trace trace;
  std::vector<std::size_t> sentenceOf; // utterance index -> sentence index
};

Extracted extract(std::string_view text, const Lexicon& lexicon) {
  Extracted out;
  auto sentences = segment(text);
  for (std::size_t s = 0; s < sentences.size(); ++s) {
    std::string_view body = sentences[s].text;
    AtomSet found;
    std::size_t i = 0;
    while (i < body.size()) {
      while (i < body.size() && !isAsciiLetter(body[i]))
        ++i;
      std::size_t start = i;
      while (i < body.size() && isAsciiLetter(body[i]))
        ++i;
      if (i > start)
        if (const AtomSet* hit = lexicon.lookup(body.substr(start, i - start)))
          found.insert(hit->begin(), hit->end());
    }
    if (!found.empty()) {
      out.trace.push_back(Utterance{std::move(found), sentences[s].span});
      out.sentenceOf.push_back(s);
    }
  }
  return out;
}

std::pair<std::size_t, std::size_t> lineColumn(std::string_view text, std::size_t offset) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

} // namespace

Trace extractTrace(std::string_view text, const ReferentSpec& spec) {
  return extract(text, spec.lexicon).trace;
}

Report checkDocument(std::string_view text, const ReferentSpec& spec) {
  Extracted ex = extract(text, spec.lexicon);
  Monitor m(spec.descriptor);
  Report report;
  for (std::size_t u = 0; u < ex.trace.size(); ++u) {
    bool wasOpen = m.current().kind == VerdictKind::Inconclusive;
    Verdict v = m.step(ex.trace[u]);
    if (wasOpen && v.kind == VerdictKind::Violated) {
      const Utterance& utt = ex.trace[u];
      report.diagnostics.push_back(Diagnostic{
          *utt.sourceSpan, ex.sentenceOf[u], utt.atoms,
          "uses " + joinAtoms(utt.atoms, ", ") + ", violating " + render(spec.descriptor)});
    }
  }
  report.verdict = m.finish();
  if (report.verdict.kind == VerdictKind::Violated && !report.verdict.position)
    report.diagnostics.push_back(Diagnostic{{text.size(), text.size()}, std::nullopt, {},
                                            "document ends before " + render(spec.descriptor) + " is met"});
  report.trace = std::move(ex.trace);
  return report;
}

std::string formatReportMachine(const Report& report) {
  std::string out;
  for (const auto& d : report.diagnostics) {
    out += std::to_string(d.span.start);
    out += '\t';
    out += std::to_string(d.span.end);
    out += '\t';
    out += verdictName(report.verdict.kind);
    out += '\t';
    out += d.atomsFound.empty() ? "-" : joinAtoms(d.atomsFound, ",");
    out += '\n';
  }
  return out;
}

std::string formatReportHuman(const Report& report, std::string_view text, const ReferentSpec& spec,
                              std::string_view documentName) {
  std::string out;
  for (const auto& d : report.diagnostics) {
    auto [line, col] = lineColumn(text, d.span.start);
    out += std::string(documentName) + ":" + std::to_string(line) + ":" + std::to_string(col) + ": ";
    if (d.sentenceIndex)
      out += "sentence " + std::to_string(*d.sentenceIndex + 1) + " ";
    out += d.message + "\n";
  }
  std::string names;
  for (const auto& n : spec.referentNames)
    names += (names.empty() ? "" : " ") + n;
  out += "note: every pronoun in the document is attributed to " + names +
         "; coreference is not resolved\n";
  out += std::string(documentName) + ": " + std::string(verdictName(report.verdict.kind)) + " (" +
         std::to_string(report.trace.size()) + " pronoun-bearing sentence(s), descriptor " +
         render(spec.descriptor) + ")\n";
  return out;
}

} // namespace plogic
