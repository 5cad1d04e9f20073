// plogic: command-line front end for pronoun descriptor logics.
//
// Exit status: 0 positive result (provable / satisfied / true / denoting),
// 1 negative result, 2 usage, parse or configuration error, 3 resource limit.

#include <fstream>
#include <future>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "plogic/free_logic.hpp"
#include "plogic/linear_prover.hpp"
#include "plogic/parser.hpp"
#include "plogic/temporal_monitor.hpp"
#include "plogic/text_checker.hpp"

namespace {

using namespace plogic;

enum Exit : int { kPositive = 0, kNegative = 1, kError = 2, kResource = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw UsageError("cannot read '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// A formula given inline, via --file, or on standard input. File and stdin
// input may carry '#' comments.
struct FormulaInput {
  std::string inline_;
  std::string file;

  struct Text {
    std::string name;
    std::string content;
  };

  Text read() const {
    if (!inline_.empty() && !file.empty())
      throw UsageError("give the formula inline or with --file, not both");
    if (!inline_.empty())
      return {"<argument>", inline_};
    if (!file.empty())
      return {file, maskComments(readFile(file))};
    std::string all{std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    return {"<stdin>", maskComments(all)};
  }
};

void reportParseError(const std::string& source, const ParseError& e) { std::cerr << source << ":" << e.what() << "\n"; }

int cmdParse(const std::string& kind, bool term, const FormulaInput& input) {
  auto text = input.read();
  try {
    if (kind == "linear")
      std::cout << render(parseLinear(text.content)) << "\n";
    else if (kind == "temporal")
      std::cout << render(parseTemporal(text.content)) << "\n";
    else if (term)
      std::cout << render(parseFreeTerm(text.content)) << "\n";
    else
      std::cout << render(parseFree(text.content)) << "\n";
  } catch (const ParseError& e) {
    reportParseError(text.name, e);
    return kError;
  }
  return kPositive;
}

int cmdProve(const FormulaInput& input, const std::string& checkFile, std::size_t budget) {
  if (!checkFile.empty()) {
    if (!input.inline_.empty() || !input.file.empty())
      throw UsageError("--check takes a proof file and no sequent");
    std::string text = readFile(checkFile);
    ProofTree proof = [&] {
      try {
        return parseProof(text);
      } catch (const ParseError& e) {
        reportParseError(checkFile, e);
        throw;
      }
    }();
    CheckResult r = checkProof(proof);
    if (r) {
      std::cout << "accepted\n";
      return kPositive;
    }
    std::cout << "rejected at " << r.path << ": " << r.reason << "\n";
    return kNegative;
  }
  auto text = input.read();
  Sequent seq = [&] {
    try {
      return parseSequent(text.content);
    } catch (const ParseError& e) {
      reportParseError(text.name, e);
      throw;
    }
  }();
  auto proof = prove(seq, ProverOptions{budget});
  if (!proof) {
    std::cout << "not derivable\n";
    return kNegative;
  }
  std::cout << serializeProof(*proof);
  return kPositive;
}

int cmdMonitor(const FormulaInput& input, const std::string& traceFile, const std::string& mode) {
  auto text = input.read();
  TemporalFormula f = [&] {
    try {
      return parseTemporal(text.content);
    } catch (const ParseError& e) {
      reportParseError(text.name, e);
      throw;
    }
  }();
  std::string traceText = readFile(traceFile);
  Trace trace = [&] {
    try {
      return parseTrace(traceText);
    } catch (const ParseError& e) {
      reportParseError(traceFile, e);
      throw;
    }
  }();
  VerdictKind final;
  if (mode == "stepwise") {
    MonitorRun run = monitor(f, trace);
    for (std::size_t i = 0; i < run.steps.size(); ++i)
      std::cout << i << "\t" << verdictName(run.steps[i].kind) << "\n";
    final = run.final.kind;
    std::cout << "final\t" << verdictName(final) << "\n";
  } else {
    final = evaluate(f, trace, 0) ? VerdictKind::Satisfied : VerdictKind::Violated;
    std::cout << verdictName(final) << "\n";
  }
  return final == VerdictKind::Satisfied ? kPositive : kNegative;
}

int cmdEval(const std::string& modelFile, const FormulaInput& input, bool term) {
  std::string modelText = readFile(modelFile);
  Model model = [&] {
    try {
      return parseModel(modelText);
    } catch (const ParseError& e) {
      reportParseError(modelFile, e);
      throw;
    }
  }();
  auto text = input.read();
  try {
    if (term) {
      FreeTerm t = parseFreeTerm(text.content);
      auto free = freeVariables(t);
      if (!free.empty())
        throw EvalError("term has free variable '" + *free.begin() + "'");
      Denotation d = evalTerm(model, {}, t);
      std::cout << (d.denotes() ? d.individual() : "non-denoting") << "\n";
      return d.denotes() ? kPositive : kNegative;
    }
    bool value = checkSentence(model, parseFree(text.content));
    std::cout << (value ? "true" : "false") << "\n";
    return value ? kPositive : kNegative;
  } catch (const ParseError& e) {
    reportParseError(text.name, e);
    return kError;
  }
}

int cmdCheck(const std::string& specFile, const std::vector<std::string>& documents, bool machine) {
  ReferentSpec spec = [&] {
    try {
      return loadReferentSpec(specFile);
    } catch (const ParseError& e) {
      reportParseError(specFile, e);
      throw;
    }
  }();
  std::vector<std::string> texts;
  for (const auto& d : documents)
    texts.push_back(readFile(d));

  std::vector<std::future<Report>> pending;
  for (const auto& t : texts)
    pending.push_back(std::async(std::launch::async, [&spec, &t] { return checkDocument(t, spec); }));

  int status = kPositive;
  for (std::size_t i = 0; i < pending.size(); ++i) {
    Report r = pending[i].get();
    if (machine) {
      if (documents.size() > 1)
        std::cout << "# " << documents[i] << "\n";
      std::cout << formatReportMachine(r);
    } else {
      std::cout << formatReportHuman(r, texts[i], spec, documents[i]);
    }
    if (r.verdict.kind != VerdictKind::Satisfied)
      status = kNegative;
  }
  return status;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"plogic: parse, prove, monitor and check pronoun descriptors"};
  app.require_subcommand(1);
  bool machine = false;
  app.add_flag("--machine", machine, "Line-oriented, tab-separated output");

  FormulaInput input;
  auto addFormulaArgs = [&](CLI::App* cmd, const std::string& what) {
    cmd->add_option(what, input.inline_, "Inline " + what);
    cmd->add_option("--file", input.file, "Read the " + what + " from a file");
  };

  std::string kind;
  bool parseTerm = false;
  auto* parse = app.add_subcommand("parse", "Parse a formula and print its canonical form");
  parse->add_option("--kind", kind, "Formula family")->required()->check(CLI::IsMember({"linear", "temporal", "free"}));
  parse->add_flag("--term", parseTerm, "Parse a free-logic term instead of a formula");
  addFormulaArgs(parse, "formula");

  std::string checkFile;
  std::size_t budget = ProverOptions{}.nodeBudget;
  auto* proveCmd = app.add_subcommand("prove", "Search for a linear-logic proof of a sequent");
  addFormulaArgs(proveCmd, "sequent");
  proveCmd->add_option("--check", checkFile, "Check a saved proof tree instead of searching");
  proveCmd->add_option("--budget", budget, "Search node budget");

  std::string traceFile, mode = "batch";
  auto* monitorCmd = app.add_subcommand("monitor", "Check an utterance trace against a temporal descriptor");
  addFormulaArgs(monitorCmd, "formula");
  monitorCmd->add_option("--trace", traceFile, "Trace file")->required();
  monitorCmd->add_option("--mode", mode, "batch or stepwise")->check(CLI::IsMember({"batch", "stepwise"}));

  std::string modelFile;
  bool evalTermFlag = false;
  auto* evalCmd = app.add_subcommand("eval", "Evaluate a free-logic sentence or term over a finite model");
  evalCmd->add_option("--model", modelFile, "Model file")->required();
  evalCmd->add_flag("--term", evalTermFlag, "Evaluate a description term and print its denotation");
  addFormulaArgs(evalCmd, "formula");

  std::string specFile;
  std::vector<std::string> documents;
  auto* checkCmd = app.add_subcommand("check", "Check documents against a referent's descriptor");
  checkCmd->add_option("--spec", specFile, "Referent spec file")->required();
  checkCmd->add_option("documents", documents, "Documents to check")->required();

  for (auto* sub : {parse, proveCmd, monitorCmd, evalCmd, checkCmd})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kError;
  }

  try {
    if (*parse)
      return cmdParse(kind, parseTerm, input);
    if (*proveCmd)
      return cmdProve(input, checkFile, budget);
    if (*monitorCmd)
      return cmdMonitor(input, traceFile, mode);
    if (*evalCmd)
      return cmdEval(modelFile, input, evalTermFlag);
    if (*checkCmd)
      return cmdCheck(specFile, documents, machine);
  } catch (const ParseError&) {
    return kError; // already reported with its source
  } catch (const ResourceLimit& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kResource;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}
