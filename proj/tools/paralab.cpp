#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "paralab/corpus.hpp"
#include "paralab/kernel.hpp"
#include "paralab/report.hpp"
#include "paralab/semantics.hpp"
#include "paralab/syntax.hpp"
#include "paralab/version.hpp"

using namespace paralab;
using report::Json;

namespace {

// Exit codes: 0 success, 1 proof invalid / matrix mismatch, 2 parse error,
// 3 usage error.
constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kParseError = 2;
constexpr int kUsageError = 3;

std::optional<std::string> readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::string> splitList(const std::string& s) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

int usageError(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  return kUsageError;
}

// Returns the document or prints every diagnostic and exits with 2.
std::optional<Document> loadDocument(const std::string& path, int& exitCode) {
  std::optional<std::string> text = readFile(path);
  if (!text) {
    std::cerr << "error: cannot read '" << path << "'\n";
    exitCode = kParseError;
    return std::nullopt;
  }
  ParseResult parsed = parseScript(*text);
  if (!parsed.ok()) {
    for (const Diagnostic& d : parsed.errors)
      std::cerr << path << ":" << d.render() << "\n";
    exitCode = kParseError;
    return std::nullopt;
  }
  return std::move(parsed.document);
}

Json envelope(const std::string& command) {
  Json j;
  j["tool"] = kToolName;
  j["version"] = kToolVersion;
  j["command"] = command;
  return j;
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

struct ProfileFlags {
  std::string profile = "classical";
  std::string enable, disable, structural, linearScope;

  void attach(CLI::App* cmd) {
    cmd->add_option("--profile", profile, "Base profile")->capture_default_str();
    cmd->add_option("--enable", enable, "Rules to enable, comma-separated");
    cmd->add_option("--disable", disable, "Rules to disable, comma-separated");
    cmd->add_option("--structural", structural, "Structural discipline: free|linear");
    cmd->add_option("--linear-scope", linearScope, "What linear mode meters: assumptions|all");
  }

  // Throws ProfileError on any bad name or conflicting toggles.
  Profile resolve() const {
    auto toRules = [](const std::string& list) {
      std::set<RuleId> rules;
      for (const std::string& name : splitList(list)) {
        std::optional<RuleId> r = ruleFromName(name);
        if (!r) throw ProfileError("unknown rule '" + name + "'");
        rules.insert(*r);
      }
      return rules;
    };
    std::optional<Structural> s;
    if (!structural.empty()) {
      if (structural == "free") s = Structural::Free;
      else if (structural == "linear") s = Structural::Linear;
      else throw ProfileError("unknown structural mode '" + structural + "'");
    }
    std::optional<LinearScope> scope;
    if (!linearScope.empty()) {
      if (linearScope == "assumptions") scope = LinearScope::AssumptionsOnly;
      else if (linearScope == "all") scope = LinearScope::AllLines;
      else throw ProfileError("unknown linear scope '" + linearScope + "'");
    }
    return buildProfile(profile, toRules(enable), toRules(disable), s, scope);
  }
};

std::optional<Valuation> parseValuation(const std::string& list, std::string& error) {
  Valuation v;
  for (const std::string& item : splitList(list)) {
    std::size_t eq = item.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 2 != item.size()) {
      error = "valuation entries look like name=t|b|f, got '" + item + "'";
      return std::nullopt;
    }
    std::optional<TruthValue> value = truthValueFromChar(item[eq + 1]);
    if (!value) {
      error = "unknown truth value '" + item.substr(eq + 1) + "' in '" + item + "'";
      return std::nullopt;
    }
    v[item.substr(0, eq)] = *value;
  }
  return v;
}

int runCheck(const std::string& file, const std::string& proofName, const ProfileFlags& flags,
             bool machine) {
  int exitCode = kOk;
  std::optional<Document> doc = loadDocument(file, exitCode);
  if (!doc) return exitCode;
  Profile profile;
  try {
    profile = flags.resolve();
  } catch (const ProfileError& e) {
    return usageError(e.what());
  }
  std::vector<const ProofScript*> proofs;
  if (!proofName.empty()) {
    const ProofScript* p = doc->findProof(proofName);
    if (!p) return usageError("no proof named '" + proofName + "' in " + file);
    proofs.push_back(p);
  } else {
    for (const ProofScript& p : doc->proofs) proofs.push_back(&p);
    if (proofs.empty()) return usageError("no proofs in " + file);
  }

  bool allValid = true;
  Json results = Json::array();
  for (const ProofScript* p : proofs) {
    CheckResult res = checkProof(*p, doc->definitions, profile);
    allValid = allValid && res.valid;
    if (machine) results.push_back(report::checkJson(*p, res));
    else std::cout << report::checkText(*p, res, profile);
  }
  if (machine) {
    Json j = envelope("check");
    j["profile"] = report::profileJson(profile);
    j["results"] = std::move(results);
    emit(j);
  }
  return allValid ? kOk : kInvalid;
}

int runAudit(const std::string& file, const std::string& proofName, bool allLines, bool machine) {
  int exitCode = kOk;
  std::optional<Document> doc = loadDocument(file, exitCode);
  if (!doc) return exitCode;
  LinearScope scope = allLines ? LinearScope::AllLines : LinearScope::AssumptionsOnly;
  std::vector<const ProofScript*> proofs;
  if (!proofName.empty()) {
    const ProofScript* p = doc->findProof(proofName);
    if (!p) return usageError("no proof named '" + proofName + "' in " + file);
    proofs.push_back(p);
  } else {
    for (const ProofScript& p : doc->proofs) proofs.push_back(&p);
  }
  Json results = Json::array();
  for (const ProofScript* p : proofs) {
    UsageReport usage = auditResources(*p, scope);
    if (machine) {
      Json j;
      j["proof"] = p->name;
      j["usage"] = report::usageJson(usage);
      results.push_back(std::move(j));
    } else {
      std::cout << report::usageText(p->name, usage);
    }
  }
  if (machine) {
    Json j = envelope("audit");
    j["scope"] = std::string(linearScopeName(scope));
    j["results"] = std::move(results);
    emit(j);
  }
  return kOk;
}

int runSemanticsEval(const std::string& formulaText, const std::string& valuationText,
                     const std::string& logicText, bool machine) {
  std::optional<Logic> logic = logicFromName(logicText);
  if (!logic) return usageError("unknown logic '" + logicText + "'");
  FormulaParseResult parsed = parseFormula(formulaText);
  if (!parsed.ok()) {
    std::cerr << "formula:" << parsed.error->render() << "\n";
    return kParseError;
  }
  std::string valError;
  std::optional<Valuation> v = parseValuation(valuationText, valError);
  if (!v) return usageError(valError);
  TruthValue value;
  try {
    value = evalFormula(*parsed.formula, *v, *logic);
  } catch (const EvalError& e) {
    return usageError(e.what());
  }
  bool des = designated(value, *logic);
  if (machine) {
    Json j = envelope("semantics eval");
    j["logic"] = std::string(logicName(*logic));
    j["formula"] = printFormula(*parsed.formula);
    j["valuation"] = report::valuationJson(*v);
    j["value"] = std::string(1, truthValueChar(value));
    j["designated"] = des;
    emit(j);
  } else {
    std::cout << truthValueChar(value) << (des ? " (designated)" : " (undesignated)") << "\n";
  }
  return kOk;
}

int runSemanticsRule(const std::string& ruleText, const std::string& logicText, bool machine) {
  std::optional<Logic> logic = logicFromName(logicText);
  if (!logic) return usageError("unknown logic '" + logicText + "'");
  const RuleSchema* schema = findSchema(ruleText);
  if (!schema) {
    std::string known;
    for (const RuleSchema& s : semanticSchemas()) known += (known.empty() ? "" : ", ") + s.name;
    return usageError("no semantic schema named '" + ruleText + "' (known: " + known + ")");
  }
  Verdict verdict = ruleValid(*schema, *logic);
  if (machine) {
    Json j = envelope("semantics rule");
    j["logic"] = std::string(logicName(*logic));
    j["rule"] = schema->name;
    j["verdict"] = verdict.valid ? "valid" : "countermodel";
    if (verdict.countermodel) j["countermodel"] = report::valuationJson(*verdict.countermodel);
    emit(j);
  } else {
    if (verdict.valid) std::cout << "valid\n";
    else std::cout << "countermodel: " << report::valuationText(*verdict.countermodel) << "\n";
  }
  return kOk;
}

int runSolve(const std::string& file, const std::string& logicText, const std::string& modeText,
             const std::string& valuationText, bool machine) {
  std::optional<Logic> logic = logicFromName(logicText);
  if (!logic) return usageError("unknown logic '" + logicText + "'");
  std::optional<SolveMode> mode = solveModeFromName(modeText);
  if (!mode) return usageError("unknown mode '" + modeText + "'");
  int exitCode = kOk;
  std::optional<Document> doc = loadDocument(file, exitCode);
  if (!doc) return exitCode;
  if (doc->definitions.empty()) return usageError("no definitions in " + file);
  std::string valError;
  std::optional<Valuation> fixed = parseValuation(valuationText, valError);
  if (!fixed) return usageError(valError);
  std::vector<Valuation> solutions;
  try {
    solutions = solveDefinitions(doc->definitions, *logic, *mode, *fixed);
  } catch (const Error& e) {
    return usageError(e.what());
  }
  if (machine) {
    Json j = envelope("solve");
    j["logic"] = std::string(logicName(*logic));
    j["mode"] = std::string(solveModeName(*mode));
    Json names = Json::array();
    for (const Definition& d : doc->definitions) names.push_back(d.name);
    j["names"] = std::move(names);
    Json sols = Json::array();
    for (const Valuation& s : solutions) sols.push_back(report::valuationJson(s));
    j["solutions"] = std::move(sols);
    emit(j);
  } else {
    if (solutions.empty()) {
      std::cout << "no solution\n";
    } else {
      for (const Valuation& s : solutions) std::cout << report::valuationText(s) << "\n";
    }
  }
  return kOk;
}

int runMatrix(const std::string& profilesText, bool verify, const std::string& expectedPath,
              bool machine) {
  std::vector<std::string> names =
      profilesText.empty() ? builtinProfileNames() : splitList(profilesText);
  std::vector<Profile> profiles;
  for (const std::string& name : names) {
    try {
      profiles.push_back(builtinProfile(name));
    } catch (const ProfileError& e) {
      return usageError(e.what());
    }
  }
  MatrixReport computed = paralab::runMatrix(profiles);

  bool match = true;
  std::vector<std::string> mismatches;
  if (verify) {
    MatrixReport expected;
    if (expectedPath.empty()) {
      expected = expectedMatrix();
    } else {
      std::optional<std::string> text = readFile(expectedPath);
      if (!text) return usageError("cannot read '" + expectedPath + "'");
      Json j = Json::parse(*text, nullptr, false);
      if (j.is_discarded()) return usageError("'" + expectedPath + "' is not valid JSON");
      try {
        expected = report::matrixFromJson(j);
      } catch (const Error& e) {
        return usageError(e.what());
      }
    }
    for (const std::string& proof : computed.proofs) {
      for (const std::string& profile : computed.profiles) {
        auto row = expected.cells.find(proof);
        if (row == expected.cells.end() || !row->second.count(profile))
          return usageError("expected matrix has no cell for " + proof + " x " + profile);
        const MatrixCell& want = row->second.at(profile);
        const MatrixCell& got = computed.cells.at(proof).at(profile);
        if (want != got) {
          match = false;
          auto cellText = [](const MatrixCell& c) {
            return c.valid ? std::string("valid") : "invalid@" + c.at + "(" + c.reason + ")";
          };
          mismatches.push_back(proof + " x " + profile + ": expected " + cellText(want) +
                               ", got " + cellText(got));
        }
      }
    }
  }

  if (machine) {
    Json j = envelope("matrix");
    j["matrix"] = report::matrixJson(computed);
    if (verify) {
      Json v;
      v["expected_source"] = expectedPath.empty() ? "built-in" : expectedPath;
      v["match"] = match;
      v["mismatches"] = mismatches;
      j["verify"] = std::move(v);
    }
    emit(j);
  } else {
    std::cout << report::matrixText(computed);
    if (verify) {
      if (match) {
        std::cout << "verify: all " << computed.proofs.size() * computed.profiles.size()
                  << " cells match\n";
      } else {
        for (const std::string& m : mismatches) std::cout << "mismatch: " << m << "\n";
      }
    }
  }
  return verify && !match ? kInvalid : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"proof-checking laboratory for self-referential paradoxes"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  std::string file, proofName, formulaText, ruleText;
  std::string valuationText, logicText = "lp", modeText = "equational";
  std::string format = "text", profilesText, expectedPath;
  bool allLines = false, verify = false;
  ProfileFlags profileFlags;

  auto addFormat = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format: text|machine")->capture_default_str();
  };

  CLI::App* check = app.add_subcommand("check", "Check proofs against a profile");
  check->add_option("file", file, "Proof script file")->required();
  check->add_option("--proof", proofName, "Check only this proof");
  profileFlags.attach(check);
  addFormat(check);

  CLI::App* audit = app.add_subcommand("audit", "Report citation counts per assumption");
  audit->add_option("file", file, "Proof script file")->required();
  audit->add_option("--proof", proofName, "Audit only this proof");
  audit->add_flag("--all-lines", allLines, "Meter every line, not just assumptions");
  addFormat(audit);

  CLI::App* semantics = app.add_subcommand("semantics", "Truth tables and rule validity");
  semantics->require_subcommand(1);
  CLI::App* eval = semantics->add_subcommand("eval", "Evaluate a formula under a valuation");
  eval->add_option("formula", formulaText, "Formula text")->required();
  eval->add_option("--valuation", valuationText, "Comma-separated name=t|b|f pairs");
  eval->add_option("--logic", logicText, "Logic: lp|cl")->capture_default_str();
  addFormat(eval);
  CLI::App* rule = semantics->add_subcommand("rule", "Brute-force a rule schema's validity");
  rule->add_option("rule", ruleText, "Schema name, e.g. ds, mp, explode, lem")->required();
  rule->add_option("--logic", logicText, "Logic: lp|cl")->capture_default_str();
  addFormat(rule);

  CLI::App* solve = app.add_subcommand("solve", "Solve definitions for admissible truth values");
  solve->add_option("file", file, "File with definitions")->required();
  solve->add_option("--logic", logicText, "Logic: lp|cl")->capture_default_str();
  solve->add_option("--mode", modeText, "equational|designated-iff")->capture_default_str();
  solve->add_option("--valuation", valuationText, "Values for free identifiers");
  addFormat(solve);

  CLI::App* matrix = app.add_subcommand("matrix", "Corpus-by-profile verdict table");
  matrix->add_option("--profiles", profilesText, "Comma-separated profile names");
  matrix->add_flag("--verify", verify, "Compare against the expected matrix");
  matrix->add_option("--expected", expectedPath, "Expected matrix JSON file");
  addFormat(matrix);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsageError;
  }

  if (format != "text" && format != "machine")
    return usageError("unknown format '" + format + "'");
  bool machine = format == "machine";

  if (check->parsed()) return runCheck(file, proofName, profileFlags, machine);
  if (audit->parsed()) return runAudit(file, proofName, allLines, machine);
  if (semantics->parsed()) {
    if (eval->parsed()) return runSemanticsEval(formulaText, valuationText, logicText, machine);
    return runSemanticsRule(ruleText, logicText, machine);
  }
  if (solve->parsed()) return runSolve(file, logicText, modeText, valuationText, machine);
  if (matrix->parsed()) return runMatrix(profilesText, verify, expectedPath, machine);
  return usageError("no command given");
}
