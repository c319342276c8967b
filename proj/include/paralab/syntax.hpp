#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "paralab/formula.hpp"
#include "paralab/rules.hpp"

namespace paralab {

// How a derived line claims to follow. `cited` holds line labels and
// subproof ids; definition names, the subst direction and the bivalence
// case sentence ride in the extra fields.
struct Justification {
  RuleId rule = RuleId::Reit;
  std::vector<std::string> cited;
  std::optional<std::string> defName;
  std::optional<SubstDirection> direction;
  std::optional<std::string> caseName;
};

struct Step;

struct AssumeStep {
  std::string label;
  Formula formula;
};

struct DerivedStep {
  std::string label;
  Formula formula;
  Justification just;
};

struct SubproofStep {
  std::string id;
  std::vector<Step> steps;
};

struct Step {
  std::variant<AssumeStep, DerivedStep, SubproofStep> node;

  bool isAssume() const { return std::holds_alternative<AssumeStep>(node); }
  bool isDerived() const { return std::holds_alternative<DerivedStep>(node); }
  bool isSubproof() const { return std::holds_alternative<SubproofStep>(node); }
  const AssumeStep& assume() const { return std::get<AssumeStep>(node); }
  const DerivedStep& derived() const { return std::get<DerivedStep>(node); }
  const SubproofStep& subproof() const { return std::get<SubproofStep>(node); }

  // The label of a line or the id of a subproof.
  const std::string& key() const;
};

struct ProofScript {
  std::string name;
  std::vector<Formula> hypotheses;
  std::vector<Step> steps;
  Formula conclusion;  // the qed formula
};

struct Document {
  std::vector<Definition> definitions;
  std::vector<ProofScript> proofs;

  const Definition* findDefinition(const std::string& name) const;
  const ProofScript* findProof(const std::string& name) const;
};

bool operator==(const Justification& a, const Justification& b);
bool operator==(const AssumeStep& a, const AssumeStep& b);
bool operator==(const DerivedStep& a, const DerivedStep& b);
bool operator==(const SubproofStep& a, const SubproofStep& b);
bool operator==(const Step& a, const Step& b);
bool operator==(const ProofScript& a, const ProofScript& b);
bool operator==(const Document& a, const Document& b);

// A single parse problem with a 1-based position. `expected` lists token
// spellings that would have been accepted, when known.
struct Diagnostic {
  int line = 0;
  int column = 0;
  std::string message;
  std::vector<std::string> expected;

  std::string render() const;  // "line:col: message (expected ...)"
};

struct FormulaParseResult {
  std::optional<Formula> formula;
  std::optional<Diagnostic> error;
  bool ok() const { return formula.has_value(); }
};

// Grammar, precedence low to high: <-> (non-associative), -> (right
// associative), |, &, ~. `bot` is falsum; lowercase identifiers are atoms,
// uppercase-initial identifiers are sentence names; T(...), F(...) and
// Val(...,...) are the fixed predicates (T, F, Val are reserved).
// Unicode aliases are accepted on input.
FormulaParseResult parseFormula(const std::string& text);

// Convenience for fixed inputs; throws Error on a parse problem.
Formula mustParseFormula(const std::string& text);

// Minimal parentheses; re-parsing yields a structurally equal formula.
// Operands of <-> keep parentheses whenever they are arrow formulas.
std::string printFormula(const Formula& f);

struct ParseResult {
  Document document;
  std::vector<Diagnostic> errors;
  bool ok() const { return errors.empty(); }
};

// Parses a whole document (definitions and proofs). Collects every
// independent problem it can: formula syntax errors, duplicate labels,
// citations out of scope, unknown rules, bad justification arity.
ParseResult parseScript(const std::string& text);

std::string printScript(const Document& doc);

}  // namespace paralab
