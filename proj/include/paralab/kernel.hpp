#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "paralab/formula.hpp"
#include "paralab/rules.hpp"
#include "paralab/syntax.hpp"

namespace paralab {

enum class Structural : unsigned char { Free, Linear };

// What the linear discipline meters: only subproof assumptions (the
// default), or every line. Closed subproofs are metered in linear mode
// either way; a discharge rule consumes its block.
enum class LinearScope : unsigned char { AssumptionsOnly, AllLines };

struct Profile {
  std::string name;
  std::set<RuleId> enabled;
  Structural structural = Structural::Free;
  LinearScope linearScope = LinearScope::AssumptionsOnly;

  bool ruleEnabled(RuleId r) const { return enabled.count(r) != 0; }
};

struct ProfileError : Error {
  using Error::Error;
};

// classical, dialetheic, substructural, dialetheic-substructural, no-dt.
const std::vector<std::string>& builtinProfileNames();
Profile builtinProfile(const std::string& name);  // throws ProfileError

// Base profile (classical when empty) with toggles applied. premise and
// reit cannot be disabled; enable/disable must not overlap.
Profile buildProfile(const std::string& baseName, const std::set<RuleId>& enable,
                     const std::set<RuleId>& disable,
                     std::optional<Structural> structural = std::nullopt,
                     std::optional<LinearScope> scope = std::nullopt);

enum class FailureKind : unsigned char {
  None,
  RuleDisabled,
  Contraction,
  Scope,           // citation unknown, out of scope, or duplicate label
  Arity,           // justification shape does not fit the rule
  Schema,          // cited formulas do not instantiate the rule schema
  PremiseMismatch,
  UnknownDefinition,
  DefinitionKind,
  SubproofShape,   // discharge rule cited a block without a usable shape
  ConclusionMismatch,
  MisplacedAssume
};

struct LineVerdict {
  std::string label;
  bool ok = true;
  FailureKind failure = FailureKind::None;
  std::string reason;  // stable short code, e.g. "rule-disabled(cp)"
  std::string detail;  // human-readable sentence

  bool operator==(const LineVerdict& o) const {
    return label == o.label && ok == o.ok && failure == o.failure && reason == o.reason &&
           detail == o.detail;
  }
};

enum class UsageKind : unsigned char { Assumption, Line, Block };

struct UsageEntry {
  UsageKind kind = UsageKind::Line;
  std::string label;
  int count = 0;
  std::vector<std::string> citedBy;  // citing labels in document order

  bool contraction() const { return count >= 2; }
  bool operator==(const UsageEntry& o) const {
    return kind == o.kind && label == o.label && count == o.count && citedBy == o.citedBy;
  }
};

// Citation census over a proof. Entries appear in document order.
struct UsageReport {
  std::vector<UsageEntry> entries;

  const UsageEntry* find(const std::string& label) const;
  bool operator==(const UsageReport& o) const { return entries == o.entries; }
};

struct Sequent {
  std::vector<Formula> hypotheses;
  Formula conclusion;
};

struct CheckResult {
  bool valid = false;
  std::vector<LineVerdict> lines;  // document order, then one entry for qed
  std::optional<Sequent> established;
  UsageReport usage;
  std::optional<std::pair<std::string, std::string>> firstFailure;  // label, reason code
};

// Checks every line against the profile: rule enabled, citations in scope,
// cited formulas instantiate the rule schema (structural equality only),
// and, in linear mode, no metered line or block cited more than once.
// All problems surface as per-line verdicts; this never throws on bad
// proofs and never evaluates truth values.
CheckResult checkProof(const ProofScript& proof, const std::vector<Definition>& defs,
                       const Profile& profile);

// Profile-independent citation census; every entry with count >= 2 is a
// contraction point.
UsageReport auditResources(const ProofScript& proof,
                           LinearScope scope = LinearScope::AssumptionsOnly);

std::string_view structuralName(Structural s);
std::string_view linearScopeName(LinearScope s);

}  // namespace paralab
