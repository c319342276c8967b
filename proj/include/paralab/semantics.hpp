#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "paralab/formula.hpp"

namespace paralab {

// LP: values {t, b, f}, designated {t, b}. CL: values {t, f}, designated {t}.
enum class Logic : unsigned char { LP, CL };

std::string_view logicName(Logic logic);
std::optional<Logic> logicFromName(std::string_view name);

// Total assignment of truth values to atom/name identifiers; ordered so
// that enumeration and printing are deterministic.
using Valuation = std::map<std::string, TruthValue>;

enum class EvalErrorKind : unsigned char {
  UnsupportedPredicate,  // Val has no semantics here
  IncompleteValuation,
  ValueDomain            // b in a classical context
};

struct EvalError : Error {
  EvalError(EvalErrorKind k, const std::string& what) : Error(what), kind(k) {}
  EvalErrorKind kind;
};

// LP truth tables: ~ swaps t and f and fixes b; & is min and | is max under
// f < b < t; A -> B is ~A | B; <-> conjoins both conditionals; T and F are
// transparent (v(T(A)) = v(A), v(F(A)) = v(~A)). CL is the {t, f} fragment.
// Val anywhere is an error, as is a missing identifier or b under CL.
TruthValue evalFormula(const Formula& f, const Valuation& v, Logic logic);

bool designated(TruthValue v, Logic logic);

// An inference-rule schema over metavariable identifiers (conventionally
// A and B), checked by brute force over all valuations.
struct RuleSchema {
  std::string name;
  std::vector<Formula> premises;
  Formula conclusion;
};

struct Verdict {
  bool valid = false;
  std::optional<Valuation> countermodel;  // premises designated, conclusion not
};

// Exhaustive enumeration over the |values|^n assignments to the schema's
// metavariables, in lexicographic order (identifiers sorted, values f < b
// < t); returns the first countermodel found.
Verdict ruleValid(const RuleSchema& schema, Logic logic);

// Semantic schemas for the propositional rules, plus `lem` (A | ~A).
const std::vector<RuleSchema>& semanticSchemas();
const RuleSchema* findSchema(const std::string& name);

enum class SolveMode : unsigned char { Equational, DesignatedIff };

std::string_view solveModeName(SolveMode mode);
std::optional<SolveMode> solveModeFromName(std::string_view name);

// Every assignment of the logic's values to the defined names under which
// each definition holds: value identity of name and body (equational), or
// a designated biconditional (designated-iff). Free identifiers in bodies
// must be covered by `fixed`. Results are in lexicographic order.
std::vector<Valuation> solveDefinitions(const std::vector<Definition>& defs, Logic logic,
                                        SolveMode mode, const Valuation& fixed = {});

}  // namespace paralab
