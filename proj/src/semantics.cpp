#include "paralab/semantics.hpp"

#include <algorithm>
#include <set>

namespace paralab {

std::string_view logicName(Logic logic) { return logic == Logic::LP ? "lp" : "cl"; }

std::optional<Logic> logicFromName(std::string_view name) {
  if (name == "lp") return Logic::LP;
  if (name == "cl") return Logic::CL;
  return std::nullopt;
}

bool designated(TruthValue v, Logic logic) {
  return logic == Logic::LP ? v != TruthValue::False : v == TruthValue::True;
}

namespace {

TruthValue negate(TruthValue v) {
  switch (v) {
    case TruthValue::True: return TruthValue::False;
    case TruthValue::False: return TruthValue::True;
    default: return TruthValue::Both;
  }
}

TruthValue meet(TruthValue a, TruthValue b) { return std::min(a, b); }
TruthValue join(TruthValue a, TruthValue b) { return std::max(a, b); }

}  // namespace

TruthValue evalFormula(const Formula& f, const Valuation& v, Logic logic) {
  switch (f.kind()) {
    case FormulaKind::Atom:
    case FormulaKind::Name: {
      auto it = v.find(f.id());
      if (it == v.end())
        throw EvalError(EvalErrorKind::IncompleteValuation,
                        "no value for identifier '" + f.id() + "'");
      if (logic == Logic::CL && it->second == TruthValue::Both)
        throw EvalError(EvalErrorKind::ValueDomain,
                        "'" + f.id() + "' has value b, which is not a classical value");
      return it->second;
    }
    case FormulaKind::Falsum:
      return TruthValue::False;
    case FormulaKind::Not:
      return negate(evalFormula(f.left(), v, logic));
    case FormulaKind::And:
      return meet(evalFormula(f.left(), v, logic), evalFormula(f.right(), v, logic));
    case FormulaKind::Or:
      return join(evalFormula(f.left(), v, logic), evalFormula(f.right(), v, logic));
    case FormulaKind::Implies:
      return join(negate(evalFormula(f.left(), v, logic)), evalFormula(f.right(), v, logic));
    case FormulaKind::Iff: {
      TruthValue a = evalFormula(f.left(), v, logic);
      TruthValue b = evalFormula(f.right(), v, logic);
      return meet(join(negate(a), b), join(negate(b), a));
    }
    case FormulaKind::TrueOf:
      return evalFormula(f.left(), v, logic);
    case FormulaKind::FalseOf:
      return negate(evalFormula(f.left(), v, logic));
    case FormulaKind::ValidOf:
      throw EvalError(EvalErrorKind::UnsupportedPredicate,
                      "Val has no semantics; it is proof-theoretic only");
  }
  throw EvalError(EvalErrorKind::UnsupportedPredicate, "unreachable formula kind");
}

namespace {

const std::vector<TruthValue>& valuesOf(Logic logic) {
  static const std::vector<TruthValue> lp = {TruthValue::False, TruthValue::Both,
                                             TruthValue::True};
  static const std::vector<TruthValue> cl = {TruthValue::False, TruthValue::True};
  return logic == Logic::LP ? lp : cl;
}

// Calls body(valuation) for every assignment of the logic's values to ids,
// in lexicographic order; stops early when body returns false.
template <typename Body>
void enumerate(const std::vector<std::string>& ids, Logic logic, Body body) {
  const auto& values = valuesOf(logic);
  std::vector<std::size_t> odo(ids.size(), 0);
  for (;;) {
    Valuation v;
    for (std::size_t i = 0; i < ids.size(); ++i) v[ids[i]] = values[odo[i]];
    if (!body(v)) return;
    std::size_t i = ids.size();
    while (i > 0) {
      --i;
      if (++odo[i] < values.size()) break;
      odo[i] = 0;
      if (i == 0) return;
    }
    if (ids.empty()) return;
  }
}

}  // namespace

Verdict ruleValid(const RuleSchema& schema, Logic logic) {
  std::set<std::string> ids;
  for (const Formula& p : schema.premises)
    for (const std::string& id : atomsAndNames(p)) ids.insert(id);
  for (const std::string& id : atomsAndNames(schema.conclusion)) ids.insert(id);
  std::vector<std::string> sorted(ids.begin(), ids.end());

  Verdict verdict;
  verdict.valid = true;
  enumerate(sorted, logic, [&](const Valuation& v) {
    for (const Formula& p : schema.premises)
      if (!designated(evalFormula(p, v, logic), logic)) return true;
    if (designated(evalFormula(schema.conclusion, v, logic), logic)) return true;
    verdict.valid = false;
    verdict.countermodel = v;
    return false;
  });
  return verdict;
}

const std::vector<RuleSchema>& semanticSchemas() {
  static const std::vector<RuleSchema> registry = [] {
    Formula A = Formula::atom("A");
    Formula B = Formula::atom("B");
    std::vector<RuleSchema> r;
    r.push_back({"mp", {A, Formula::implication(A, B)}, B});
    r.push_back({"iffmp", {Formula::biconditional(A, B), A}, B});
    r.push_back({"conji", {A, B}, Formula::conjunction(A, B)});
    r.push_back({"disji", {A}, Formula::disjunction(A, B)});
    r.push_back({"ds", {Formula::disjunction(A, B), Formula::negation(A)}, B});
    r.push_back({"telim", {Formula::trueOf(A)}, A});
    r.push_back({"tintro", {A}, Formula::trueOf(A)});
    r.push_back({"rc", {Formula::implication(A, Formula::implication(A, B))},
                 Formula::implication(A, B)});
    r.push_back({"explode", {A, Formula::negation(A)}, B});
    r.push_back({"lem", {}, Formula::disjunction(A, Formula::negation(A))});
    return r;
  }();
  return registry;
}

const RuleSchema* findSchema(const std::string& name) {
  for (const RuleSchema& s : semanticSchemas())
    if (s.name == name) return &s;
  return nullptr;
}

std::string_view solveModeName(SolveMode mode) {
  return mode == SolveMode::Equational ? "equational" : "designated-iff";
}

std::optional<SolveMode> solveModeFromName(std::string_view name) {
  if (name == "equational") return SolveMode::Equational;
  if (name == "designated-iff") return SolveMode::DesignatedIff;
  return std::nullopt;
}

std::vector<Valuation> solveDefinitions(const std::vector<Definition>& defs, Logic logic,
                                        SolveMode mode, const Valuation& fixed) {
  std::set<std::string> defined;
  for (const Definition& d : defs)
    if (!defined.insert(d.name).second)
      throw Error("duplicate definition of '" + d.name + "'");

  for (const auto& [id, value] : fixed)
    if (logic == Logic::CL && value == TruthValue::Both)
      throw EvalError(EvalErrorKind::ValueDomain,
                      "'" + id + "' has value b, which is not a classical value");

  std::set<std::string> free;
  for (const Definition& d : defs)
    for (const std::string& id : atomsAndNames(d.body))
      if (!defined.count(id)) free.insert(id);
  for (const std::string& id : free)
    if (!fixed.count(id))
      throw EvalError(EvalErrorKind::IncompleteValuation,
                      "free identifier '" + id + "' needs a supplied value");

  std::vector<std::string> names(defined.begin(), defined.end());
  std::vector<Valuation> solutions;
  enumerate(names, logic, [&](const Valuation& candidate) {
    Valuation v = fixed;
    for (const auto& [id, value] : candidate) v[id] = value;
    for (const Definition& d : defs) {
      if (mode == SolveMode::Equational) {
        if (v.at(d.name) != evalFormula(d.body, v, logic)) return true;
      } else {
        Formula iff = Formula::biconditional(Formula::name(d.name), d.body);
        if (!designated(evalFormula(iff, v, logic), logic)) return true;
      }
    }
    solutions.push_back(candidate);
    return true;
  });
  return solutions;
}

}  // namespace paralab
