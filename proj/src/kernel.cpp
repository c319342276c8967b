#include "paralab/kernel.hpp"

#include <algorithm>

namespace paralab {

std::string_view structuralName(Structural s) {
  return s == Structural::Free ? "free" : "linear";
}

std::string_view linearScopeName(LinearScope s) {
  return s == LinearScope::AssumptionsOnly ? "assumptions" : "all";
}

// ---------------------------------------------------------------------------
// Profiles

namespace {

std::set<RuleId> everyRule() {
  const auto& all = allRules();
  return {all.begin(), all.end()};
}

std::set<RuleId> everyRuleExcept(std::initializer_list<RuleId> off) {
  std::set<RuleId> rules = everyRule();
  for (RuleId r : off) rules.erase(r);
  return rules;
}

}  // namespace

const std::vector<std::string>& builtinProfileNames() {
  static const std::vector<std::string> names = {
      "classical", "dialetheic", "substructural", "dialetheic-substructural", "no-dt"};
  return names;
}

Profile builtinProfile(const std::string& name) {
  if (name == "classical")
    return {name, everyRule(), Structural::Free, LinearScope::AssumptionsOnly};
  if (name == "dialetheic")
    return {name, everyRuleExcept({RuleId::Ds, RuleId::Explode}), Structural::Free,
            LinearScope::AssumptionsOnly};
  if (name == "substructural")
    return {name, everyRuleExcept({RuleId::Rc}), Structural::Linear,
            LinearScope::AssumptionsOnly};
  if (name == "dialetheic-substructural")
    return {name, everyRuleExcept({RuleId::Ds, RuleId::Explode, RuleId::Rc}), Structural::Linear,
            LinearScope::AssumptionsOnly};
  if (name == "no-dt")
    return {name, everyRuleExcept({RuleId::Cp}), Structural::Free, LinearScope::AssumptionsOnly};
  throw ProfileError("unknown profile '" + name + "'");
}

Profile buildProfile(const std::string& baseName, const std::set<RuleId>& enable,
                     const std::set<RuleId>& disable, std::optional<Structural> structural,
                     std::optional<LinearScope> scope) {
  Profile p = builtinProfile(baseName.empty() ? "classical" : baseName);
  for (RuleId r : enable)
    if (disable.count(r))
      throw ProfileError("rule '" + std::string(ruleName(r)) + "' both enabled and disabled");
  if (disable.count(RuleId::Premise) || disable.count(RuleId::Reit))
    throw ProfileError("premise and reit cannot be disabled");
  for (RuleId r : enable) p.enabled.insert(r);
  for (RuleId r : disable) p.enabled.erase(r);
  if (structural) p.structural = *structural;
  if (scope) p.linearScope = *scope;
  if (!enable.empty() || !disable.empty() || structural || scope) p.name = "custom:" + p.name;
  return p;
}

// ---------------------------------------------------------------------------
// Citation census

const UsageEntry* UsageReport::find(const std::string& label) const {
  for (const auto& e : entries)
    if (e.label == label) return &e;
  return nullptr;
}

namespace {

struct Census {
  std::vector<UsageEntry> entries;  // every step in document order
  std::map<std::string, std::size_t> index;

  UsageEntry* lookup(const std::string& label) {
    auto it = index.find(label);
    return it == index.end() ? nullptr : &entries[it->second];
  }
};

void censusDeclare(const std::vector<Step>& steps, Census& census) {
  for (const Step& s : steps) {
    UsageEntry entry;
    entry.label = s.key();
    entry.kind = s.isAssume() ? UsageKind::Assumption
               : s.isDerived() ? UsageKind::Line
                               : UsageKind::Block;
    if (!census.index.count(entry.label)) {
      census.index[entry.label] = census.entries.size();
      census.entries.push_back(entry);
    }
    if (s.isSubproof()) censusDeclare(s.subproof().steps, census);
  }
}

void censusCount(const std::vector<Step>& steps, Census& census) {
  for (const Step& s : steps) {
    if (s.isDerived()) {
      for (const std::string& cited : s.derived().just.cited) {
        if (UsageEntry* target = census.lookup(cited)) {
          target->count++;
          target->citedBy.push_back(s.derived().label);
        }
      }
    } else if (s.isSubproof()) {
      censusCount(s.subproof().steps, census);
    }
  }
}

Census takeCensus(const ProofScript& proof) {
  Census census;
  censusDeclare(proof.steps, census);
  censusCount(proof.steps, census);
  return census;
}

}  // namespace

UsageReport auditResources(const ProofScript& proof, LinearScope scope) {
  Census census = takeCensus(proof);
  UsageReport report;
  for (UsageEntry& e : census.entries) {
    bool keep = scope == LinearScope::AllLines || e.kind != UsageKind::Line;
    if (keep) report.entries.push_back(std::move(e));
  }
  return report;
}

// ---------------------------------------------------------------------------
// Proof checking

namespace {

struct BlockInfo {
  std::optional<Formula> assumption;
  std::optional<Formula> conclusion;
};

// `to` is `from` with some (possibly zero) occurrences rewritten along the
// definition: name replaced by body (unfold) or body replaced by name
// (fold). This validates any chosen occurrence set, single or all.
bool substRelated(const Formula& from, const Formula& to, const Definition& def,
                  SubstDirection dir) {
  if (dir == SubstDirection::Unfold) {
    if (from.kind() == FormulaKind::Name && from.id() == def.name && to == def.body) return true;
  } else {
    if (from == def.body && to.kind() == FormulaKind::Name && to.id() == def.name) return true;
  }
  if (from.kind() != to.kind()) return false;
  switch (from.arity()) {
    case 0: return from.id() == to.id();
    case 1: return substRelated(from.left(), to.left(), def, dir);
    default:
      return substRelated(from.left(), to.left(), def, dir) &&
             substRelated(from.right(), to.right(), def, dir);
  }
}

class Checker {
public:
  Checker(const ProofScript& proof, const std::vector<Definition>& defs, const Profile& profile)
      : proof_(proof), defs_(defs), profile_(profile) {}

  CheckResult run() {
    walk(proof_.steps, false);
    checkConclusion();
    if (profile_.structural == Structural::Linear) meterContraction();
    CheckResult result;
    result.lines = std::move(lines_);
    result.valid = std::all_of(result.lines.begin(), result.lines.end(),
                               [](const LineVerdict& v) { return v.ok; });
    for (const LineVerdict& v : result.lines)
      if (!v.ok) {
        result.firstFailure = {v.label, v.reason};
        break;
      }
    if (result.valid) result.established = Sequent{proof_.hypotheses, proof_.conclusion};
    result.usage = auditResources(proof_, profile_.linearScope);
    return result;
  }

private:
  using EnvEntry = std::variant<Formula, BlockInfo>;

  static void fail(LineVerdict& v, FailureKind kind, std::string reason, std::string detail) {
    if (!v.ok) return;  // keep the first problem found for this line
    v.ok = false;
    v.failure = kind;
    v.reason = std::move(reason);
    v.detail = std::move(detail);
  }

  bool define(const std::string& label, EnvEntry entry, std::vector<std::string>& frameKeys,
              LineVerdict& v) {
    if (env_.count(label)) {
      fail(v, FailureKind::Scope, "duplicate-label", "label '" + label + "' is already in scope");
      return false;
    }
    env_.emplace(label, std::move(entry));
    frameKeys.push_back(label);
    return true;
  }

  void walk(const std::vector<Step>& steps, bool inBlock) {
    std::vector<std::string> frameKeys;
    for (std::size_t i = 0; i < steps.size(); ++i) {
      const Step& s = steps[i];
      if (s.isAssume()) {
        const AssumeStep& a = s.assume();
        LineVerdict v;
        v.label = a.label;
        if (!inBlock)
          fail(v, FailureKind::MisplacedAssume, "misplaced-assume",
               "assumptions are only allowed inside subproofs");
        else if (i != 0)
          fail(v, FailureKind::MisplacedAssume, "misplaced-assume",
               "an assumption must open its subproof");
        define(a.label, a.formula, frameKeys, v);
        lines_.push_back(std::move(v));
      } else if (s.isDerived()) {
        const DerivedStep& d = s.derived();
        LineVerdict v;
        v.label = d.label;
        checkDerived(d, v);
        define(d.label, d.formula, frameKeys, v);
        lines_.push_back(std::move(v));
      } else {
        const SubproofStep& b = s.subproof();
        LineVerdict v;
        v.label = b.id;
        std::size_t verdictIndex = lines_.size();
        lines_.push_back(v);
        walk(b.steps, true);  // the nested frame erases its own keys on exit
        define(b.id, summarize(b), frameKeys, lines_[verdictIndex]);
      }
    }
    for (const std::string& k : frameKeys) env_.erase(k);
  }

  BlockInfo summarize(const SubproofStep& b) {
    BlockInfo info;
    if (!b.steps.empty()) {
      const Step& first = b.steps.front();
      if (first.isAssume()) info.assumption = first.assume().formula;
      const Step& last = b.steps.back();
      if (last.isAssume()) info.conclusion = last.assume().formula;
      else if (last.isDerived()) info.conclusion = last.derived().formula;
    }
    return info;
  }

  struct Resolved {
    std::vector<const Formula*> linesCited;
    std::vector<const BlockInfo*> blocksCited;
    std::vector<std::string> labels;
  };

  bool resolveCitations(const DerivedStep& d, LineVerdict& v, Resolved& out) {
    for (const std::string& label : d.just.cited) {
      auto it = env_.find(label);
      if (it == env_.end()) {
        fail(v, FailureKind::Scope, "scope", "citation '" + label + "' is not in scope");
        return false;
      }
      out.labels.push_back(label);
      if (const Formula* f = std::get_if<Formula>(&it->second)) {
        out.linesCited.push_back(f);
        out.blocksCited.push_back(nullptr);
      } else {
        out.linesCited.push_back(nullptr);
        out.blocksCited.push_back(&std::get<BlockInfo>(it->second));
      }
    }
    return true;
  }

  static std::size_t expectedCitations(RuleId rule) {
    switch (rule) {
      case RuleId::Premise: return 0;
      case RuleId::DefBi: return 0;
      case RuleId::Mp:
      case RuleId::IffMp:
      case RuleId::ConjI:
      case RuleId::Ds:
      case RuleId::Explode:
      case RuleId::Bivalence: return 2;
      default: return 1;
    }
  }

  void checkDerived(const DerivedStep& d, LineVerdict& v) {
    const Justification& j = d.just;
    if (!profile_.ruleEnabled(j.rule)) {
      fail(v, FailureKind::RuleDisabled, "rule-disabled(" + std::string(ruleName(j.rule)) + ")",
           "rule '" + std::string(ruleName(j.rule)) + "' is disabled in profile '" +
               profile_.name + "'");
      return;
    }
    bool needsDef = j.rule == RuleId::DefBi || j.rule == RuleId::Subst;
    if (j.cited.size() != expectedCitations(j.rule) || (needsDef && !j.defName) ||
        (j.rule == RuleId::Subst && !j.direction) ||
        (j.rule == RuleId::Bivalence && !j.caseName)) {
      fail(v, FailureKind::Arity, "arity",
           "justification does not fit the shape of rule '" + std::string(ruleName(j.rule)) + "'");
      return;
    }
    Resolved r;
    if (!resolveCitations(d, v, r)) return;

    auto schemaFail = [&](const std::string& detail) {
      fail(v, FailureKind::Schema, "schema-mismatch", detail);
    };
    auto needLine = [&](std::size_t i) -> const Formula* {
      if (!r.linesCited[i])
        schemaFail("citation '" + r.labels[i] + "' is a subproof, but rule '" +
                   std::string(ruleName(j.rule)) + "' cites lines");
      return r.linesCited[i];
    };
    auto needBlock = [&](std::size_t i) -> const BlockInfo* {
      const BlockInfo* b = r.blocksCited[i];
      if (!b) {
        schemaFail("rule '" + std::string(ruleName(j.rule)) + "' must cite a subproof, but '" +
                   r.labels[i] + "' is a line");
        return nullptr;
      }
      if (!b->assumption || !b->conclusion) {
        fail(v, FailureKind::SubproofShape, "subproof-shape",
             "subproof '" + r.labels[i] + "' does not open with an assumption and end on a line");
        return nullptr;
      }
      return b;
    };

    const Formula& goal = d.formula;
    switch (j.rule) {
      case RuleId::Premise: {
        for (const Formula& h : proof_.hypotheses)
          if (h == goal) return;
        fail(v, FailureKind::PremiseMismatch, "premise-mismatch",
             "'" + printFormula(goal) + "' is not a declared hypothesis");
        return;
      }
      case RuleId::DefBi: {
        const Definition* def = findDef(*j.defName, v);
        if (!def) return;
        if (def->kind != DefKind::Biconditional) {
          fail(v, FailureKind::DefinitionKind, "definition-kind",
               "definition '" + def->name + "' is an identity; defbi needs a biconditional");
          return;
        }
        if (goal != Formula::biconditional(Formula::name(def->name), def->body))
          schemaFail("line must be '" + def->name + " <-> " + printFormula(def->body) + "'");
        return;
      }
      case RuleId::Subst: {
        const Definition* def = findDef(*j.defName, v);
        if (!def) return;
        if (def->kind != DefKind::Identity) {
          fail(v, FailureKind::DefinitionKind, "definition-kind",
               "definition '" + def->name + "' is biconditional; subst needs an identity");
          return;
        }
        const Formula* from = needLine(0);
        if (!from) return;
        if (!substRelated(*from, goal, *def, *j.direction))
          schemaFail("line is not obtainable from '" + r.labels[0] + "' by " +
                     (*j.direction == SubstDirection::Fold ? "folding" : "unfolding") + " '" +
                     def->name + "'");
        return;
      }
      case RuleId::Mp: {
        const Formula* a = needLine(0);
        if (!a) return;
        const Formula* b = needLine(1);
        if (!b) return;
        auto fits = [&](const Formula& imp, const Formula& ant) {
          return imp.kind() == FormulaKind::Implies && imp.left() == ant && goal == imp.right();
        };
        if (!fits(*a, *b) && !fits(*b, *a))
          schemaFail("cited lines do not give this formula by modus ponens");
        return;
      }
      case RuleId::IffMp: {
        const Formula* a = needLine(0);
        if (!a) return;
        const Formula* b = needLine(1);
        if (!b) return;
        auto fits = [&](const Formula& iff, const Formula& side) {
          return iff.kind() == FormulaKind::Iff &&
                 ((side == iff.left() && goal == iff.right()) ||
                  (side == iff.right() && goal == iff.left()));
        };
        if (!fits(*a, *b) && !fits(*b, *a))
          schemaFail("cited lines do not give this formula across a biconditional");
        return;
      }
      case RuleId::ConjI: {
        const Formula* a = needLine(0);
        if (!a) return;
        const Formula* b = needLine(1);
        if (!b) return;
        if (goal != Formula::conjunction(*a, *b) && goal != Formula::conjunction(*b, *a))
          schemaFail("line must be the conjunction of the cited lines");
        return;
      }
      case RuleId::DisjI: {
        const Formula* a = needLine(0);
        if (!a) return;
        if (!(goal.kind() == FormulaKind::Or && (goal.left() == *a || goal.right() == *a)))
          schemaFail("line must be a disjunction with the cited line on one side");
        return;
      }
      case RuleId::Ds: {
        const Formula* a = needLine(0);
        if (!a) return;
        const Formula* b = needLine(1);
        if (!b) return;
        auto fits = [&](const Formula& disj, const Formula& neg) {
          if (disj.kind() != FormulaKind::Or || neg.kind() != FormulaKind::Not) return false;
          if (neg.left() == disj.left() && goal == disj.right()) return true;
          return neg.left() == disj.right() && goal == disj.left();
        };
        if (!fits(*a, *b) && !fits(*b, *a))
          schemaFail("cited lines do not give this formula by disjunctive syllogism");
        return;
      }
      case RuleId::TElim: {
        const Formula* a = needLine(0);
        if (!a) return;
        if (!(a->kind() == FormulaKind::TrueOf && goal == a->left()))
          schemaFail("telim needs a cited line T(A) and this line A");
        return;
      }
      case RuleId::TIntro: {
        const Formula* a = needLine(0);
        if (!a) return;
        if (goal != Formula::trueOf(*a))
          schemaFail("tintro needs this line to be T of the cited line");
        return;
      }
      case RuleId::ValElim: {
        const Formula* a = needLine(0);
        if (!a) return;
        if (!(a->kind() == FormulaKind::ValidOf &&
              goal == Formula::implication(a->left(), a->right())))
          schemaFail("valelim needs a cited line Val(A, B) and this line A -> B");
        return;
      }
      case RuleId::Rc: {
        const Formula* a = needLine(0);
        if (!a) return;
        bool fits = a->kind() == FormulaKind::Implies &&
                    a->right().kind() == FormulaKind::Implies &&
                    a->left() == a->right().left() &&
                    goal == Formula::implication(a->left(), a->right().right());
        if (!fits) schemaFail("rc needs a cited line A -> (A -> B) and this line A -> B");
        return;
      }
      case RuleId::Explode: {
        const Formula* a = needLine(0);
        if (!a) return;
        const Formula* b = needLine(1);
        if (!b) return;
        bool contradictory = (a->kind() == FormulaKind::Not && a->left() == *b) ||
                             (b->kind() == FormulaKind::Not && b->left() == *a);
        if (!contradictory) schemaFail("explode needs cited lines A and ~A");
        return;
      }
      case RuleId::Reit: {
        const Formula* a = needLine(0);
        if (!a) return;
        if (goal != *a) schemaFail("reit must restate the cited line exactly");
        return;
      }
      case RuleId::Cp: {
        const BlockInfo* b = needBlock(0);
        if (!b) return;
        if (goal != Formula::implication(*b->assumption, *b->conclusion))
          schemaFail("cp on '" + r.labels[0] + "' gives '" +
                     printFormula(Formula::implication(*b->assumption, *b->conclusion)) + "'");
        return;
      }
      case RuleId::ValIntro: {
        const BlockInfo* b = needBlock(0);
        if (!b) return;
        if (goal != Formula::validOf(*b->assumption, *b->conclusion))
          schemaFail("valintro on '" + r.labels[0] + "' gives '" +
                     printFormula(Formula::validOf(*b->assumption, *b->conclusion)) + "'");
        return;
      }
      case RuleId::Bivalence: {
        const BlockInfo* tCase = needBlock(0);
        if (!tCase) return;
        const BlockInfo* fCase = needBlock(1);
        if (!fCase) return;
        Formula named = Formula::name(*j.caseName);
        if (*tCase->assumption != Formula::trueOf(named)) {
          schemaFail("first cited subproof must assume T(" + *j.caseName + ")");
          return;
        }
        if (*fCase->assumption != Formula::falseOf(named)) {
          schemaFail("second cited subproof must assume F(" + *j.caseName + ")");
          return;
        }
        if (*tCase->conclusion != goal || *fCase->conclusion != goal)
          schemaFail("both subproofs must conclude this line's formula");
        return;
      }
    }
  }

  const Definition* findDef(const std::string& name, LineVerdict& v) {
    for (const Definition& d : defs_)
      if (d.name == name) return &d;
    fail(v, FailureKind::UnknownDefinition, "unknown-definition",
         "no definition named '" + name + "'");
    return nullptr;
  }

  void checkConclusion() {
    LineVerdict v;
    v.label = "qed";
    const Formula* lastLine = nullptr;
    if (!proof_.steps.empty()) {
      const Step& last = proof_.steps.back();
      if (last.isDerived()) lastLine = &last.derived().formula;
      else if (last.isAssume()) lastLine = &last.assume().formula;
    }
    if (!lastLine)
      fail(v, FailureKind::ConclusionMismatch, "conclusion-mismatch",
           proof_.steps.empty() ? "proof has no steps"
                                : "last top-level step is a subproof, not a line");
    else if (*lastLine != proof_.conclusion)
      fail(v, FailureKind::ConclusionMismatch, "conclusion-mismatch",
           "qed formula '" + printFormula(proof_.conclusion) + "' differs from the last line '" +
               printFormula(*lastLine) + "'");
    lines_.push_back(std::move(v));
  }

  void meterContraction() {
    Census census = takeCensus(proof_);
    for (const UsageEntry& e : census.entries) {
      bool metered = e.kind == UsageKind::Block || e.kind == UsageKind::Assumption ||
                     profile_.linearScope == LinearScope::AllLines;
      if (!metered || e.count < 2) continue;
      for (LineVerdict& v : lines_) {
        if (v.label != e.label || !v.ok) continue;
        std::string word = e.kind == UsageKind::Assumption ? "assumption"
                         : e.kind == UsageKind::Block ? "subproof"
                                                      : "line";
        std::string citations;
        for (std::size_t i = 0; i < e.citedBy.size(); ++i)
          citations += (i ? ", " : "") + e.citedBy[i];
        fail(v, FailureKind::Contraction, "contraction",
             word + " " + e.label + " cited " + std::to_string(e.count) + " times (" + citations +
                 ")");
        break;
      }
    }
  }

  const ProofScript& proof_;
  const std::vector<Definition>& defs_;
  const Profile& profile_;
  std::vector<LineVerdict> lines_;
  std::map<std::string, EnvEntry> env_;
};

}  // namespace

CheckResult checkProof(const ProofScript& proof, const std::vector<Definition>& defs,
                       const Profile& profile) {
  return Checker(proof, defs, profile).run();
}

}  // namespace paralab
