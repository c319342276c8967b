#pragma once

#include <optional>
#include <string_view>
#include <vector>

namespace paralab {

// Closed registry of inference rules known to the checker. The surface
// names (as written in proof scripts) are the lowercase forms below.
enum class RuleId : unsigned char {
  Premise,    // restate a declared hypothesis
  DefBi,      // introduce Name <-> body from a biconditional definition
  Mp,         // from A -> B and A, infer B
  IffMp,      // from A <-> B and one side, infer the other
  Cp,         // conditional proof: discharge a subproof A ... B as A -> B
  ConjI,      // from A and B, infer A & B
  DisjI,      // from A, infer A | B or B | A
  Ds,         // from A | B and ~A, infer B (and mirror)
  TElim,      // from T(A), infer A
  TIntro,     // from A, infer T(A)
  Subst,      // substitution of identity via a named identity definition
  ValIntro,   // discharge a subproof A ... B as Val(A, B)
  ValElim,    // from Val(A, B), infer A -> B
  Bivalence,  // from subproofs T(X) ... D and F(X) ... D, infer D
  Rc,         // from A -> (A -> B), infer A -> B
  Explode,    // from A and ~A, infer any B
  Reit        // restate an in-scope line
};

// Registry in surface order.
const std::vector<RuleId>& allRules();

std::string_view ruleName(RuleId rule);
std::optional<RuleId> ruleFromName(std::string_view name);

}  // namespace paralab
