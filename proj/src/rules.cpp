#include "paralab/rules.hpp"

namespace paralab {

const std::vector<RuleId>& allRules() {
  static const std::vector<RuleId> registry = {
      RuleId::Premise, RuleId::DefBi,    RuleId::Mp,       RuleId::IffMp,
      RuleId::Cp,      RuleId::ConjI,    RuleId::DisjI,    RuleId::Ds,
      RuleId::TElim,   RuleId::TIntro,   RuleId::Subst,    RuleId::ValIntro,
      RuleId::ValElim, RuleId::Bivalence, RuleId::Rc,      RuleId::Explode,
      RuleId::Reit};
  return registry;
}

std::string_view ruleName(RuleId rule) {
  switch (rule) {
    case RuleId::Premise: return "premise";
    case RuleId::DefBi: return "defbi";
    case RuleId::Mp: return "mp";
    case RuleId::IffMp: return "iffmp";
    case RuleId::Cp: return "cp";
    case RuleId::ConjI: return "conji";
    case RuleId::DisjI: return "disji";
    case RuleId::Ds: return "ds";
    case RuleId::TElim: return "telim";
    case RuleId::TIntro: return "tintro";
    case RuleId::Subst: return "subst";
    case RuleId::ValIntro: return "valintro";
    case RuleId::ValElim: return "valelim";
    case RuleId::Bivalence: return "bivalence";
    case RuleId::Rc: return "rc";
    case RuleId::Explode: return "explode";
    case RuleId::Reit: return "reit";
  }
  return "?";
}

std::optional<RuleId> ruleFromName(std::string_view name) {
  for (RuleId r : allRules())
    if (ruleName(r) == name) return r;
  return std::nullopt;
}

}  // namespace paralab
