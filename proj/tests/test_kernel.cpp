#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "paralab/corpus.hpp"
#include "paralab/kernel.hpp"
#include "testutil.hpp"

using namespace paralab;

namespace {

struct Checked {
  Document doc;
  CheckResult result;
};

Checked check(const std::string& corpusName, const std::string& profileName) {
  const CorpusEntry* entry = findCorpusEntry(corpusName);
  REQUIRE(entry != nullptr);
  Document doc = corpusDocument(*entry);
  const ProofScript* proof = doc.findProof(corpusName);
  REQUIRE(proof != nullptr);
  CheckResult result = checkProof(*proof, doc.definitions, builtinProfile(profileName));
  return {std::move(doc), std::move(result)};
}

CheckResult checkText(const std::string& text, const Profile& profile) {
  ParseResult parsed = parseScript(text);
  REQUIRE(parsed.ok());
  REQUIRE(parsed.document.proofs.size() == 1);
  return checkProof(parsed.document.proofs[0], parsed.document.definitions, profile);
}

}  // namespace

TEST_CASE("built-in profiles match their definitions") {
  CHECK(builtinProfile("classical").enabled.size() == allRules().size());
  Profile dial = builtinProfile("dialetheic");
  CHECK_FALSE(dial.ruleEnabled(RuleId::Ds));
  CHECK_FALSE(dial.ruleEnabled(RuleId::Explode));
  CHECK(dial.ruleEnabled(RuleId::Bivalence));
  CHECK(dial.structural == Structural::Free);
  Profile sub = builtinProfile("substructural");
  CHECK_FALSE(sub.ruleEnabled(RuleId::Rc));
  CHECK(sub.ruleEnabled(RuleId::Ds));
  CHECK(sub.structural == Structural::Linear);
  CHECK(sub.linearScope == LinearScope::AssumptionsOnly);
  Profile ds = builtinProfile("dialetheic-substructural");
  CHECK(ds.enabled.size() == allRules().size() - 3);
  CHECK(ds.structural == Structural::Linear);
  Profile nodt = builtinProfile("no-dt");
  CHECK_FALSE(nodt.ruleEnabled(RuleId::Cp));
  CHECK(nodt.ruleEnabled(RuleId::ValIntro));
  CHECK_THROWS_AS(builtinProfile("nope"), ProfileError);
}

TEST_CASE("buildProfile applies toggles over the base") {
  Profile p = buildProfile("classical", {}, {RuleId::Ds, RuleId::Explode});
  CHECK(p.enabled == builtinProfile("dialetheic").enabled);
  Profile nodt = buildProfile("", {}, {RuleId::Cp});
  CHECK(nodt.enabled == builtinProfile("no-dt").enabled);
  Profile reenabled = buildProfile("dialetheic", {RuleId::Ds}, {});
  CHECK(reenabled.ruleEnabled(RuleId::Ds));
  CHECK_THROWS_AS(buildProfile("classical", {}, {RuleId::Premise}), ProfileError);
  CHECK_THROWS_AS(buildProfile("classical", {RuleId::Mp}, {RuleId::Mp}), ProfileError);
  Profile linear = buildProfile("classical", {}, {}, Structural::Linear, LinearScope::AllLines);
  CHECK(linear.structural == Structural::Linear);
  CHECK(linear.linearScope == LinearScope::AllLines);
}

TEST_CASE("curry is classically valid and establishes bot") {
  Checked c = check("curry", "classical");
  CHECK(c.result.valid);
  REQUIRE(c.result.established.has_value());
  CHECK(c.result.established->hypotheses.empty());
  CHECK(c.result.established->conclusion == Formula::falsum());
}

TEST_CASE("curry fails substructurally by contraction on its assumption") {
  Checked c = check("curry", "substructural");
  CHECK_FALSE(c.result.valid);
  REQUIRE(c.result.firstFailure.has_value());
  CHECK(c.result.firstFailure->first == "2.1");
  CHECK(c.result.firstFailure->second == "contraction");
  const UsageEntry* usage = c.result.usage.find("2.1");
  REQUIRE(usage != nullptr);
  CHECK(usage->count == 2);
  CHECK(usage->citedBy == std::vector<std::string>{"2.2", "2.3"});
  bool foundDetail = false;
  for (const LineVerdict& v : c.result.lines)
    if (!v.ok) foundDetail = v.detail == "assumption 2.1 cited 2 times (2.2, 2.3)";
  CHECK(foundDetail);
}

TEST_CASE("curry fails under no-dt exactly at the conditional-proof line") {
  Checked c = check("curry", "no-dt");
  CHECK_FALSE(c.result.valid);
  REQUIRE(c.result.firstFailure.has_value());
  CHECK(c.result.firstFailure->first == "3");
  CHECK(c.result.firstFailure->second == "rule-disabled(cp)");
}

TEST_CASE("explosion fails dialetheically at the disjunctive-syllogism line") {
  Checked c = check("explosion", "dialetheic");
  CHECK_FALSE(c.result.valid);
  REQUIRE(c.result.firstFailure.has_value());
  CHECK(c.result.firstFailure->first == "4");
  CHECK(c.result.firstFailure->second == "rule-disabled(ds)");
  // The same script is fine classically, with its hypotheses as a sequent.
  Checked cl = check("explosion", "classical");
  CHECK(cl.result.valid);
  REQUIRE(cl.result.established.has_value());
  CHECK(cl.result.established->hypotheses.size() == 2);
}

TEST_CASE("vcurry stays valid when cp is rejected") {
  Checked c = check("vcurry", "no-dt");
  CHECK(c.result.valid);
  REQUIRE(c.result.established.has_value());
  CHECK(c.result.established->conclusion == Formula::falsum());
}

TEST_CASE("the liar is dialetheically valid and concludes T(L) & F(L)") {
  Checked c = check("liar", "dialetheic");
  CHECK(c.result.valid);
  Formula l = Formula::name("L");
  CHECK(c.result.established->conclusion ==
        Formula::conjunction(Formula::trueOf(l), Formula::falseOf(l)));
}

TEST_CASE("audit counts match the corpus derivations") {
  auto audit = [](const std::string& name) {
    const CorpusEntry* entry = findCorpusEntry(name);
    REQUIRE(entry != nullptr);
    Document doc = corpusDocument(*entry);
    return auditResources(*doc.findProof(name));
  };
  UsageReport liar = audit("liar");
  REQUIRE(liar.find("1.1") != nullptr);
  CHECK(liar.find("1.1")->count == 2);
  CHECK(liar.find("1.1")->citedBy == std::vector<std::string>{"1.2", "1.4"});
  CHECK(liar.find("2.1")->count == 2);
  CHECK(liar.find("2.1")->citedBy == std::vector<std::string>{"2.2", "2.4"});

  UsageReport curry = audit("curry");
  CHECK(curry.find("2.1")->count == 2);
  CHECK(curry.find("2.1")->citedBy == std::vector<std::string>{"2.2", "2.3"});

  UsageReport vcurry = audit("vcurry");
  CHECK(vcurry.find("2.1")->count == 2);
  CHECK(vcurry.find("2.1")->citedBy == std::vector<std::string>{"2.2", "2.4"});

  UsageReport liarUp = audit("liar-up");
  for (const UsageEntry& e : liarUp.entries)
    if (e.kind == UsageKind::Assumption) CHECK(e.count <= 1);
}

TEST_CASE("reit and explode work in a synthetic script") {
  std::string text =
      "proof synthetic from a, ~a\n"
      "  1: a [premise]\n"
      "  2: a [reit 1]\n"
      "  3: ~a [premise]\n"
      "  4: b [explode 2, 3]\n"
      "qed b\n";
  CheckResult classical = checkText(text, builtinProfile("classical"));
  CHECK(classical.valid);
  CheckResult dial = checkText(text, builtinProfile("dialetheic"));
  CHECK_FALSE(dial.valid);
  CHECK(dial.firstFailure->second == "rule-disabled(explode)");
}

TEST_CASE("schema mismatches are caught") {
  Profile classical = builtinProfile("classical");
  // mp with a non-matching antecedent
  CheckResult r1 = checkText(
      "proof p from a -> b, c\n  1: a -> b [premise]\n  2: c [premise]\n  3: b [mp 1, 2]\nqed b\n",
      classical);
  CHECK_FALSE(r1.valid);
  CHECK(r1.firstFailure->first == "3");
  CHECK(r1.firstFailure->second == "schema-mismatch");
  // ds mirror form works
  CheckResult r2 = checkText(
      "proof p from a | b, ~b\n  1: a | b [premise]\n  2: ~b [premise]\n  3: a [ds 1, 2]\nqed a\n",
      classical);
  CHECK(r2.valid);
  // iffmp right-to-left works
  CheckResult r3 = checkText(
      "proof p from a <-> b, b\n  1: a <-> b [premise]\n  2: b [premise]\n  3: a [iffmp 1, 2]\n"
      "qed a\n",
      classical);
  CHECK(r3.valid);
  // disji can inject on either side
  CheckResult r4 = checkText(
      "proof p from a\n  1: a [premise]\n  2: b | a [disji 1]\nqed b | a\n", classical);
  CHECK(r4.valid);
  // cp must cite a subproof, not a line
  CheckResult r5 = checkText(
      "proof p from a\n  1: a [premise]\n  2: a -> a [cp 1]\nqed a -> a\n", classical);
  CHECK_FALSE(r5.valid);
  CHECK(r5.firstFailure->second == "schema-mismatch");
  // bivalence needs matching case assumptions
  CheckResult r6 = checkText(
      "def L := F(L)\n"
      "proof p\n"
      "  sub s1\n    1.1: assume T(L)\n  end\n"
      "  sub s2\n    2.1: assume T(L)\n  end\n"
      "  3: T(L) [bivalence L, s1, s2]\nqed T(L)\n",
      classical);
  CHECK_FALSE(r6.valid);
  CHECK(r6.firstFailure->first == "3");
  // rc needs the nested antecedents to agree
  CheckResult r7 = checkText(
      "proof p from a -> (b -> c)\n  1: a -> (b -> c) [premise]\n  2: a -> c [rc 1]\nqed a -> c\n",
      classical);
  CHECK_FALSE(r7.valid);
}

TEST_CASE("premise must restate a declared hypothesis") {
  CheckResult r = checkText("proof p from a\n  1: b [premise]\nqed b\n",
                            builtinProfile("classical"));
  CHECK_FALSE(r.valid);
  CHECK(r.firstFailure->second == "premise-mismatch");
}

TEST_CASE("subst in proofs validates fold and unfold instances") {
  Profile classical = builtinProfile("classical");
  CheckResult good = checkText(
      "def L := F(L)\n"
      "proof p from T(L)\n  1: T(L) [premise]\n  2: T(F(L)) [subst L, unfold, 1]\n"
      "qed T(F(L))\n",
      classical);
  CHECK(good.valid);
  CheckResult bad = checkText(
      "def L := F(L)\n"
      "proof p from T(L)\n  1: T(L) [premise]\n  2: T(T(L)) [subst L, unfold, 1]\n"
      "qed T(T(L))\n",
      classical);
  CHECK_FALSE(bad.valid);
  // Unknown definition and wrong definition kind
  CheckResult unknown = checkText(
      "proof p from a\n  1: a [premise]\n  2: a [subst X, unfold, 1]\nqed a\n", classical);
  CHECK(unknown.firstFailure->second == "unknown-definition");
  CheckResult wrongKind = checkText(
      "def C <=> C -> bot\n"
      "proof p from C\n  1: C [premise]\n  2: C [subst C, unfold, 1]\nqed C\n",
      classical);
  CHECK(wrongKind.firstFailure->second == "definition-kind");
  CheckResult defbiOnIdentity = checkText(
      "def L := F(L)\n"
      "proof p\n  1: L <-> F(L) [defbi L]\nqed L <-> F(L)\n",
      classical);
  CHECK(defbiOnIdentity.firstFailure->second == "definition-kind");
}

TEST_CASE("qed must match the last top-level line") {
  CheckResult r = checkText("proof p from a, b\n  1: a [premise]\n  2: b [premise]\nqed a\n",
                            builtinProfile("classical"));
  CHECK_FALSE(r.valid);
  CHECK(r.firstFailure->first == "qed");
  CHECK(r.firstFailure->second == "conclusion-mismatch");
}

TEST_CASE("all-lines scope meters every line") {
  Profile strict = buildProfile("classical", {}, {}, Structural::Linear, LinearScope::AllLines);
  const CorpusEntry* entry = findCorpusEntry("curry");
  Document doc = corpusDocument(*entry);
  CheckResult r = checkProof(*doc.findProof("curry"), doc.definitions, strict);
  CHECK_FALSE(r.valid);
  // Line 1 (the biconditional given) is cited by 2.2 and 4.
  REQUIRE(r.firstFailure.has_value());
  CHECK(r.firstFailure->first == "1");
  CHECK(r.firstFailure->second == "contraction");
  const UsageEntry* line1 = r.usage.find("1");
  REQUIRE(line1 != nullptr);
  CHECK(line1->count == 2);
}

TEST_CASE("free mode never fails on contraction") {
  Checked c = check("curry", "classical");
  const UsageEntry* assumption = c.result.usage.find("2.1");
  REQUIRE(assumption != nullptr);
  CHECK(assumption->count == 2);  // the reuse is visible
  CHECK(c.result.valid);          // but harmless under free discipline
}

TEST_CASE("profile monotonicity over the corpus") {
  auto atMostAsPermissive = [](const Profile& p, const Profile& q) {
    for (RuleId r : p.enabled)
      if (!q.ruleEnabled(r)) return false;
    if (q.structural == Structural::Free) return true;
    if (p.structural == Structural::Free) return false;
    return p.linearScope == LinearScope::AllLines || p.linearScope == q.linearScope;
  };
  std::vector<Profile> profiles;
  for (const std::string& name : builtinProfileNames()) profiles.push_back(builtinProfile(name));
  for (const CorpusEntry& entry : corpusEntries()) {
    Document doc = corpusDocument(entry);
    const ProofScript* proof = doc.findProof(entry.name);
    for (const Profile& p : profiles) {
      for (const Profile& q : profiles) {
        if (!atMostAsPermissive(p, q)) continue;
        bool validP = checkProof(*proof, doc.definitions, p).valid;
        bool validQ = checkProof(*proof, doc.definitions, q).valid;
        CAPTURE(entry.name);
        CAPTURE(p.name);
        CAPTURE(q.name);
        if (validP) CHECK(validQ);
      }
    }
  }
}

TEST_CASE("checkProof is deterministic") {
  Checked first = check("liar", "substructural");
  Checked second = check("liar", "substructural");
  REQUIRE(first.result.lines.size() == second.result.lines.size());
  for (std::size_t i = 0; i < first.result.lines.size(); ++i)
    CHECK(first.result.lines[i] == second.result.lines[i]);
  CHECK(first.result.usage == second.result.usage);
  CHECK(first.result.valid == second.result.valid);
}

TEST_CASE("fuzzed citations never crash the checker") {
  std::mt19937 rng(24601);
  const CorpusEntry* entry = findCorpusEntry("curry");
  Document doc = corpusDocument(*entry);
  const char* labels[] = {"1", "2.1", "2.2", "2.3", "3", "4", "5", "s2", "nope", "qed", ""};
  for (int iter = 0; iter < 500; ++iter) {
    ProofScript mutant = *doc.findProof("curry");
    // Rewrite every citation to a random label, in the nested block too.
    auto scramble = [&](auto&& self, std::vector<Step>& steps) -> void {
      for (Step& s : steps) {
        if (s.isDerived()) {
          for (std::string& c : std::get<DerivedStep>(s.node).just.cited)
            c = labels[rng() % (sizeof(labels) / sizeof(labels[0]))];
        } else if (s.isSubproof()) {
          self(self, std::get<SubproofStep>(s.node).steps);
        }
      }
    };
    scramble(scramble, mutant.steps);
    for (const std::string& profile : builtinProfileNames()) {
      CheckResult r = checkProof(mutant, doc.definitions, builtinProfile(profile));
      // Structured verdicts only; a proof this scrambled can stay valid
      // only by luck, but it must never crash.
      CHECK(r.lines.size() >= 8);
    }
  }
}

TEST_CASE("a discharge rule consumes its subproof in linear mode") {
  std::string text =
      "proof p from a\n"
      "  sub s1\n"
      "    1.1: assume a\n"
      "  end\n"
      "  2: a -> a [cp s1]\n"
      "  3: a -> a [cp s1]\n"
      "qed a -> a\n";
  CHECK(checkText(text, builtinProfile("classical")).valid);
  CheckResult linear = checkText(text, builtinProfile("substructural"));
  CHECK_FALSE(linear.valid);
  REQUIRE(linear.firstFailure.has_value());
  CHECK(linear.firstFailure->first == "s1");
  CHECK(linear.firstFailure->second == "contraction");
  const UsageEntry* block = linear.usage.find("s1");
  REQUIRE(block != nullptr);
  CHECK(block->kind == UsageKind::Block);
  CHECK(block->citedBy == std::vector<std::string>{"2", "3"});
}

TEST_CASE("dropping the liar's conjunction lines leaves bivalence unable to fire") {
  // The two case subproofs then end on different formulas, so no single
  // conclusion can be discharged; validity is lost even classically.
  std::string text =
      "def L := F(L)\n"
      "proof liar\n"
      "  sub s1\n"
      "    1.1: assume T(L)\n"
      "    1.2: T(F(L))  [subst L, unfold, 1.1]\n"
      "    1.3: F(L)     [telim 1.2]\n"
      "  end\n"
      "  sub s2\n"
      "    2.1: assume F(L)\n"
      "    2.2: L        [subst L, fold, 2.1]\n"
      "    2.3: T(L)     [tintro 2.2]\n"
      "  end\n"
      "  3: T(L) & F(L)  [bivalence L, s1, s2]\n"
      "qed T(L) & F(L)\n";
  CheckResult r = checkText(text, builtinProfile("classical"));
  CHECK_FALSE(r.valid);
  REQUIRE(r.firstFailure.has_value());
  CHECK(r.firstFailure->first == "3");
  CHECK(r.firstFailure->second == "schema-mismatch");
}

TEST_CASE("assume outside a subproof is rejected by the checker itself") {
  ProofScript proof;
  proof.name = "bad";
  proof.conclusion = Formula::atom("a");
  proof.steps.push_back(Step{AssumeStep{"1", Formula::atom("a")}});
  CheckResult r = checkProof(proof, {}, builtinProfile("classical"));
  CHECK_FALSE(r.valid);
  CHECK(r.firstFailure->second == "misplaced-assume");
}
