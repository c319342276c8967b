#include "paralab/corpus.hpp"

namespace paralab {

namespace {

constexpr const char* kLiar = R"(# The liar sentence: L says of itself that it is false.
def L := F(L)
proof liar
  sub s1
    1.1: assume T(L)
    1.2: T(F(L))        [subst L, unfold, 1.1]
    1.3: F(L)           [telim 1.2]
    1.4: T(L) & F(L)    [conji 1.1, 1.3]
  end
  sub s2
    2.1: assume F(L)
    2.2: L              [subst L, fold, 2.1]
    2.3: T(L)           [tintro 2.2]
    2.4: T(L) & F(L)    [conji 2.1, 2.3]
  end
  3: T(L) & F(L)        [bivalence L, s1, s2]
qed T(L) & F(L)
)";

constexpr const char* kLiarUp = R"(# One half of the liar: from T(L) to F(L), with a single discharge.
def L := F(L)
proof liar-up
  sub s1
    1.1: assume T(L)
    1.2: T(F(L))        [subst L, unfold, 1.1]
    1.3: F(L)           [telim 1.2]
  end
  2: T(L) -> F(L)       [cp s1]
qed T(L) -> F(L)
)";

constexpr const char* kLiarDown = R"(# The other half of the liar: from F(L) to T(L), with a single discharge.
def L := F(L)
proof liar-down
  sub s1
    1.1: assume F(L)
    1.2: L              [subst L, fold, 1.1]
    1.3: T(L)           [tintro 1.2]
  end
  2: F(L) -> T(L)       [cp s1]
qed F(L) -> T(L)
)";

constexpr const char* kExplosion = R"(# From a and ~a, any b follows -- if disjunctive syllogism is available.
proof explosion from a, ~a
  1: a                  [premise]
  2: a | b              [disji 1]
  3: ~a                 [premise]
  4: b                  [ds 2, 3]
qed b
)";

constexpr const char* kCurry = R"(def C <=> C -> bot
proof curry
  1: C <-> (C -> bot)   [defbi C]
  sub s2
    2.1: assume C
    2.2: C -> bot       [iffmp 1, 2.1]
    2.3: bot            [mp 2.2, 2.1]
  end
  3: C -> bot           [cp s2]
  4: C                  [iffmp 1, 3]
  5: bot                [mp 3, 4]
qed bot
)";

constexpr const char* kCurryRc = R"(# Curry with a single discharge, pushing the reuse into contraction.
def C <=> C -> bot
proof curry-rc
  1: C <-> (C -> bot)   [defbi C]
  sub s2
    2.1: assume C
    2.2: C -> bot       [iffmp 1, 2.1]
  end
  3: C -> (C -> bot)    [cp s2]
  4: C -> bot           [rc 3]
  5: C                  [iffmp 1, 4]
  6: bot                [mp 4, 5]
qed bot
)";

constexpr const char* kVCurry = R"(# Validity Curry: P says the argument from P to bot is valid.
def P <=> Val(P, bot)
proof vcurry
  1: P <-> Val(P, bot)  [defbi P]
  sub s2
    2.1: assume P
    2.2: Val(P, bot)    [iffmp 1, 2.1]
    2.3: P -> bot       [valelim 2.2]
    2.4: bot            [mp 2.3, 2.1]
  end
  3: Val(P, bot)        [valintro s2]
  4: P -> bot           [valelim 3]
  5: P                  [iffmp 1, 3]
  6: bot                [mp 4, 5]
qed bot
)";

constexpr const char* kDefsLiar = R"(# The liar definition alone, for truth-value solving.
def L := F(L)
)";

constexpr const char* kDefsCurry = R"(# The Curry definition alone, for truth-value solving.
def C <=> C -> bot
)";

MatrixCell ok() { return {true, "", ""}; }
MatrixCell bad(std::string at, std::string reason) {
  return {false, std::move(at), std::move(reason)};
}

std::vector<CorpusEntry> makeEntries() {
  std::vector<CorpusEntry> entries;
  entries.push_back({"liar",
                     kLiar,
                     {{"classical", ok()},
                      {"dialetheic", ok()},
                      {"substructural", bad("1.1", "contraction")},
                      {"dialetheic-substructural", bad("1.1", "contraction")},
                      {"no-dt", ok()}}});
  entries.push_back({"liar-up",
                     kLiarUp,
                     {{"classical", ok()},
                      {"dialetheic", ok()},
                      {"substructural", ok()},
                      {"dialetheic-substructural", ok()},
                      {"no-dt", bad("2", "rule-disabled(cp)")}}});
  entries.push_back({"liar-down",
                     kLiarDown,
                     {{"classical", ok()},
                      {"dialetheic", ok()},
                      {"substructural", ok()},
                      {"dialetheic-substructural", ok()},
                      {"no-dt", bad("2", "rule-disabled(cp)")}}});
  entries.push_back({"explosion",
                     kExplosion,
                     {{"classical", ok()},
                      {"dialetheic", bad("4", "rule-disabled(ds)")},
                      {"substructural", ok()},
                      {"dialetheic-substructural", bad("4", "rule-disabled(ds)")},
                      {"no-dt", ok()}}});
  entries.push_back({"curry",
                     kCurry,
                     {{"classical", ok()},
                      {"dialetheic", ok()},
                      {"substructural", bad("2.1", "contraction")},
                      {"dialetheic-substructural", bad("2.1", "contraction")},
                      {"no-dt", bad("3", "rule-disabled(cp)")}}});
  entries.push_back({"curry-rc",
                     kCurryRc,
                     {{"classical", ok()},
                      {"dialetheic", ok()},
                      {"substructural", bad("4", "rule-disabled(rc)")},
                      {"dialetheic-substructural", bad("4", "rule-disabled(rc)")},
                      {"no-dt", bad("3", "rule-disabled(cp)")}}});
  entries.push_back({"vcurry",
                     kVCurry,
                     {{"classical", ok()},
                      {"dialetheic", ok()},
                      {"substructural", bad("2.1", "contraction")},
                      {"dialetheic-substructural", bad("2.1", "contraction")},
                      {"no-dt", ok()}}});
  return entries;
}

}  // namespace

const std::vector<CorpusEntry>& corpusEntries() {
  static const std::vector<CorpusEntry> entries = makeEntries();
  return entries;
}

const CorpusEntry* findCorpusEntry(const std::string& name) {
  for (const CorpusEntry& e : corpusEntries())
    if (e.name == name) return &e;
  return nullptr;
}

const std::map<std::string, std::string>& corpusDefinitionFiles() {
  static const std::map<std::string, std::string> files = {
      {"defs-liar.prf", kDefsLiar},
      {"defs-curry.prf", kDefsCurry},
  };
  return files;
}

Document corpusDocument(const CorpusEntry& entry) {
  ParseResult parsed = parseScript(entry.scriptText);
  if (!parsed.ok()) {
    std::string what = "corpus script '" + entry.name + "' does not parse:";
    for (const Diagnostic& d : parsed.errors) what += "\n  " + d.render();
    throw Error(what);
  }
  return std::move(parsed.document);
}

MatrixReport runMatrix(const std::vector<Profile>& profiles) {
  MatrixReport report;
  for (const Profile& p : profiles) report.profiles.push_back(p.name);
  for (const CorpusEntry& entry : corpusEntries()) {
    report.proofs.push_back(entry.name);
    Document doc = corpusDocument(entry);
    const ProofScript* proof = doc.findProof(entry.name);
    if (!proof) throw Error("corpus script '" + entry.name + "' lacks its proof");
    for (const Profile& profile : profiles) {
      CheckResult res = checkProof(*proof, doc.definitions, profile);
      MatrixCell cell;
      cell.valid = res.valid;
      if (!res.valid && res.firstFailure) {
        cell.at = res.firstFailure->first;
        cell.reason = res.firstFailure->second;
      }
      report.cells[entry.name][profile.name] = cell;
    }
  }
  return report;
}

MatrixReport expectedMatrix() {
  MatrixReport report;
  report.profiles = builtinProfileNames();
  for (const CorpusEntry& entry : corpusEntries()) {
    report.proofs.push_back(entry.name);
    report.cells[entry.name] = entry.expected;
  }
  return report;
}

}  // namespace paralab
