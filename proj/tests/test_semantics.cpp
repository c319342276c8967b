#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "paralab/corpus.hpp"
#include "paralab/semantics.hpp"
#include "paralab/syntax.hpp"
#include "oracle.hpp"
#include "testutil.hpp"

using namespace paralab;

namespace {

Valuation val(std::initializer_list<std::pair<const char*, TruthValue>> items) {
  Valuation v;
  for (const auto& [k, tv] : items) v[k] = tv;
  return v;
}

constexpr TruthValue F = TruthValue::False;
constexpr TruthValue B = TruthValue::Both;
constexpr TruthValue T = TruthValue::True;

}  // namespace

TEST_CASE("LP evaluation on the glut value") {
  CHECK(evalFormula(mustParseFormula("~p"), val({{"p", B}}), Logic::LP) == B);
  CHECK(evalFormula(mustParseFormula("p -> bot"), val({{"p", B}}), Logic::LP) == B);
  TruthValue glutContradiction =
      evalFormula(mustParseFormula("p & ~p"), val({{"p", B}}), Logic::LP);
  CHECK(glutContradiction == B);
  CHECK(designated(glutContradiction, Logic::LP));
  CHECK(evalFormula(mustParseFormula("T(L) & F(L)"), val({{"L", B}}), Logic::LP) == B);
}

TEST_CASE("classical evaluation coincides on classical values") {
  CHECK(evalFormula(mustParseFormula("p -> q"), val({{"p", T}, {"q", F}}), Logic::CL) == F);
  CHECK(evalFormula(mustParseFormula("p | ~p"), val({{"p", F}}), Logic::CL) == T);
  CHECK_FALSE(designated(F, Logic::CL));
  CHECK_FALSE(designated(B, Logic::CL));
  CHECK(designated(B, Logic::LP));
}

TEST_CASE("evaluation errors") {
  CHECK_THROWS_AS(evalFormula(mustParseFormula("Val(a, b)"), val({{"a", T}, {"b", T}}), Logic::LP),
                  EvalError);
  CHECK_THROWS_AS(evalFormula(mustParseFormula("p & q"), val({{"p", T}}), Logic::LP), EvalError);
  CHECK_THROWS_AS(evalFormula(mustParseFormula("p"), val({{"p", B}}), Logic::CL), EvalError);
  try {
    evalFormula(mustParseFormula("p"), val({{"p", B}}), Logic::CL);
  } catch (const EvalError& e) {
    CHECK(e.kind == EvalErrorKind::ValueDomain);
  }
}

TEST_CASE("evaluation agrees with the independent oracle") {
  std::mt19937 rng(60601);
  testutil::FormulaGen gen;
  gen.atoms = {"p", "q", "r"};
  for (int i = 0; i < 300; ++i) {
    Formula f = gen.gen(rng, 5);
    std::set<std::string> idSet = atomsAndNames(f);
    std::vector<std::string> ids(idSet.begin(), idSet.end());
    for (const auto& assignment : oracle::allAssignments(ids, false)) {
      TruthValue mine = evalFormula(f, oracle::toValuation(assignment), Logic::LP);
      CHECK(static_cast<int>(mine) == oracle::evalInt(f, assignment, false));
    }
  }
}

TEST_CASE("LP agrees with CL on two-valued valuations (conservativity)") {
  std::mt19937 rng(8128);
  testutil::FormulaGen gen;
  gen.atoms = {"p", "q", "r"};
  for (int i = 0; i < 300; ++i) {
    Formula f = gen.gen(rng, 5);
    std::set<std::string> idSet = atomsAndNames(f);
    std::vector<std::string> ids(idSet.begin(), idSet.end());
    REQUIRE(ids.size() <= 3);
    for (const auto& assignment : oracle::allAssignments(ids, true)) {  // {t, f} only
      Valuation v = oracle::toValuation(assignment);
      CHECK(evalFormula(f, v, Logic::LP) == evalFormula(f, v, Logic::CL));
    }
  }
}

TEST_CASE("rule census under LP and CL, frozen values") {
  auto verdictOf = [](const char* name, Logic logic) {
    const RuleSchema* s = findSchema(name);
    REQUIRE(s != nullptr);
    return ruleValid(*s, logic);
  };
  Valuation glut = val({{"A", B}, {"B", F}});

  for (const char* broken : {"ds", "mp", "explode", "iffmp"}) {
    CAPTURE(broken);
    Verdict v = verdictOf(broken, Logic::LP);
    CHECK_FALSE(v.valid);
    REQUIRE(v.countermodel.has_value());
    CHECK(*v.countermodel == glut);
  }
  for (const char* fine : {"conji", "disji", "telim", "tintro", "rc", "lem"}) {
    CAPTURE(fine);
    CHECK(verdictOf(fine, Logic::LP).valid);
  }
  for (const RuleSchema& s : semanticSchemas()) {
    CAPTURE(s.name);
    CHECK(verdictOf(s.name.c_str(), Logic::CL).valid);
  }
}

TEST_CASE("every registry schema matches the oracle in both logics") {
  for (const RuleSchema& s : semanticSchemas()) {
    CAPTURE(s.name);
    for (bool classical : {false, true}) {
      Logic logic = classical ? Logic::CL : Logic::LP;
      oracle::OracleVerdict expected = oracle::checkSchema(s.premises, s.conclusion, classical);
      Verdict got = ruleValid(s, logic);
      CHECK(got.valid == expected.valid);
      if (!expected.valid) {
        REQUIRE(got.countermodel.has_value());
        CHECK(oracle::fromValuation(*got.countermodel) == expected.firstCountermodel);
      }
    }
  }
}

TEST_CASE("LP validity implies CL validity for registry schemas") {
  for (const RuleSchema& s : semanticSchemas()) {
    CAPTURE(s.name);
    if (ruleValid(s, Logic::LP).valid) CHECK(ruleValid(s, Logic::CL).valid);
  }
}

TEST_CASE("the returned countermodel is the lexicographically first") {
  // A | B entails A & B nowhere near validity; countermodels abound.
  RuleSchema schema{"weak", {mustParseFormula("A | B")}, mustParseFormula("A & B")};
  Verdict v = ruleValid(schema, Logic::LP);
  REQUIRE_FALSE(v.valid);
  // Enumeration runs A=f,b,t against B=f,b,t with A most significant, so
  // the first hit is A=f, B=b.
  CHECK(*v.countermodel == val({{"A", F}, {"B", B}}));
  Verdict again = ruleValid(schema, Logic::LP);
  CHECK(*again.countermodel == *v.countermodel);
}

TEST_CASE("De Morgan and double negation hold value-wise in LP") {
  Formula a = Formula::atom("a"), b = Formula::atom("b");
  Formula lhs = Formula::negation(Formula::conjunction(a, b));
  Formula rhs = Formula::disjunction(Formula::negation(a), Formula::negation(b));
  for (TruthValue va : {F, B, T}) {
    for (TruthValue vb : {F, B, T}) {
      Valuation v = val({{"a", va}, {"b", vb}});
      CHECK(evalFormula(lhs, v, Logic::LP) == evalFormula(rhs, v, Logic::LP));
    }
    Valuation v = val({{"a", va}});
    CHECK(evalFormula(Formula::negation(Formula::negation(a)), v, Logic::LP) ==
          evalFormula(a, v, Logic::LP));
  }
}

TEST_CASE("excluded middle is LP-valid") {
  CHECK(ruleValid(*findSchema("lem"), Logic::LP).valid);
}

TEST_CASE("fixed points of the liar and Curry definitions") {
  Definition liar{"L", mustParseFormula("F(L)"), DefKind::Identity};
  Definition curry{"C", mustParseFormula("C -> bot"), DefKind::Biconditional};
  for (SolveMode mode : {SolveMode::Equational, SolveMode::DesignatedIff}) {
    CAPTURE(solveModeName(mode));
    CHECK(solveDefinitions({liar}, Logic::CL, mode).empty());
    auto liarLp = solveDefinitions({liar}, Logic::LP, mode);
    REQUIRE(liarLp.size() == 1);
    CHECK(liarLp[0] == val({{"L", B}}));
    auto curryLp = solveDefinitions({curry}, Logic::LP, mode);
    REQUIRE(curryLp.size() == 1);
    CHECK(curryLp[0] == val({{"C", B}}));
    CHECK(solveDefinitions({curry}, Logic::CL, mode).empty());
  }
}

TEST_CASE("mutually recursive definitions enumerate in lexicographic order") {
  Definition a{"A", Formula::name("B"), DefKind::Identity};
  Definition b{"B", Formula::name("A"), DefKind::Identity};
  auto lp = solveDefinitions({a, b}, Logic::LP, SolveMode::Equational);
  REQUIRE(lp.size() == 3);
  CHECK(lp[0] == val({{"A", F}, {"B", F}}));
  CHECK(lp[1] == val({{"A", B}, {"B", B}}));
  CHECK(lp[2] == val({{"A", T}, {"B", T}}));
  auto cl = solveDefinitions({a, b}, Logic::CL, SolveMode::Equational);
  REQUIRE(cl.size() == 2);
  CHECK(cl[0] == val({{"A", F}, {"B", F}}));
  CHECK(cl[1] == val({{"A", T}, {"B", T}}));

  Definition na{"A", Formula::negation(Formula::name("B")), DefKind::Identity};
  Definition nb{"B", Formula::name("A"), DefKind::Identity};
  auto twisted = solveDefinitions({na, nb}, Logic::LP, SolveMode::Equational);
  REQUIRE(twisted.size() == 1);
  CHECK(twisted[0] == val({{"A", B}, {"B", B}}));
  CHECK(solveDefinitions({na, nb}, Logic::CL, SolveMode::Equational).empty());
}

TEST_CASE("free atoms must be supplied") {
  Definition d{"X", mustParseFormula("a & b"), DefKind::Identity};
  CHECK_THROWS_AS(solveDefinitions({d}, Logic::LP, SolveMode::Equational), EvalError);
  auto sols =
      solveDefinitions({d}, Logic::LP, SolveMode::Equational, val({{"a", T}, {"b", F}}));
  REQUIRE(sols.size() == 1);
  CHECK(sols[0] == val({{"X", F}}));
  CHECK_THROWS_AS(
      solveDefinitions({d}, Logic::CL, SolveMode::Equational, val({{"a", B}, {"b", F}})),
      EvalError);
}

TEST_CASE("designated-iff is weaker than value identity in LP") {
  // With Y glutted, X <-> Y is designated whatever X is, while the
  // equational reading pins X to b.
  Definition d{"X", Formula::atom("y"), DefKind::Identity};
  Valuation fixed = val({{"y", B}});
  auto equational = solveDefinitions({d}, Logic::LP, SolveMode::Equational, fixed);
  REQUIRE(equational.size() == 1);
  CHECK(equational[0] == val({{"X", B}}));
  auto weak = solveDefinitions({d}, Logic::LP, SolveMode::DesignatedIff, fixed);
  CHECK(weak.size() == 3);
}

TEST_CASE("CL solutions are a subset of LP solutions") {
  std::mt19937 rng(31415);
  testutil::FormulaGen gen;
  gen.atoms = {};
  gen.names = {"X", "Y"};
  gen.withPredicates = true;
  auto contains = [](const std::vector<Valuation>& haystack, const Valuation& needle) {
    for (const Valuation& v : haystack)
      if (v == needle) return true;
    return false;
  };
  for (SolveMode mode : {SolveMode::Equational, SolveMode::DesignatedIff}) {
    for (int i = 0; i < 100; ++i) {
      std::vector<Definition> defs = {{"X", gen.gen(rng, 3), DefKind::Identity},
                                      {"Y", gen.gen(rng, 3), DefKind::Identity}};
      auto lp = solveDefinitions(defs, Logic::LP, mode);
      for (const Valuation& sol : solveDefinitions(defs, Logic::CL, mode))
        CHECK(contains(lp, sol));
    }
  }
}

TEST_CASE("Val in definitions is rejected, not guessed") {
  Definition d{"P", mustParseFormula("Val(P, bot)"), DefKind::Biconditional};
  CHECK_THROWS_AS(solveDefinitions({d}, Logic::LP, SolveMode::Equational), EvalError);
}

TEST_CASE("corpus definition files solve to the published values") {
  const auto& files = corpusDefinitionFiles();
  ParseResult liar = parseScript(files.at("defs-liar.prf"));
  REQUIRE(liar.ok());
  CHECK(solveDefinitions(liar.document.definitions, Logic::CL, SolveMode::Equational).empty());
  auto lp = solveDefinitions(liar.document.definitions, Logic::LP, SolveMode::Equational);
  REQUIRE(lp.size() == 1);
  CHECK(lp[0] == val({{"L", B}}));
}
