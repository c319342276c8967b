#pragma once

#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace paralab {

// The three LP truth values, ordered f < b < t so that conjunction is min
// and disjunction is max. Classical contexts admit only False and True.
enum class TruthValue : unsigned char { False = 0, Both = 1, True = 2 };

char truthValueChar(TruthValue v);
std::optional<TruthValue> truthValueFromChar(char c);

enum class FormulaKind : unsigned char {
  Atom,     // lowercase propositional letter
  Name,     // uppercase sentence name (opaque constant, e.g. L)
  Falsum,   // bot
  Not,
  And,
  Or,
  Implies,
  Iff,
  TrueOf,   // T(phi)
  FalseOf,  // F(phi)
  ValidOf   // Val(phi, psi)
};

// Number of subformula slots used by a kind: 0, 1 or 2.
int formulaArity(FormulaKind k);

// Immutable formula tree. Copies are cheap (shared structure); all identity
// checks are structural, never pointer-based. Default-constructed formulas
// are Falsum.
class Formula {
public:
  Formula();

  static Formula atom(std::string id);
  static Formula name(std::string id);
  static Formula falsum();
  static Formula negation(Formula f);
  static Formula conjunction(Formula lhs, Formula rhs);
  static Formula disjunction(Formula lhs, Formula rhs);
  static Formula implication(Formula lhs, Formula rhs);
  static Formula biconditional(Formula lhs, Formula rhs);
  static Formula trueOf(Formula f);
  static Formula falseOf(Formula f);
  static Formula validOf(Formula lhs, Formula rhs);

  FormulaKind kind() const;
  int arity() const { return formulaArity(kind()); }

  // Identifier of an Atom or Name node; empty otherwise.
  const std::string& id() const;

  // First / second subformula. Calling outside the node's arity is a logic
  // error and asserts in debug builds.
  Formula left() const;
  Formula right() const;

  bool operator==(const Formula& other) const;
  bool operator!=(const Formula& other) const { return !(*this == other); }

  struct Node;  // defined in formula.cpp; opaque to clients

private:
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

enum class DefKind : unsigned char { Identity, Biconditional };

// A sentence definition: `name := body` (identity, usable by substitution)
// or `name <=> body` (biconditional, usable as a given line name <-> body).
// The body may mention the defined name; that self-reference is the point.
struct Definition {
  std::string name;
  Formula body;
  DefKind kind;

  bool operator==(const Definition& other) const {
    return name == other.name && body == other.body && kind == other.kind;
  }
};

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class SubstErrorKind : unsigned char { WrongDefKind, NoOccurrence };

struct SubstError : Error {
  SubstError(SubstErrorKind k, const std::string& what) : Error(what), kind(k) {}
  SubstErrorKind kind;
};

enum class SubstDirection : unsigned char { Unfold, Fold };

// A position in a formula tree: child indices from the root (0 = left or
// only child, 1 = right). Paths are stable under replacement of disjoint
// subtrees, so unfolding and folding at the same paths are exact inverses.
using FormulaPath = std::vector<int>;

std::string pathText(const FormulaPath& path);  // "0.1.0", "." for the root

// Substitution of identity. Unfold replaces occurrences of the defined name
// by the definition body; fold replaces subformulas equal to the body by the
// bare name. With no occurrence list, every match is replaced; fold then
// requires at least one match. With a list, each path must name a matching
// occurrence. Requires an identity definition.
Formula substituteName(const Formula& f, const Definition& def, SubstDirection dir,
                       const std::optional<std::vector<FormulaPath>>& occurrences = std::nullopt);

// Paths of every occurrence substituteName would rewrite in all mode, in
// pre-order; fold paths never nest.
std::vector<FormulaPath> occurrencePaths(const Formula& f, const Definition& def,
                                         SubstDirection dir);

// All atom and sentence-name identifiers occurring in f, sorted.
std::set<std::string> atomsAndNames(const Formula& f);

// Structural equality (same as operator==); the only formula identity used.
bool equalFormulas(const Formula& a, const Formula& b);

}  // namespace paralab
