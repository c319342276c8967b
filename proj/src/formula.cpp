#include "paralab/formula.hpp"

#include <cassert>

namespace paralab {

char truthValueChar(TruthValue v) {
  switch (v) {
    case TruthValue::False: return 'f';
    case TruthValue::Both: return 'b';
    case TruthValue::True: return 't';
  }
  return '?';
}

std::optional<TruthValue> truthValueFromChar(char c) {
  switch (c) {
    case 'f': return TruthValue::False;
    case 'b': return TruthValue::Both;
    case 't': return TruthValue::True;
    default: return std::nullopt;
  }
}

int formulaArity(FormulaKind k) {
  switch (k) {
    case FormulaKind::Atom:
    case FormulaKind::Name:
    case FormulaKind::Falsum:
      return 0;
    case FormulaKind::Not:
    case FormulaKind::TrueOf:
    case FormulaKind::FalseOf:
      return 1;
    default:
      return 2;
  }
}

struct Formula::Node {
  FormulaKind kind;
  std::string id;
  std::shared_ptr<const Node> l, r;
};

namespace {

std::shared_ptr<const Formula::Node> makeNode(FormulaKind kind, std::string id,
                                              std::shared_ptr<const Formula::Node> l = nullptr,
                                              std::shared_ptr<const Formula::Node> r = nullptr) {
  auto n = std::make_shared<Formula::Node>();
  n->kind = kind;
  n->id = std::move(id);
  n->l = std::move(l);
  n->r = std::move(r);
  return n;
}

}  // namespace

Formula::Formula() : node_(makeNode(FormulaKind::Falsum, "")) {}

Formula Formula::atom(std::string id) { return Formula(makeNode(FormulaKind::Atom, std::move(id))); }
Formula Formula::name(std::string id) { return Formula(makeNode(FormulaKind::Name, std::move(id))); }
Formula Formula::falsum() { return Formula(makeNode(FormulaKind::Falsum, "")); }
Formula Formula::negation(Formula f) { return Formula(makeNode(FormulaKind::Not, "", f.node_)); }
Formula Formula::conjunction(Formula lhs, Formula rhs) {
  return Formula(makeNode(FormulaKind::And, "", lhs.node_, rhs.node_));
}
Formula Formula::disjunction(Formula lhs, Formula rhs) {
  return Formula(makeNode(FormulaKind::Or, "", lhs.node_, rhs.node_));
}
Formula Formula::implication(Formula lhs, Formula rhs) {
  return Formula(makeNode(FormulaKind::Implies, "", lhs.node_, rhs.node_));
}
Formula Formula::biconditional(Formula lhs, Formula rhs) {
  return Formula(makeNode(FormulaKind::Iff, "", lhs.node_, rhs.node_));
}
Formula Formula::trueOf(Formula f) { return Formula(makeNode(FormulaKind::TrueOf, "", f.node_)); }
Formula Formula::falseOf(Formula f) { return Formula(makeNode(FormulaKind::FalseOf, "", f.node_)); }
Formula Formula::validOf(Formula lhs, Formula rhs) {
  return Formula(makeNode(FormulaKind::ValidOf, "", lhs.node_, rhs.node_));
}

FormulaKind Formula::kind() const { return node_->kind; }

const std::string& Formula::id() const { return node_->id; }

Formula Formula::left() const {
  assert(node_->l && "left() on a leaf formula");
  return Formula(node_->l);
}

Formula Formula::right() const {
  assert(node_->r && "right() on a formula without a second child");
  return Formula(node_->r);
}

namespace {

bool nodesEqual(const Formula::Node* a, const Formula::Node* b) {
  if (a == b) return true;
  if (a->kind != b->kind) return false;
  if (a->id != b->id) return false;
  if ((a->l == nullptr) != (b->l == nullptr)) return false;
  if ((a->r == nullptr) != (b->r == nullptr)) return false;
  if (a->l && !nodesEqual(a->l.get(), b->l.get())) return false;
  if (a->r && !nodesEqual(a->r.get(), b->r.get())) return false;
  return true;
}

}  // namespace

bool Formula::operator==(const Formula& other) const {
  return nodesEqual(node_.get(), other.node_.get());
}

bool equalFormulas(const Formula& a, const Formula& b) { return a == b; }

std::string pathText(const FormulaPath& path) {
  if (path.empty()) return ".";
  std::string out;
  for (std::size_t i = 0; i < path.size(); ++i)
    out += (i ? "." : "") + std::to_string(path[i]);
  return out;
}

namespace {

bool matchesAt(const Formula& f, const Definition& def, SubstDirection dir) {
  if (dir == SubstDirection::Unfold)
    return f.kind() == FormulaKind::Name && f.id() == def.name;
  return f == def.body;
}

Formula replacement(const Definition& def, SubstDirection dir) {
  return dir == SubstDirection::Unfold ? def.body : Formula::name(def.name);
}

Formula rebuild(const Formula& f, const Formula& l, const Formula& r) {
  switch (f.kind()) {
    case FormulaKind::Not: return Formula::negation(l);
    case FormulaKind::TrueOf: return Formula::trueOf(l);
    case FormulaKind::FalseOf: return Formula::falseOf(l);
    case FormulaKind::And: return Formula::conjunction(l, r);
    case FormulaKind::Or: return Formula::disjunction(l, r);
    case FormulaKind::Implies: return Formula::implication(l, r);
    case FormulaKind::Iff: return Formula::biconditional(l, r);
    default: return Formula::validOf(l, r);
  }
}

// Pre-order rewrite of every match; replaced subtrees are not rescanned.
// Matches cannot nest (a formula is never a proper subformula of itself),
// so the replacement order is unambiguous.
Formula rewriteAll(const Formula& f, const Definition& def, SubstDirection dir,
                   std::size_t& replaced) {
  if (matchesAt(f, def, dir)) {
    ++replaced;
    return replacement(def, dir);
  }
  switch (f.arity()) {
    case 0: return f;
    case 1: return rebuild(f, rewriteAll(f.left(), def, dir, replaced), f);
    default:
      return rebuild(f, rewriteAll(f.left(), def, dir, replaced),
                     rewriteAll(f.right(), def, dir, replaced));
  }
}

Formula rewriteAt(const Formula& f, const Definition& def, SubstDirection dir,
                  const FormulaPath& path, std::size_t at) {
  if (at == path.size()) {
    if (!matchesAt(f, def, dir))
      throw SubstError(SubstErrorKind::NoOccurrence,
                       "no " + std::string(dir == SubstDirection::Unfold ? "occurrence of '" +
                                                                               def.name + "'"
                                                                         : "match of the body") +
                           " at position " + pathText(path));
    return replacement(def, dir);
  }
  int branch = path[at];
  if (branch < 0 || branch >= f.arity())
    throw SubstError(SubstErrorKind::NoOccurrence,
                     "position " + pathText(path) + " does not exist in the formula");
  if (branch == 0) return rebuild(f, rewriteAt(f.left(), def, dir, path, at + 1),
                                  f.arity() == 2 ? f.right() : f);
  return rebuild(f, f.left(), rewriteAt(f.right(), def, dir, path, at + 1));
}

void collectPaths(const Formula& f, const Definition& def, SubstDirection dir, FormulaPath& here,
                  std::vector<FormulaPath>& out) {
  if (matchesAt(f, def, dir)) {
    out.push_back(here);
    return;
  }
  for (int i = 0; i < f.arity(); ++i) {
    here.push_back(i);
    collectPaths(i == 0 ? f.left() : f.right(), def, dir, here, out);
    here.pop_back();
  }
}

}  // namespace

std::vector<FormulaPath> occurrencePaths(const Formula& f, const Definition& def,
                                         SubstDirection dir) {
  std::vector<FormulaPath> out;
  FormulaPath here;
  collectPaths(f, def, dir, here, out);
  return out;
}

Formula substituteName(const Formula& f, const Definition& def, SubstDirection dir,
                       const std::optional<std::vector<FormulaPath>>& occurrences) {
  if (def.kind != DefKind::Identity)
    throw SubstError(SubstErrorKind::WrongDefKind,
                     "substitution requires an identity definition, but '" + def.name +
                         "' is biconditional");
  if (!occurrences) {
    std::size_t replaced = 0;
    Formula result = rewriteAll(f, def, dir, replaced);
    if (dir == SubstDirection::Fold && replaced == 0)
      throw SubstError(SubstErrorKind::NoOccurrence,
                       "fold: no subformula matches the body of '" + def.name + "'");
    return result;
  }
  Formula result = f;
  for (const FormulaPath& path : *occurrences)
    result = rewriteAt(result, def, dir, path, 0);
  return result;
}

namespace {

void collectIds(const Formula& f, std::set<std::string>& out) {
  if (f.kind() == FormulaKind::Atom || f.kind() == FormulaKind::Name) {
    out.insert(f.id());
    return;
  }
  if (f.arity() >= 1) collectIds(f.left(), out);
  if (f.arity() == 2) collectIds(f.right(), out);
}

}  // namespace

std::set<std::string> atomsAndNames(const Formula& f) {
  std::set<std::string> out;
  collectIds(f, out);
  return out;
}

}  // namespace paralab
