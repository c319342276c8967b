#include "paralab/syntax.hpp"

#include <cassert>
#include <cctype>
#include <sstream>

namespace paralab {

const std::string& Step::key() const {
  if (isAssume()) return assume().label;
  if (isDerived()) return derived().label;
  return subproof().id;
}

const Definition* Document::findDefinition(const std::string& name) const {
  for (const auto& d : definitions)
    if (d.name == name) return &d;
  return nullptr;
}

const ProofScript* Document::findProof(const std::string& name) const {
  for (const auto& p : proofs)
    if (p.name == name) return &p;
  return nullptr;
}

bool operator==(const Justification& a, const Justification& b) {
  return a.rule == b.rule && a.cited == b.cited && a.defName == b.defName &&
         a.direction == b.direction && a.caseName == b.caseName;
}

bool operator==(const AssumeStep& a, const AssumeStep& b) {
  return a.label == b.label && a.formula == b.formula;
}

bool operator==(const DerivedStep& a, const DerivedStep& b) {
  return a.label == b.label && a.formula == b.formula && a.just == b.just;
}

bool operator==(const SubproofStep& a, const SubproofStep& b) {
  return a.id == b.id && a.steps == b.steps;
}

bool operator==(const Step& a, const Step& b) { return a.node == b.node; }

bool operator==(const ProofScript& a, const ProofScript& b) {
  return a.name == b.name && a.hypotheses == b.hypotheses && a.steps == b.steps &&
         a.conclusion == b.conclusion;
}

bool operator==(const Document& a, const Document& b) {
  return a.definitions == b.definitions && a.proofs == b.proofs;
}

std::string Diagnostic::render() const {
  std::ostringstream out;
  out << line << ":" << column << ": " << message;
  if (!expected.empty()) {
    out << " (expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i) out << ", ";
      out << expected[i];
    }
    out << ")";
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Lexer

namespace {

enum class Tok : unsigned char {
  Word,      // identifiers, labels, keywords, `bot`
  Tilde,     // ~
  Amp,       // &
  Pipe,      // |
  Arrow,     // ->
  IffSym,    // <->
  Assign,    // :=
  BiDef,     // <=>
  LParen,
  RParen,
  Comma,
  Colon,
  LBracket,
  RBracket,
  Newline,
  End,
  Bad
};

struct Token {
  Tok kind;
  std::string text;
  int line = 0;
  int col = 0;
};

bool isWordChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

std::vector<Token> lex(const std::string& text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto push = [&](Tok k, std::string t, int l, int c) { out.push_back({k, std::move(t), l, c}); };
  auto starts = [&](const char* seq) {
    return text.compare(i, std::char_traits<char>::length(seq), seq) == 0;
  };
  while (i < text.size()) {
    char c = text[i];
    int tl = line, tc = col;
    if (c == '\n') {
      push(Tok::Newline, "\n", tl, tc);
      ++i;
      ++line;
      col = 1;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
      ++col;
      continue;
    }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') { ++i; ++col; }
      continue;
    }
    auto single = [&](Tok k, const char* t) { push(k, t, tl, tc); ++i; ++col; };
    switch (c) {
      case '~': single(Tok::Tilde, "~"); continue;
      case '&': single(Tok::Amp, "&"); continue;
      case '|': single(Tok::Pipe, "|"); continue;
      case '(': single(Tok::LParen, "("); continue;
      case ')': single(Tok::RParen, ")"); continue;
      case ',': single(Tok::Comma, ","); continue;
      case '[': single(Tok::LBracket, "["); continue;
      case ']': single(Tok::RBracket, "]"); continue;
      default: break;
    }
    if (c == ':') {
      if (i + 1 < text.size() && text[i + 1] == '=') {
        push(Tok::Assign, ":=", tl, tc);
        i += 2; col += 2;
      } else {
        single(Tok::Colon, ":");
      }
      continue;
    }
    if (c == '-') {
      if (i + 1 < text.size() && text[i + 1] == '>') {
        push(Tok::Arrow, "->", tl, tc);
        i += 2; col += 2;
        continue;
      }
      push(Tok::Bad, "stray '-'", tl, tc);
      ++i; ++col;
      continue;
    }
    if (c == '<') {
      if (starts("<->")) {
        push(Tok::IffSym, "<->", tl, tc);
        i += 3; col += 3;
        continue;
      }
      if (starts("<=>")) {
        push(Tok::BiDef, "<=>", tl, tc);
        i += 3; col += 3;
        continue;
      }
      push(Tok::Bad, "stray '<'", tl, tc);
      ++i; ++col;
      continue;
    }
    // Unicode aliases, matched by their UTF-8 byte sequences.
    if (starts("\xc2\xac")) { push(Tok::Tilde, "~", tl, tc); i += 2; col += 2; continue; }
    if (starts("\xe2\x88\xa7")) { push(Tok::Amp, "&", tl, tc); i += 3; col += 3; continue; }
    if (starts("\xe2\x88\xa8")) { push(Tok::Pipe, "|", tl, tc); i += 3; col += 3; continue; }
    if (starts("\xe2\x86\x92")) { push(Tok::Arrow, "->", tl, tc); i += 3; col += 3; continue; }
    if (starts("\xe2\x86\x94")) { push(Tok::IffSym, "<->", tl, tc); i += 3; col += 3; continue; }
    if (starts("\xe2\x8a\xa5")) { push(Tok::Word, "bot", tl, tc); i += 3; col += 3; continue; }
    if (isWordChar(c)) {
      std::string w;
      while (i < text.size()) {
        char d = text[i];
        if (isWordChar(d)) {
          w += d;
          ++i; ++col;
          continue;
        }
        // Dots and dashes glue a word together only between word chars,
        // so `2.1` is one label while `a->b` splits before the arrow.
        if ((d == '.' || d == '-') && i + 1 < text.size() && isWordChar(text[i + 1])) {
          w += d;
          ++i; ++col;
          continue;
        }
        break;
      }
      push(Tok::Word, std::move(w), tl, tc);
      continue;
    }
    push(Tok::Bad, std::string("unexpected character '") + c + "'", tl, tc);
    ++i; ++col;
  }
  push(Tok::End, "", line, col);
  return out;
}

// ---------------------------------------------------------------------------
// Formula parsing (shared by the standalone entry point and the script
// parser; aborts with ParseAbort carrying nothing, diagnostic on the parser)

struct ParseAbort {};

bool looksLikeName(const std::string& w) {
  return !w.empty() && std::isupper(static_cast<unsigned char>(w[0])) &&
         w.find('.') == std::string::npos;
}

bool looksLikeAtom(const std::string& w) {
  if (w.empty()) return false;
  char c = w[0];
  if (!(std::islower(static_cast<unsigned char>(c)) || c == '_')) return false;
  return w.find('.') == std::string::npos;
}

class TokenCursor {
public:
  explicit TokenCursor(const std::vector<Token>& toks) : toks_(toks) {}

  const Token& peek() const { return toks_[pos_]; }
  const Token& get() { return toks_[std::min(pos_++, toks_.size() - 1)]; }
  bool at(Tok k) const { return peek().kind == k; }
  bool atWord(const char* w) const { return peek().kind == Tok::Word && peek().text == w; }

  [[noreturn]] void fail(const Token& tok, std::string message,
                         std::vector<std::string> expected = {}) {
    diagnostic = Diagnostic{tok.line, tok.col, std::move(message), std::move(expected)};
    throw ParseAbort{};
  }

  void expect(Tok k, const char* spelling) {
    if (!at(k)) fail(peek(), "unexpected " + describe(peek()), {spelling});
    get();
  }

  static std::string describe(const Token& t) {
    switch (t.kind) {
      case Tok::Newline: return "end of line";
      case Tok::End: return "end of input";
      case Tok::Bad: return t.text;
      default: return "'" + t.text + "'";
    }
  }

  // One formula, precedence climbing.
  Formula formula() { return parseIff(); }

  Diagnostic diagnostic;

private:
  Formula parseIff() {
    Formula lhs = parseImplies();
    if (at(Tok::IffSym)) {
      get();
      Formula rhs = parseImplies();
      if (at(Tok::IffSym))
        fail(peek(), "'<->' is non-associative; parenthesize one side");
      return Formula::biconditional(lhs, rhs);
    }
    return lhs;
  }

  Formula parseImplies() {
    Formula lhs = parseOr();
    if (at(Tok::Arrow)) {
      get();
      return Formula::implication(lhs, parseImplies());
    }
    return lhs;
  }

  Formula parseOr() {
    Formula lhs = parseAnd();
    while (at(Tok::Pipe)) {
      get();
      lhs = Formula::disjunction(lhs, parseAnd());
    }
    return lhs;
  }

  Formula parseAnd() {
    Formula lhs = parseUnary();
    while (at(Tok::Amp)) {
      get();
      lhs = Formula::conjunction(lhs, parseUnary());
    }
    return lhs;
  }

  Formula parseUnary() {
    if (at(Tok::Tilde)) {
      get();
      return Formula::negation(parseUnary());
    }
    return parsePrimary();
  }

  Formula parsePrimary() {
    const Token& tok = peek();
    if (tok.kind == Tok::LParen) {
      get();
      Formula inner = parseIff();
      expect(Tok::RParen, ")");
      return inner;
    }
    if (tok.kind == Tok::Word) {
      const std::string w = tok.text;
      if (w == "bot") {
        get();
        return Formula::falsum();
      }
      if (w == "T" || w == "F" || w == "Val") {
        get();
        if (!at(Tok::LParen))
          fail(peek(), "'" + w + "' is a reserved predicate and needs arguments", {"("});
        get();
        Formula first = parseIff();
        if (w == "Val") {
          expect(Tok::Comma, ",");
          Formula second = parseIff();
          expect(Tok::RParen, ")");
          return Formula::validOf(first, second);
        }
        expect(Tok::RParen, ")");
        return w == "T" ? Formula::trueOf(first) : Formula::falseOf(first);
      }
      if (looksLikeName(w)) {
        get();
        return Formula::name(w);
      }
      if (looksLikeAtom(w)) {
        get();
        return Formula::atom(w);
      }
      fail(tok, "'" + w + "' is not an atom or sentence name");
    }
    fail(tok, "expected a formula, found " + describe(tok),
         {"~", "(", "bot", "atom", "sentence name", "T(", "F(", "Val("});
  }

  const std::vector<Token>& toks_;
  std::size_t pos_ = 0;
};

}  // namespace

FormulaParseResult parseFormula(const std::string& text) {
  std::vector<Token> toks = lex(text);
  TokenCursor cur(toks);
  try {
    Formula f = cur.formula();
    while (cur.at(Tok::Newline)) cur.get();
    if (!cur.at(Tok::End))
      cur.fail(cur.peek(), "trailing input after formula: " + TokenCursor::describe(cur.peek()));
    return {f, std::nullopt};
  } catch (const ParseAbort&) {
    return {std::nullopt, cur.diagnostic};
  }
}

Formula mustParseFormula(const std::string& text) {
  FormulaParseResult r = parseFormula(text);
  if (!r.ok()) throw Error("formula parse error: " + r.error->render());
  return *r.formula;
}

// ---------------------------------------------------------------------------
// Printing

namespace {

// Precedence levels: <-> 1, -> 2, | 3, & 4, ~ 5, primaries 6.
int printPrec(FormulaKind k) {
  switch (k) {
    case FormulaKind::Iff: return 1;
    case FormulaKind::Implies: return 2;
    case FormulaKind::Or: return 3;
    case FormulaKind::And: return 4;
    case FormulaKind::Not: return 5;
    default: return 6;
  }
}

void printInto(const Formula& f, int minPrec, std::string& out) {
  int prec = printPrec(f.kind());
  bool parens = prec < minPrec;
  if (parens) out += '(';
  switch (f.kind()) {
    case FormulaKind::Atom:
    case FormulaKind::Name:
      out += f.id();
      break;
    case FormulaKind::Falsum:
      out += "bot";
      break;
    case FormulaKind::Not:
      out += '~';
      printInto(f.left(), 5, out);
      break;
    case FormulaKind::And:
      printInto(f.left(), 4, out);
      out += " & ";
      printInto(f.right(), 5, out);
      break;
    case FormulaKind::Or:
      printInto(f.left(), 3, out);
      out += " | ";
      printInto(f.right(), 4, out);
      break;
    case FormulaKind::Implies:
      printInto(f.left(), 3, out);
      out += " -> ";
      printInto(f.right(), 2, out);
      break;
    case FormulaKind::Iff:
      // Arrow operands stay parenthesized under <-> to keep the two
      // conditional levels visually distinct.
      printInto(f.left(), 3, out);
      out += " <-> ";
      printInto(f.right(), 3, out);
      break;
    case FormulaKind::TrueOf:
      out += "T(";
      printInto(f.left(), 1, out);
      out += ')';
      break;
    case FormulaKind::FalseOf:
      out += "F(";
      printInto(f.left(), 1, out);
      out += ')';
      break;
    case FormulaKind::ValidOf:
      out += "Val(";
      printInto(f.left(), 1, out);
      out += ", ";
      printInto(f.right(), 1, out);
      out += ')';
      break;
  }
  if (parens) out += ')';
}

}  // namespace

std::string printFormula(const Formula& f) {
  std::string out;
  printInto(f, 1, out);
  return out;
}

// ---------------------------------------------------------------------------
// Script parsing

namespace {

bool isStructuralKeyword(const std::string& w) {
  return w == "def" || w == "proof" || w == "sub" || w == "end" || w == "qed" ||
         w == "from" || w == "assume";
}

class ScriptParser {
public:
  explicit ScriptParser(const std::string& text) : toks_(lex(text)), cur_(toks_) {}

  ParseResult run() {
    for (;;) {
      skipBlankLines();
      if (cur_.at(Tok::End)) break;
      if (cur_.atWord("def")) {
        parseDefinition();
      } else if (cur_.atWord("proof")) {
        parseProof();
      } else {
        report(cur_.peek(), "expected 'def' or 'proof' at top level");
        skipLine();
      }
    }
    return std::move(result_);
  }

private:
  void report(const Token& tok, std::string message, std::vector<std::string> expected = {}) {
    result_.errors.push_back({tok.line, tok.col, std::move(message), std::move(expected)});
  }

  void report(Diagnostic d) { result_.errors.push_back(std::move(d)); }

  void skipBlankLines() {
    while (cur_.at(Tok::Newline)) cur_.get();
  }

  void skipLine() {
    while (!cur_.at(Tok::Newline) && !cur_.at(Tok::End)) cur_.get();
    if (cur_.at(Tok::Newline)) cur_.get();
  }

  // Consumes the end-of-line; on junk, reports and skips the rest.
  void endOfLine() {
    if (cur_.at(Tok::Newline)) {
      cur_.get();
      return;
    }
    if (cur_.at(Tok::End)) return;
    report(cur_.peek(), "unexpected " + TokenCursor::describe(cur_.peek()) + " before end of line");
    skipLine();
  }

  std::optional<Formula> formulaOrRecover() {
    try {
      return cur_.formula();
    } catch (const ParseAbort&) {
      report(cur_.diagnostic);
      skipLine();
      return std::nullopt;
    }
  }

  void parseDefinition() {
    cur_.get();  // def
    if (!cur_.at(Tok::Word) || !looksLikeName(cur_.peek().text)) {
      report(cur_.peek(), "definition name must be an uppercase-initial identifier");
      skipLine();
      return;
    }
    Token nameTok = cur_.get();
    if (nameTok.text == "T" || nameTok.text == "F" || nameTok.text == "Val") {
      report(nameTok, "'" + nameTok.text + "' is reserved and cannot be defined");
      skipLine();
      return;
    }
    DefKind kind;
    if (cur_.at(Tok::Assign)) {
      kind = DefKind::Identity;
    } else if (cur_.at(Tok::BiDef)) {
      kind = DefKind::Biconditional;
    } else {
      report(cur_.peek(), "expected ':=' or '<=>' after definition name", {":=", "<=>"});
      skipLine();
      return;
    }
    cur_.get();
    std::optional<Formula> body = formulaOrRecover();
    if (!body) return;
    endOfLine();
    if (result_.document.findDefinition(nameTok.text)) {
      report(nameTok, "duplicate definition of '" + nameTok.text + "'");
      return;
    }
    result_.document.definitions.push_back({nameTok.text, *body, kind});
  }

  struct Frame {
    std::vector<std::string> names;  // labels/ids that die with this frame
    int stepsSeen = 0;
  };

  void parseProof() {
    cur_.get();  // proof
    if (!cur_.at(Tok::Word)) {
      report(cur_.peek(), "expected a proof name");
      skipLine();
      return;
    }
    Token nameTok = cur_.get();
    ProofScript proof;
    proof.name = nameTok.text;
    proof.conclusion = Formula::falsum();  // placeholder until qed
    if (cur_.atWord("from")) {
      cur_.get();
      for (;;) {
        std::optional<Formula> h = formulaOrRecover();
        if (!h) break;
        proof.hypotheses.push_back(*h);
        if (cur_.at(Tok::Comma)) { cur_.get(); continue; }
        break;
      }
    }
    endOfLine();

    // Open subproofs, innermost last; steps land in the innermost one.
    std::vector<SubproofStep> pending;
    std::vector<Frame> frames(1);
    std::set<std::string> everUsed;   // duplicate detection
    std::set<std::string> visible;    // citable right now
    bool sawQed = false;

    auto currentSteps = [&]() -> std::vector<Step>& {
      return pending.empty() ? proof.steps : pending.back().steps;
    };
    auto defineKey = [&](const Token& tok) {
      if (isStructuralKeyword(tok.text)) {
        report(tok, "'" + tok.text + "' is a keyword and cannot label a line");
        return false;
      }
      if (!everUsed.insert(tok.text).second) {
        report(tok, "duplicate label '" + tok.text + "'");
        return false;
      }
      return true;
    };
    auto closeBlock = [&]() {
      Frame frame = std::move(frames.back());
      frames.pop_back();
      for (const std::string& n : frame.names) visible.erase(n);
      SubproofStep block = std::move(pending.back());
      pending.pop_back();
      visible.insert(block.id);
      frames.back().names.push_back(block.id);
      frames.back().stepsSeen++;
      currentSteps().push_back(Step{std::move(block)});
    };

    while (!cur_.at(Tok::End)) {
      skipBlankLines();
      if (cur_.at(Tok::End)) break;
      if (cur_.atWord("sub")) {
        cur_.get();
        if (!cur_.at(Tok::Word)) {
          report(cur_.peek(), "expected a subproof id after 'sub'");
          skipLine();
          continue;
        }
        Token idTok = cur_.get();
        endOfLine();
        defineKey(idTok);
        pending.push_back(SubproofStep{idTok.text, {}});
        frames.push_back(Frame{});
        continue;
      }
      if (cur_.atWord("end")) {
        Token endTok = cur_.get();
        endOfLine();
        if (pending.empty()) {
          report(endTok, "'end' without a matching 'sub'");
          continue;
        }
        if (frames.back().stepsSeen == 0)
          report(endTok, "subproof '" + pending.back().id + "' must begin with an assume line");
        closeBlock();
        continue;
      }
      if (cur_.atWord("qed")) {
        Token qedTok = cur_.get();
        if (!pending.empty()) {
          report(qedTok, "'qed' before 'end': " + std::to_string(pending.size()) +
                             " open subproof(s)");
          while (!pending.empty()) closeBlock();
        }
        std::optional<Formula> conclusion = formulaOrRecover();
        if (conclusion) {
          proof.conclusion = *conclusion;
          endOfLine();
        }
        sawQed = true;
        break;
      }
      if (cur_.atWord("proof") || cur_.atWord("def")) {
        report(cur_.peek(), "missing 'qed' before next top-level item");
        break;
      }
      parseStepLine(proof, pending, frames, visible, defineKey);
    }
    if (!sawQed)
      report(nameTok, "proof '" + proof.name + "' has no qed line");

    for (const ProofScript& p : result_.document.proofs)
      if (p.name == proof.name) {
        report(nameTok, "duplicate proof name '" + proof.name + "'");
        return;
      }
    result_.document.proofs.push_back(std::move(proof));
  }

  template <typename DefineKey>
  void parseStepLine(ProofScript& proof, std::vector<SubproofStep>& pending,
                     std::vector<Frame>& frames, std::set<std::string>& visible,
                     DefineKey& defineKey) {
    auto currentSteps = [&]() -> std::vector<Step>& {
      return pending.empty() ? proof.steps : pending.back().steps;
    };
    if (!cur_.at(Tok::Word)) {
      report(cur_.peek(), "expected a labelled step, 'sub', 'end' or 'qed'");
      skipLine();
      return;
    }
    Token labelTok = cur_.get();
    if (!cur_.at(Tok::Colon)) {
      report(cur_.peek(), "expected ':' after label '" + labelTok.text + "'", {":"});
      skipLine();
      return;
    }
    cur_.get();

    bool keyOk = defineKey(labelTok);
    bool wasFirstInBlock = !pending.empty() && frames.back().stepsSeen == 0;
    frames.back().stepsSeen++;

    if (cur_.atWord("assume")) {
      Token assumeTok = cur_.get();
      std::optional<Formula> f = formulaOrRecover();
      if (!f) return;
      endOfLine();
      if (pending.empty())
        report(assumeTok, "'assume' is only allowed as the first line of a subproof");
      else if (!wasFirstInBlock)
        report(assumeTok, "'assume' must be the first line of its subproof");
      if (keyOk) {
        visible.insert(labelTok.text);
        frames.back().names.push_back(labelTok.text);
      }
      currentSteps().push_back(Step{AssumeStep{labelTok.text, *f}});
      return;
    }

    std::optional<Formula> f = formulaOrRecover();
    if (!f) return;
    if (!cur_.at(Tok::LBracket)) {
      report(cur_.peek(), "expected a justification in brackets", {"["});
      skipLine();
      // The label still becomes citable so later lines don't cascade.
      if (keyOk) {
        visible.insert(labelTok.text);
        frames.back().names.push_back(labelTok.text);
      }
      return;
    }
    cur_.get();
    std::optional<Justification> just = parseJustification(visible);
    endOfLine();
    if (keyOk) {
      visible.insert(labelTok.text);
      frames.back().names.push_back(labelTok.text);
    }
    if (just)
      currentSteps().push_back(Step{DerivedStep{labelTok.text, *f, *just}});
  }

  std::optional<Justification> parseJustification(const std::set<std::string>& visible) {
    if (!cur_.at(Tok::Word)) {
      report(cur_.peek(), "expected a rule name");
      skipLine();
      return std::nullopt;
    }
    Token ruleTok = cur_.get();
    std::optional<RuleId> rule = ruleFromName(ruleTok.text);
    std::vector<Token> args;
    bool argsOk = true;
    if (!cur_.at(Tok::RBracket)) {
      for (;;) {
        if (!cur_.at(Tok::Word)) {
          report(cur_.peek(), "expected a justification argument");
          argsOk = false;
          break;
        }
        args.push_back(cur_.get());
        if (cur_.at(Tok::Comma)) { cur_.get(); continue; }
        break;
      }
    }
    if (argsOk) {
      if (cur_.at(Tok::RBracket)) cur_.get();
      else report(cur_.peek(), "expected ']' to close the justification", {"]"});
    } else {
      skipLine();
    }
    if (!rule) {
      report(ruleTok, "unknown rule '" + ruleTok.text + "'");
      return std::nullopt;
    }
    return buildJustification(*rule, ruleTok, args, visible);
  }

  std::optional<Justification> buildJustification(RuleId rule, const Token& ruleTok,
                                                  const std::vector<Token>& args,
                                                  const std::set<std::string>& visible) {
    Justification just;
    just.rule = rule;
    auto arity = [&](std::size_t n, const char* shape) {
      if (args.size() == n) return true;
      report(ruleTok, std::string(ruleName(rule)) + " expects " + shape + ", got " +
                          std::to_string(args.size()) + " argument(s)");
      return false;
    };
    auto cite = [&](const Token& tok) {
      just.cited.push_back(tok.text);
      if (!visible.count(tok.text))
        report(tok, "citation '" + tok.text + "' is not in scope here");
    };
    switch (rule) {
      case RuleId::Premise:
        if (!arity(0, "no arguments")) return std::nullopt;
        break;
      case RuleId::DefBi:
        if (!arity(1, "a definition name")) return std::nullopt;
        just.defName = args[0].text;
        break;
      case RuleId::Subst: {
        if (!arity(3, "a definition name, fold|unfold, and one citation")) return std::nullopt;
        just.defName = args[0].text;
        if (args[1].text == "fold") just.direction = SubstDirection::Fold;
        else if (args[1].text == "unfold") just.direction = SubstDirection::Unfold;
        else {
          report(args[1], "subst direction must be 'fold' or 'unfold'");
          return std::nullopt;
        }
        cite(args[2]);
        break;
      }
      case RuleId::Bivalence:
        if (!arity(3, "a sentence name and two subproof citations")) return std::nullopt;
        just.caseName = args[0].text;
        cite(args[1]);
        cite(args[2]);
        break;
      case RuleId::Mp:
      case RuleId::IffMp:
      case RuleId::ConjI:
      case RuleId::Ds:
      case RuleId::Explode:
        if (!arity(2, "two citations")) return std::nullopt;
        cite(args[0]);
        cite(args[1]);
        break;
      default:
        // disji, telim, tintro, valelim, rc, reit, cp, valintro
        if (!arity(1, "one citation")) return std::nullopt;
        cite(args[0]);
        break;
    }
    return just;
  }

  std::vector<Token> toks_;
  TokenCursor cur_;
  ParseResult result_;
};

}  // namespace

ParseResult parseScript(const std::string& text) { return ScriptParser(text).run(); }

// ---------------------------------------------------------------------------
// Script printing

namespace {

void printJustification(const Justification& j, std::string& out) {
  out += '[';
  out += ruleName(j.rule);
  std::vector<std::string> args;
  if (j.rule == RuleId::Subst) {
    args.push_back(*j.defName);
    args.push_back(j.direction == SubstDirection::Fold ? "fold" : "unfold");
  } else if (j.rule == RuleId::DefBi) {
    args.push_back(*j.defName);
  } else if (j.rule == RuleId::Bivalence) {
    args.push_back(*j.caseName);
  }
  args.insert(args.end(), j.cited.begin(), j.cited.end());
  for (std::size_t i = 0; i < args.size(); ++i) {
    out += i == 0 ? " " : ", ";
    out += args[i];
  }
  out += ']';
}

void printSteps(const std::vector<Step>& steps, int depth, std::string& out) {
  std::string indent(static_cast<std::size_t>(2 * depth), ' ');
  for (const Step& s : steps) {
    if (s.isSubproof()) {
      out += indent + "sub " + s.subproof().id + "\n";
      printSteps(s.subproof().steps, depth + 1, out);
      out += indent + "end\n";
    } else if (s.isAssume()) {
      out += indent + s.assume().label + ": assume " + printFormula(s.assume().formula) + "\n";
    } else {
      const DerivedStep& d = s.derived();
      out += indent + d.label + ": " + printFormula(d.formula) + " ";
      printJustification(d.just, out);
      out += "\n";
    }
  }
}

}  // namespace

std::string printScript(const Document& doc) {
  std::string out;
  for (const Definition& d : doc.definitions) {
    out += "def " + d.name + (d.kind == DefKind::Identity ? " := " : " <=> ") +
           printFormula(d.body) + "\n";
  }
  for (const ProofScript& p : doc.proofs) {
    if (!out.empty()) out += "\n";
    out += "proof " + p.name;
    for (std::size_t i = 0; i < p.hypotheses.size(); ++i)
      out += (i == 0 ? " from " : ", ") + printFormula(p.hypotheses[i]);
    out += "\n";
    printSteps(p.steps, 1, out);
    out += "qed " + printFormula(p.conclusion) + "\n";
  }
  return out;
}

}  // namespace paralab
