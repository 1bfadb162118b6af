#include "rca/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <sstream>

namespace rca {

namespace {

// ---------------------------------------------------------------------------
// Lexer

enum class Tok { Ident, Meta, Sym, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  SourceSpan span;
};

bool identChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '\'';
}

class Lexer {
 public:
  Lexer(std::string_view text, std::string file, std::size_t line = 1, std::size_t column = 1)
      : text_(text), file_(std::move(file)), line_(line), column_(column) {}

  const Token& peek() {
    if (!peeked_) {
      peeked_ = scan();
    }
    return *peeked_;
  }

  Token next() {
    Token t = peek();
    peeked_.reset();
    return t;
  }

  bool atSym(std::string_view s) {
    const Token& t = peek();
    return t.kind == Tok::Sym && t.text == s;
  }

  Token expectSym(std::string_view s, std::string_view what) {
    if (!atSym(s)) fail(peek(), "expected " + std::string(what) + ", got " + describe(peek()));
    return next();
  }

  void expectEnd() {
    if (peek().kind != Tok::End) fail(peek(), "unexpected " + describe(peek()));
  }

  // Next whitespace-delimited word, stopping at parentheses. Only valid with nothing peeked.
  Token rawWord() {
    skipSpace();
    Token t;
    t.span = here();
    std::size_t start = pos_;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) && text_[pos_] != '(' &&
           text_[pos_] != ')')
      advance();
    t.text = std::string(text_.substr(start, pos_ - start));
    t.kind = t.text.empty() ? Tok::End : Tok::Ident;
    t.span.length = t.text.size();
    return t;
  }

  [[noreturn]] void fail(const Token& t, const std::string& msg) const { throw ParseError(t.span, msg); }

  static std::string describe(const Token& t) {
    if (t.kind == Tok::End) return "end of input";
    return "'" + t.text + "'";
  }

  const std::string& file() const { return file_; }

 private:
  SourceSpan here() const { return SourceSpan{file_, line_, column_, 0}; }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else if ((static_cast<unsigned char>(text_[pos_]) & 0xC0) != 0x80) {
      ++column_;
    }
    ++pos_;
  }

  void skipSpace() {
    while (pos_ < text_.size()) {
      if (text_[pos_] == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(text_[pos_]))) {
        advance();
      } else {
        break;
      }
    }
  }

  Token scan() {
    skipSpace();
    Token t;
    t.span = here();
    if (pos_ >= text_.size()) return t;
    static const std::pair<std::string_view, std::string_view> symbols[] = {
        {"/\\", "/\\"}, {"\\/", "\\/"}, {"|-", "|-"}, {"<=", "<="}, {"=>", "=>"}, {"(", "("},
        {")", ")"},     {",", ","},     {"⊢", "|-"},  {"∧", "/\\"}, {"∨", "\\/"}, {"≤", "<="}};
    for (const auto& [lexeme, canonical] : symbols) {
      if (text_.substr(pos_, lexeme.size()) == lexeme) {
        for (std::size_t i = 0; i < lexeme.size(); ++i) advance();
        t.kind = Tok::Sym;
        t.text = std::string(canonical);
        t.span.length = t.span.line == line_ ? column_ - t.span.column : 1;
        return t;
      }
    }
    bool meta = text_[pos_] == '?';
    if (meta) advance();
    std::size_t start = pos_;
    while (pos_ < text_.size() && identChar(text_[pos_])) advance();
    if (pos_ == start) {
      t.span.length = 1;
      throw ParseError(t.span, "unexpected character '" + std::string(1, text_[start]) + "'");
    }
    t.kind = meta ? Tok::Meta : Tok::Ident;
    t.text = std::string(text_.substr(start, pos_ - start));
    t.span.length = t.text.size() + (meta ? 1 : 0);
    return t;
  }

  std::string_view text_;
  std::string file_;
  std::size_t pos_ = 0;
  std::size_t line_, column_;
  std::optional<Token> peeked_;
};

SourceSpan cover(const SourceSpan& a, const SourceSpan& b) {
  SourceSpan s = a;
  if (b.line == a.line && b.column + b.length >= a.column) s.length = b.column + b.length - a.column;
  return s;
}

// ---------------------------------------------------------------------------
// Multi-type nodes

TypeTag resultType(const Node& n) { return n.op() == Op::Atom ? TypeTag::L : opInfo(n.op()).result; }

struct Parsed {
  Node node;
  SourceSpan span;
};

class NodeParser {
 public:
  NodeParser(Lexer& lx, ParseMode mode, bool schema) : lx_(lx), mode_(mode), schema_(schema) {}

  Parsed expr() { return level(1); }

  Sequent sequent() {
    Parsed l = expr();
    lx_.expectSym("|-", "'|-'");
    Parsed r = expr();
    if (!schema_ && resultType(l.node) != resultType(r.node))
      throw ParseError(r.span, "sequent is not type-uniform: " + typeName(resultType(l.node)) + " |- " +
                                   typeName(resultType(r.node)));
    return {l.node, r.node};
  }

 private:
  std::optional<Op> binaryAt() {
    const Token& t = lx_.peek();
    if (t.kind == Tok::Sym && t.text == "/\\") return Op::And;
    if (t.kind == Tok::Sym && t.text == "\\/") return Op::Or;
    if (t.kind == Tok::Ident)
      if (auto op = opFromAscii(t.text); op && opInfo(*op).arity == 2) return op;
    return std::nullopt;
  }

  void checkArg(Op op, std::size_t i, const Parsed& a) {
    if (schema_ || a.node.op() == Op::Meta) return;
    const OpInfo& info = opInfo(op);
    TypeTag t = resultType(a.node);
    if (t != info.args[i])
      throw ParseError(a.span, std::string(info.ascii) + " expects " + typeName(info.args[i]) + " argument, got " +
                                   typeName(t));
  }

  Parsed level(int lv) {
    if (lv > 2) return unary();
    Parsed lhs = level(lv + 1);
    while (auto op = binaryAt()) {
      if (opInfo(*op).level != lv) break;
      lx_.next();
      Parsed rhs = level(lv + 1);
      checkArg(*op, 0, lhs);
      checkArg(*op, 1, rhs);
      lhs = {Node::make(*op, lhs.node, rhs.node), cover(lhs.span, rhs.span)};
    }
    return lhs;
  }

  Parsed unary() {
    Token t = lx_.next();
    if (t.kind == Tok::Sym && t.text == "(") {
      Parsed inner = expr();
      Token close = lx_.expectSym(")", "')'");
      return {inner.node, cover(t.span, close.span)};
    }
    if (t.kind == Tok::Meta) {
      if (!schema_) lx_.fail(t, "metavariable ?" + t.text + " outside a rule schema");
      return {Node::meta(t.text), t.span};
    }
    if (t.kind != Tok::Ident) lx_.fail(t, "expected a formula or structure, got " + Lexer::describe(t));
    if (auto op = opFromAscii(t.text)) {
      const OpInfo& info = opInfo(*op);
      if (info.arity == 0) return {Node::make(*op), t.span};
      if (info.arity == 2) lx_.fail(t, "binary connective '" + t.text + "' in prefix position");
      Parsed a = unary();
      checkArg(*op, 0, a);
      return {Node::make(*op, a.node), cover(t.span, a.span)};
    }
    static const std::map<std::string_view, std::pair<Op, Op>> modal = {
        {"boxS", {Op::WhiteI, Op::BlackSqI}},
        {"diaS", {Op::WhiteC, Op::BlackDiaC}},
        {"boxL", {Op::BoxC, Op::BulletC}},
        {"diaL", {Op::DiaI, Op::BulletI}}};
    if (auto it = modal.find(t.text); it != modal.end()) {
      if (mode_ != ParseMode::Single) lx_.fail(t, "modal symbol '" + t.text + "' is only available in single mode");
      Parsed a = unary();
      if (!schema_ && a.node.op() != Op::Meta && resultType(a.node) != TypeTag::L)
        throw ParseError(a.span, t.text + " expects L argument, got " + typeName(resultType(a.node)));
      return {Node::make(it->second.first, Node::make(it->second.second, a.node)), cover(t.span, a.span)};
    }
    if (t.text.rfind("s.", 0) == 0) lx_.fail(t, "unknown structural connective '" + t.text + "'");
    if (!std::isalpha(static_cast<unsigned char>(t.text[0])))
      lx_.fail(t, "atom names must start with a letter: '" + t.text + "'");
    return {Node::atom(t.text), t.span};
  }

  Lexer& lx_;
  ParseMode mode_;
  bool schema_;
};

// ---------------------------------------------------------------------------
// Single-type terms

class TermParser {
 public:
  explicit TermParser(Lexer& lx) : lx_(lx) {}

  Term expr() {
    Term lhs = meet();
    while (lx_.atSym("\\/")) {
      lx_.next();
      lhs = Term::join(lhs, meet());
    }
    return lhs;
  }

  Inequality inequality() {
    Term l = expr();
    lx_.expectSym("<=", "'<='");
    return {l, expr()};
  }

 private:
  Term meet() {
    Term lhs = unary();
    while (lx_.atSym("/\\")) {
      lx_.next();
      lhs = Term::meet(lhs, unary());
    }
    return lhs;
  }

  Term unary() {
    Token t = lx_.next();
    if (t.kind == Tok::Sym && t.text == "(") {
      Term inner = expr();
      lx_.expectSym(")", "')'");
      return inner;
    }
    if (t.kind != Tok::Ident) lx_.fail(t, "expected a term, got " + Lexer::describe(t));
    if (t.text == "top") return Term::top();
    if (t.text == "bot") return Term::bottom();
    if (t.text == "boxS") return Term::boxS(unary());
    if (t.text == "diaS") return Term::diaS(unary());
    if (t.text == "boxL") return Term::boxL(unary());
    if (t.text == "diaL") return Term::diaL(unary());
    if (opFromAscii(t.text)) lx_.fail(t, "'" + t.text + "' is not a single-type connective");
    if (!std::isalpha(static_cast<unsigned char>(t.text[0])))
      lx_.fail(t, "variable names must start with a letter: '" + t.text + "'");
    return Term::var(t.text);
  }

  Lexer& lx_;
};

int termLevel(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Join: return 1;
    case Term::Kind::Meet: return 2;
    default: return 3;
  }
}

void printTermTo(std::ostream& os, const Term& t) {
  auto child = [&](const Term& c, bool paren) {
    if (paren) os << '(';
    printTermTo(os, c);
    if (paren) os << ')';
  };
  switch (t.kind()) {
    case Term::Kind::Var: os << t.name(); return;
    case Term::Kind::Top: os << "top"; return;
    case Term::Kind::Bottom: os << "bot"; return;
    case Term::Kind::Meet:
    case Term::Kind::Join: {
      int lv = termLevel(t);
      child(t.arg(0), termLevel(t.arg(0)) < lv);
      os << (t.kind() == Term::Kind::Meet ? " /\\ " : " \\/ ");
      child(t.arg(1), termLevel(t.arg(1)) <= lv);
      return;
    }
    case Term::Kind::BoxS: os << "boxS "; break;
    case Term::Kind::DiaS: os << "diaS "; break;
    case Term::Kind::BoxL: os << "boxL "; break;
    case Term::Kind::DiaL: os << "diaL "; break;
  }
  child(t.arg(0), termLevel(t.arg(0)) < 3);
}

int nodeLevel(const Node& n) {
  if (n.arity() == 2) return opInfo(n.op()).level;
  return 3;
}

void printNodeTo(std::ostream& os, const Node& n, Glyphs g) {
  auto glyph = [&](Op op) { return g == Glyphs::Ascii ? opInfo(op).ascii : opInfo(op).unicode; };
  auto child = [&](const Node& c, bool paren) {
    if (paren) os << '(';
    printNodeTo(os, c, g);
    if (paren) os << ')';
  };
  if (n.op() == Op::Atom) {
    os << n.name();
  } else if (n.op() == Op::Meta) {
    os << '?' << n.name();
  } else if (n.arity() == 0) {
    os << glyph(n.op());
  } else if (n.arity() == 1) {
    os << glyph(n.op()) << ' ';
    child(n.arg(0), nodeLevel(n.arg(0)) < 3);
  } else {
    int lv = nodeLevel(n);
    child(n.arg(0), nodeLevel(n.arg(0)) < lv);
    os << ' ' << glyph(n.op()) << ' ';
    child(n.arg(1), nodeLevel(n.arg(1)) <= lv);
  }
}

// ---------------------------------------------------------------------------
// Line-oriented files

struct Line {
  std::size_t number;
  std::string_view text;  // comment stripped, trimmed
  std::size_t column;     // of the first kept character
};

std::vector<Line> splitLines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 1, start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    if (auto h = raw.find('#'); h != std::string_view::npos) raw = raw.substr(0, h);
    std::size_t b = 0;
    while (b < raw.size() && std::isspace(static_cast<unsigned char>(raw[b]))) ++b;
    std::size_t e = raw.size();
    while (e > b && std::isspace(static_cast<unsigned char>(raw[e - 1]))) --e;
    out.push_back({number, raw.substr(b, e - b), b + 1});
    ++number;
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

[[noreturn]] void failAt(const std::string& file, const Line& l, const std::string& msg, std::size_t offset = 0,
                         std::size_t length = 0) {
  throw ParseError(SourceSpan{file, l.number, l.column + offset, length ? length : l.text.size() - offset}, msg);
}

std::vector<std::string_view> words(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::optional<std::size_t> toIndex(std::string_view s) {
  std::size_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) return std::nullopt;
  return v;
}

// "key: value" header; nullopt if the line has no such shape.
std::optional<std::pair<std::string_view, std::string_view>> header(std::string_view line) {
  auto c = line.find(':');
  if (c == std::string_view::npos) return std::nullopt;
  std::string_view key = line.substr(0, c), value = line.substr(c + 1);
  while (!key.empty() && std::isspace(static_cast<unsigned char>(key.back()))) key.remove_suffix(1);
  while (!value.empty() && std::isspace(static_cast<unsigned char>(value.front()))) value.remove_prefix(1);
  return std::pair{key, value};
}

void checkFormat(const std::string& file, const Line& l, std::string_view value) {
  if (value != "1") failAt(file, l, "unsupported format version '" + std::string(value) + "'");
}

std::size_t offsetOf(const Line& l, std::string_view part) {
  return static_cast<std::size_t>(part.data() - l.text.data());
}

}  // namespace

// ---------------------------------------------------------------------------

Term parseTerm(std::string_view text, const std::string& file) {
  Lexer lx(text, file);
  Term t = TermParser(lx).expr();
  lx.expectEnd();
  return t;
}

std::string printTerm(const Term& t) {
  std::ostringstream os;
  printTermTo(os, t);
  return os.str();
}

Inequality parseInequality(std::string_view text, const std::string& file) {
  Lexer lx(text, file);
  Inequality i = TermParser(lx).inequality();
  lx.expectEnd();
  return i;
}

QuasiInequality parseQuasiInequality(std::string_view text, const std::string& file) {
  Lexer lx(text, file);
  TermParser tp(lx);
  std::vector<Inequality> items{tp.inequality()};
  bool arrow = false;
  while (true) {
    if (lx.atSym(",") && !arrow) {
      lx.next();
      items.push_back(tp.inequality());
    } else if (lx.atSym("=>") && !arrow) {
      lx.next();
      arrow = true;
      items.push_back(tp.inequality());
    } else {
      break;
    }
  }
  lx.expectEnd();
  if (!arrow && items.size() > 1) throw ParseError(SourceSpan{file, 1, 1, text.size()}, "premises need '=>'");
  QuasiInequality q{{}, items.back()};
  items.pop_back();
  q.premises = std::move(items);
  return q;
}

std::string printInequality(const Inequality& i) { return printTerm(i.lhs) + " <= " + printTerm(i.rhs); }

std::string printQuasiInequality(const QuasiInequality& q) {
  std::string out;
  for (std::size_t i = 0; i < q.premises.size(); ++i) out += (i ? ", " : "") + printInequality(q.premises[i]);
  if (!q.premises.empty()) out += " => ";
  return out + printInequality(q.conclusion);
}

Node parseNode(std::string_view text, ParseMode mode, const std::string& file) {
  Lexer lx(text, file);
  Node n = NodeParser(lx, mode, false).expr().node;
  lx.expectEnd();
  return n;
}

Sequent parseSequent(std::string_view text, ParseMode mode, const std::string& file) {
  Lexer lx(text, file);
  Sequent s = NodeParser(lx, mode, false).sequent();
  lx.expectEnd();
  return s;
}

Sequent parseSchema(std::string_view text) {
  Lexer lx(text, "<schema>");
  Sequent s = NodeParser(lx, ParseMode::Multi, true).sequent();
  lx.expectEnd();
  return s;
}

std::string printNode(const Node& n, Glyphs g) {
  std::ostringstream os;
  printNodeTo(os, n, g);
  return os.str();
}

std::string printSequent(const Sequent& s, Glyphs g) {
  return printNode(s.lhs, g) + (g == Glyphs::Ascii ? " |- " : " ⊢ ") + printNode(s.rhs, g);
}

// ---------------------------------------------------------------------------
// Proofs

namespace {

ProofTree parseProofNode(Lexer& lx, ParseMode mode) {
  lx.expectSym("(", "'(' opening a proof node");
  Token kw = lx.next();
  if (kw.kind != Tok::Ident || kw.text != "rule") lx.fail(kw, "expected 'rule', got " + Lexer::describe(kw));
  Token id = lx.rawWord();
  if (id.kind == Tok::End) lx.fail(id, "expected a rule name");
  ProofTree t;
  t.rule = id.text;
  t.conclusion = NodeParser(lx, mode, false).sequent();
  while (lx.atSym("(")) t.premises.push_back(parseProofNode(lx, mode));
  lx.expectSym(")", "')' closing the proof node");
  return t;
}

}  // namespace

Proof parseProof(std::string_view text, const std::string& file) {
  Proof p;
  ParseMode mode = ParseMode::Multi;
  bool sawCalc = false;
  std::vector<std::pair<Line, std::string_view>> hypothesisLines;
  std::size_t bodyOffset = std::string_view::npos, bodyLine = 0, bodyColumn = 1;
  for (const Line& l : splitLines(text)) {
    if (l.text.empty()) continue;
    if (l.text.front() == '(') {
      bodyOffset = static_cast<std::size_t>(l.text.data() - text.data());
      bodyLine = l.number;
      bodyColumn = l.column;
      break;
    }
    auto h = header(l.text);
    if (!h) failAt(file, l, "expected a 'key: value' header or a proof node");
    auto [key, value] = *h;
    if (key == "format") {
      checkFormat(file, l, value);
    } else if (key == "calc") {
      auto c = parseCalculus(value);
      if (!c) failAt(file, l, "unknown calculus '" + std::string(value) + "'", offsetOf(l, value));
      p.calc = *c;
      sawCalc = true;
    } else if (key == "mode") {
      if (value == "multi") mode = ParseMode::Multi;
      else if (value == "single") mode = ParseMode::Single;
      else failAt(file, l, "mode must be 'multi' or 'single'", offsetOf(l, value));
    } else if (key == "name") {
      p.name = std::string(value);
    } else if (key == "hypothesis") {
      hypothesisLines.emplace_back(l, value);
    } else {
      failAt(file, l, "unknown header '" + std::string(key) + "'", 0, key.size());
    }
  }
  if (!sawCalc) throw ParseError(SourceSpan{file, 1, 1, 0}, "missing 'calc:' header");
  for (const auto& [l, value] : hypothesisLines) {
    Lexer lx(value, file, l.number, l.column + offsetOf(l, value));
    p.hypotheses.push_back(NodeParser(lx, mode, false).sequent());
    lx.expectEnd();
  }
  if (bodyOffset == std::string_view::npos) throw ParseError(SourceSpan{file, 1, 1, 0}, "missing proof body");
  Lexer lx(text.substr(bodyOffset), file, bodyLine, bodyColumn);
  p.tree = parseProofNode(lx, mode);
  lx.expectEnd();
  return p;
}

std::string printProofTree(const ProofTree& t, std::size_t indent) {
  std::string out(indent * 2, ' ');
  out += "(rule " + t.rule + " " + printSequent(t.conclusion);
  for (const auto& p : t.premises) out += "\n" + printProofTree(p, indent + 1);
  return out + ")";
}

std::string printProof(const Proof& p) {
  std::string out = "format: 1\ncalc: " + calculusName(p.calc) + "\nmode: multi\n";
  if (!p.name.empty()) out += "name: " + p.name + "\n";
  for (const auto& h : p.hypotheses) out += "hypothesis: " + printSequent(h) + "\n";
  return out + printProofTree(p.tree) + "\n";
}

// ---------------------------------------------------------------------------
// Contexts

ContextFile parseContextFile(std::string_view text, const std::string& file) {
  auto lines = splitLines(text);
  std::size_t i = 0;
  auto skipBlank = [&] {
    while (i < lines.size() && lines[i].text.empty()) ++i;
  };
  skipBlank();
  if (i < lines.size())
    if (auto h = header(lines[i].text); h && h->first == "format") {
      checkFormat(file, lines[i], h->second);
      ++i;
      skipBlank();
    }
  if (i == lines.size()) throw ParseError(SourceSpan{file, 1, 1, 0}, "missing 'context n m' line");
  const Line& head = lines[i];
  auto w = words(head.text);
  if (w.size() != 3 || w[0] != "context") failAt(file, head, "expected 'context <objects> <features>'");
  auto n = toIndex(w[1]), m = toIndex(w[2]);
  if (!n) failAt(file, head, "object count must be a number", offsetOf(head, w[1]), w[1].size());
  if (!m) failAt(file, head, "feature count must be a number", offsetOf(head, w[2]), w[2].size());
  ++i;
  BinaryRelation inc(*n, *m);
  for (std::size_t a = 0; a < *n; ++a) {
    skipBlank();
    if (i == lines.size())
      throw ParseError(SourceSpan{file, lines.back().number, 1, 0},
                       "expected " + std::to_string(*n) + " incidence rows, got " + std::to_string(a));
    const Line& row = lines[i++];
    std::string compact;
    for (char c : row.text)
      if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
    if (compact.size() != *m)
      failAt(file, row, "row has " + std::to_string(compact.size()) + " entries, expected " + std::to_string(*m));
    for (std::size_t x = 0; x < *m; ++x) {
      char c = compact[x];
      if (c == 'X' || c == 'x' || c == '1') inc.set(a, x);
      else if (c != '.' && c != '0') failAt(file, row, "incidence entries are '.' or 'X'");
    }
  }
  ContextFile out{FormalContext(std::move(inc)), std::nullopt};
  skipBlank();
  if (i == lines.size()) return out;
  if (lines[i].text != "partition:") failAt(file, lines[i], "expected 'partition:' or end of file");
  const Line& partLine = lines[i++];
  std::vector<std::vector<std::size_t>> classes;
  for (; i < lines.size(); ++i) {
    if (lines[i].text.empty()) continue;
    std::vector<std::size_t> cls;
    for (auto word : words(lines[i].text)) {
      auto v = toIndex(word);
      if (!v || *v >= *n)
        failAt(file, lines[i], "object index out of range: '" + std::string(word) + "'", offsetOf(lines[i], word),
               word.size());
      cls.push_back(*v);
    }
    classes.push_back(std::move(cls));
  }
  try {
    out.partition = Partition(*n, std::move(classes));
  } catch (const StructuralError& e) {
    failAt(file, partLine, e.what());
  }
  return out;
}

FormalContext parseContext(std::string_view text, const std::string& file) {
  return parseContextFile(text, file).ctx;
}

RoughFormalContext parseRoughContext(std::string_view text, const std::string& file) {
  ContextFile f = parseContextFile(text, file);
  if (!f.partition) throw ParseError(SourceSpan{file, 1, 1, 0}, "rough context needs a 'partition:' block");
  return RoughFormalContext(std::move(f.ctx), std::move(*f.partition));
}

std::string printContext(const FormalContext& ctx, const Partition* partition) {
  std::ostringstream os;
  os << "format: 1\ncontext " << ctx.objectCount() << ' ' << ctx.featureCount() << '\n';
  for (std::size_t a = 0; a < ctx.objectCount(); ++a) {
    for (std::size_t x = 0; x < ctx.featureCount(); ++x) os << (ctx.incidence().contains(a, x) ? 'X' : '.');
    os << '\n';
  }
  if (partition) {
    os << "partition:\n";
    for (const auto& cls : partition->classes()) {
      for (std::size_t k = 0; k < cls.size(); ++k) os << (k ? " " : "") << cls[k];
      os << '\n';
    }
  }
  return os.str();
}

FormalContext parseBurmeister(std::string_view text, const std::string& file) {
  std::vector<Line> lines;
  // Names may contain '#', so split without comment stripping.
  {
    std::size_t number = 1, start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      std::string_view raw = text.substr(start, end - start);
      while (!raw.empty() && (raw.back() == '\r' || raw.back() == ' ')) raw.remove_suffix(1);
      lines.push_back({number++, raw, 1});
      if (end == text.size()) break;
      start = end + 1;
    }
  }
  std::size_t i = 0;
  if (lines.empty() || lines[0].text != "B") throw ParseError(SourceSpan{file, 1, 1, 1}, "expected 'B' header");
  ++i;
  // An optional name line, then the two counts.
  std::optional<std::size_t> n, m;
  for (std::size_t k = i; k + 1 < lines.size() && k <= i + 2; ++k) {
    auto a = toIndex(lines[k].text), b = toIndex(lines[k + 1].text);
    if (a && b) {
      n = a;
      m = b;
      i = k + 2;
      break;
    }
  }
  if (!n) throw ParseError(SourceSpan{file, 2, 1, 0}, "expected object and attribute counts");
  while (i < lines.size() && lines[i].text.empty()) ++i;
  i += *n + *m;  // object and attribute names
  BinaryRelation inc(*n, *m);
  for (std::size_t a = 0; a < *n; ++a, ++i) {
    if (i >= lines.size())
      throw ParseError(SourceSpan{file, lines.back().number, 1, 0}, "missing incidence row " + std::to_string(a + 1));
    const Line& row = lines[i];
    if (row.text.size() != *m)
      failAt(file, row, "row has " + std::to_string(row.text.size()) + " entries, expected " + std::to_string(*m));
    for (std::size_t x = 0; x < *m; ++x) {
      char c = row.text[x];
      if (c == 'X' || c == 'x') inc.set(a, x);
      else if (c != '.') failAt(file, row, "incidence entries are '.' or 'X'", x, 1);
    }
  }
  return FormalContext(std::move(inc));
}

// ---------------------------------------------------------------------------
// Algebras

namespace {

struct Carrier {
  std::vector<std::string> names;
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  Line declared;
  std::optional<Line> ordered;  // last leq line, where order errors are reported
};

struct AlgebraText {
  std::optional<AlgebraKind> kind;
  std::map<std::string, Carrier, std::less<>> carriers;
  std::map<std::string, std::pair<Line, std::vector<std::string_view>>, std::less<>> maps;
};

AlgebraText readAlgebra(std::string_view text, const std::string& file) {
  AlgebraText a;
  std::vector<std::pair<Line, std::string_view>> leqLines;
  for (const Line& l : splitLines(text)) {
    if (l.text.empty()) continue;
    auto h = header(l.text);
    if (!h) failAt(file, l, "expected 'key: value'");
    auto [key, value] = *h;
    auto kw = words(key);
    if (key == "format") {
      checkFormat(file, l, value);
    } else if (key == "kind") {
      if (value == "modal") a.kind = AlgebraKind::Modal;
      else if (value == "heterogeneous") a.kind = AlgebraKind::Heterogeneous;
      else failAt(file, l, "kind must be 'modal' or 'heterogeneous'", offsetOf(l, value));
    } else if (kw.size() == 2 && kw[0] == "carrier") {
      Carrier c;
      c.declared = l;
      for (auto w : words(value)) {
        if (std::find(c.names.begin(), c.names.end(), w) != c.names.end())
          failAt(file, l, "duplicate element '" + std::string(w) + "'", offsetOf(l, w), w.size());
        c.names.emplace_back(w);
      }
      if (c.names.empty()) failAt(file, l, "a carrier needs at least one element");
      if (!a.carriers.emplace(std::string(kw[1]), std::move(c)).second)
        failAt(file, l, "carrier '" + std::string(kw[1]) + "' declared twice");
    } else if (kw.size() == 2 && kw[0] == "leq") {
      leqLines.emplace_back(l, value);
    } else if (kw.size() == 2 && kw[0] == "map") {
      if (!a.maps.emplace(std::string(kw[1]), std::pair{l, words(value)}).second)
        failAt(file, l, "map '" + std::string(kw[1]) + "' given twice");
    } else {
      failAt(file, l, "unknown line '" + std::string(key) + "'", 0, key.size());
    }
  }
  for (const auto& [l, value] : leqLines) {
    std::string_view name = words(header(l.text)->first)[1];
    auto it = a.carriers.find(name);
    if (it == a.carriers.end()) failAt(file, l, "leq for undeclared carrier '" + std::string(name) + "'");
    auto& names = it->second.names;
    it->second.ordered = l;
    auto index = [&](std::string_view s, std::string_view whole) {
      auto p = std::find(names.begin(), names.end(), s);
      if (p == names.end())
        failAt(file, l, "unknown element '" + std::string(s) + "'", offsetOf(l, whole), whole.size());
      return static_cast<std::size_t>(p - names.begin());
    };
    for (auto w : words(value)) {
      auto pos = w.find("<=");
      if (pos == std::string_view::npos) failAt(file, l, "expected 'a<=b'", offsetOf(l, w), w.size());
      it->second.covers.emplace_back(index(w.substr(0, pos), w), index(w.substr(pos + 2), w));
    }
  }
  return a;
}

const Carrier& carrier(const AlgebraText& a, std::string_view name, const std::string& file) {
  auto it = a.carriers.find(name);
  if (it == a.carriers.end()) throw ParseError(SourceSpan{file, 1, 1, 0}, "missing carrier '" + std::string(name) + "'");
  return it->second;
}

Lattice buildLattice(const Carrier& c, const std::string& file) {
  const std::size_t n = c.names.size();
  std::vector<std::uint8_t> leq(n * n, 0);
  for (std::size_t a = 0; a < n; ++a) leq[a * n + a] = 1;
  for (auto [a, b] : c.covers) leq[a * n + b] = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t a = 0; a < n; ++a)
      if (leq[a * n + k])
        for (std::size_t b = 0; b < n; ++b)
          if (leq[k * n + b]) leq[a * n + b] = 1;
  try {
    return Lattice::fromOrder(n, leq);
  } catch (const StructuralError& e) {
    failAt(file, c.ordered.value_or(c.declared), e.what());
  }
}

std::vector<std::size_t> readMap(const AlgebraText& a, std::string_view name, const Carrier& from, const Carrier& to,
                                 const std::string& file) {
  auto it = a.maps.find(name);
  if (it == a.maps.end()) throw ParseError(SourceSpan{file, 1, 1, 0}, "missing map '" + std::string(name) + "'");
  const auto& [l, values] = it->second;
  if (values.size() != from.names.size())
    failAt(file, l,
           "map " + std::string(name) + " has " + std::to_string(values.size()) + " values, expected " +
               std::to_string(from.names.size()));
  std::vector<std::size_t> out;
  for (auto v : values) {
    auto p = std::find(to.names.begin(), to.names.end(), v);
    if (p == to.names.end()) failAt(file, l, "unknown element '" + std::string(v) + "'", offsetOf(l, v), v.size());
    out.push_back(static_cast<std::size_t>(p - to.names.begin()));
  }
  return out;
}

std::string elementNames(std::size_t n, const std::string& prefix) {
  std::string out;
  for (std::size_t i = 0; i < n; ++i) out += (i ? " " : "") + prefix + std::to_string(i);
  return out;
}

std::string orderLine(const std::string& carrierName, const Lattice& l, const std::string& prefix) {
  std::string out = "leq " + carrierName + ":";
  for (auto [a, b] : l.hasseEdges()) out += " " + prefix + std::to_string(a) + "<=" + prefix + std::to_string(b);
  return out + "\n";
}

std::string mapLine(const std::string& name, const std::vector<std::size_t>& values, const std::string& prefix) {
  std::string out = "map " + name + ":";
  for (auto v : values) out += " " + prefix + std::to_string(v);
  return out + "\n";
}

}  // namespace

AlgebraKind detectAlgebraKind(std::string_view text, const std::string& file) {
  for (const Line& l : splitLines(text)) {
    auto h = header(l.text);
    if (h && h->first == "kind") {
      if (h->second == "modal") return AlgebraKind::Modal;
      if (h->second == "heterogeneous") return AlgebraKind::Heterogeneous;
      failAt(file, l, "kind must be 'modal' or 'heterogeneous'", offsetOf(l, h->second));
    }
  }
  throw ParseError(SourceSpan{file, 1, 1, 0}, "missing 'kind:' header");
}

ModalLattice parseModalAlgebra(std::string_view text, const std::string& file) {
  AlgebraText a = readAlgebra(text, file);
  if (a.kind && *a.kind != AlgebraKind::Modal) throw ParseError(SourceSpan{file, 1, 1, 0}, "not a modal algebra file");
  const Carrier& c = carrier(a, "L", file);
  Lattice l = buildLattice(c, file);
  auto bs = readMap(a, "boxS", c, c, file), ds = readMap(a, "diaS", c, c, file);
  auto bl = readMap(a, "boxL", c, c, file), dl = readMap(a, "diaL", c, c, file);
  return ModalLattice(std::move(l), bs, ds, bl, dl);
}

std::string printModalAlgebra(const ModalLattice& m) {
  std::string out = "format: 1\nkind: modal\ncarrier L: " + elementNames(m.size(), "e") + "\n";
  out += orderLine("L", m.lattice(), "e");
  out += mapLine("boxS", m.map(ModalOp::BoxS), "e");
  out += mapLine("diaS", m.map(ModalOp::DiaS), "e");
  out += mapLine("boxL", m.map(ModalOp::BoxL), "e");
  out += mapLine("diaL", m.map(ModalOp::DiaL), "e");
  return out;
}

HeterogeneousAlgebra parseHeteroAlgebra(std::string_view text, const std::string& file) {
  AlgebraText a = readAlgebra(text, file);
  if (a.kind && *a.kind != AlgebraKind::Heterogeneous)
    throw ParseError(SourceSpan{file, 1, 1, 0}, "not a heterogeneous algebra file");
  const Carrier &L = carrier(a, "L", file), &SI = carrier(a, "S_I", file), &SC = carrier(a, "S_C", file),
                &LI = carrier(a, "L_I", file), &LC = carrier(a, "L_C", file);
  HeterogeneousAlgebra h{buildLattice(L, file),
                         buildLattice(SI, file),
                         buildLattice(SC, file),
                         buildLattice(LI, file),
                         buildLattice(LC, file),
                         readMap(a, "wI", SI, L, file),
                         readMap(a, "bsI", L, SI, file),
                         readMap(a, "wC", SC, L, file),
                         readMap(a, "bdC", L, SC, file),
                         readMap(a, "bI", L, LI, file),
                         readMap(a, "dI", LI, L, file),
                         readMap(a, "bC", L, LC, file),
                         readMap(a, "boxC", LC, L, file)};
  return h;
}

std::string printHeteroAlgebra(const HeterogeneousAlgebra& h) {
  std::string out = "format: 1\nkind: heterogeneous\n";
  const std::pair<const char*, const Lattice*> carriers[] = {
      {"L", &h.L}, {"S_I", &h.SI}, {"S_C", &h.SC}, {"L_I", &h.LI}, {"L_C", &h.LC}};
  const char* prefix[] = {"e", "si", "sc", "li", "lc"};
  for (int k = 0; k < 5; ++k) {
    out += std::string("carrier ") + carriers[k].first + ": " + elementNames(carriers[k].second->size(), prefix[k]) + "\n";
    out += orderLine(carriers[k].first, *carriers[k].second, prefix[k]);
  }
  out += mapLine("wI", h.whiteI, "e");
  out += mapLine("bsI", h.blackSqI, "si");
  out += mapLine("wC", h.whiteC, "e");
  out += mapLine("bdC", h.blackDiaC, "sc");
  out += mapLine("bI", h.bulletI, "li");
  out += mapLine("dI", h.whDiaI, "e");
  out += mapLine("bC", h.bulletC, "lc");
  out += mapLine("boxC", h.whBoxC, "e");
  return out;
}

std::string latticeToDot(const Lattice& l, const std::vector<std::string>& labels) {
  std::ostringstream os;
  os << "digraph lattice {\n  rankdir=BT;\n  node [shape=circle];\n";
  for (std::size_t i = 0; i < l.size(); ++i) {
    std::string label = i < labels.size() ? labels[i] : std::to_string(i);
    std::string escaped;
    for (char c : label) {
      if (c == '"' || c == '\\') escaped += '\\';
      escaped += c;
    }
    os << "  n" << i << " [label=\"" << escaped << "\"];\n";
  }
  for (auto [a, b] : l.hasseEdges()) os << "  n" << a << " -> n" << b << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace rca
