// Recursive-descent parser for the supported C subset.

#include <algorithm>
#include <cctype>
#include <set>

#include "overfix/frontend/frontend.hpp"
#include "overfix/support/text.hpp"

namespace overfix::frontend {

std::string_view kindName(NodeKind k) {
  switch (k) {
    case NodeKind::FunctionDef: return "FunctionDef";
    case NodeKind::VarDecl: return "VarDecl";
    case NodeKind::Assign: return "Assign";
    case NodeKind::BinaryExpr: return "BinaryExpr";
    case NodeKind::UnaryExpr: return "UnaryExpr";
    case NodeKind::Call: return "Call";
    case NodeKind::If: return "If";
    case NodeKind::While: return "While";
    case NodeKind::For: return "For";
    case NodeKind::Return: return "Return";
    case NodeKind::Block: return "Block";
    case NodeKind::IntLiteral: return "IntLiteral";
    case NodeKind::Ident: return "Ident";
    case NodeKind::Cast: return "Cast";
    case NodeKind::StringLiteral: return "StringLiteral";
  }
  return "?";
}

std::size_t AstNode::paramCount() const {
  std::size_t n = 0;
  for (const auto& c : children) {
    if (c && c->kind == NodeKind::VarDecl && c->isParam) ++n;
  }
  return n;
}

const AstNode* AstNode::body() const {
  if (kind != NodeKind::FunctionDef || isPrototype || children.empty()) return nullptr;
  return children.back().get();
}

LineIndex::LineIndex(std::string_view text) {
  starts_.push_back(0);
  for (std::uint32_t i = 0; i < text.size(); ++i) {
    if (text[i] == '\n') starts_.push_back(i + 1);
  }
}

int LineIndex::lineOf(std::uint32_t offset) const {
  auto it = std::upper_bound(starts_.begin(), starts_.end(), offset);
  return static_cast<int>(it - starts_.begin());
}

int LineIndex::columnOf(std::uint32_t offset) const {
  int line = lineOf(offset);
  return static_cast<int>(offset - starts_[static_cast<std::size_t>(line - 1)]) + 1;
}

std::uint32_t LineIndex::lineStart(int line) const {
  if (line < 1 || line > lineCount()) return 0;
  return starts_[static_cast<std::size_t>(line - 1)];
}

const AstNode* SourceUnit::findFunction(std::string_view name) const {
  const AstNode* proto = nullptr;
  for (const auto& n : ast) {
    if (n->kind != NodeKind::FunctionDef || n->name != name) continue;
    if (!n->isPrototype) return n.get();
    proto = n.get();
  }
  return proto;
}

namespace {

const AstNode* findStatement(const AstNode* n, std::uint32_t offset) {
  if (!n) return nullptr;
  if (offset < n->span.begin || offset >= n->span.end) return nullptr;
  for (const auto& c : n->children) {
    if (auto* hit = findStatement(c.get(), offset)) return hit;
  }
  if ((n->kind == NodeKind::Assign || n->kind == NodeKind::VarDecl) && n->span.begin == offset) return n;
  return nullptr;
}

}  // namespace

const AstNode* SourceUnit::statementAt(std::uint32_t offset) const {
  for (const auto& n : ast) {
    if (auto* hit = findStatement(n.get(), offset)) return hit;
  }
  return nullptr;
}

const AstNode* SourceUnit::functionAtLine(int line) const {
  for (const auto& n : ast) {
    if (n->kind != NodeKind::FunctionDef || n->isPrototype) continue;
    if (lines.lineOf(n->span.begin) <= line && line <= lines.lineOf(n->span.end == 0 ? 0 : n->span.end - 1)) {
      return n.get();
    }
  }
  return nullptr;
}

namespace {

enum class Tok { Ident, Keyword, Number, CharLit, String, Punct, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  std::uint32_t begin = 0;
  std::uint32_t end = 0;
};

const std::set<std::string, std::less<>> kKeywords = {
    "int", "char", "short", "unsigned", "signed", "long", "void", "int64_t", "if", "else", "while",
    "for", "return", "static", "const", "extern", "goto", "union", "struct", "typedef", "switch",
    "case", "default", "break", "continue", "do", "enum", "sizeof", "float", "double", "volatile",
    "register", "auto", "inline"};

const std::set<std::string, std::less<>> kUnsupportedKeywords = {
    "goto", "union", "struct", "typedef", "switch", "case", "default", "break", "continue",
    "do", "enum", "sizeof", "float", "double", "long", "signed", "volatile", "register", "auto", "inline"};

class Lexer {
 public:
  Lexer(const std::string& text, const LineIndex& lines, SourceUnit& unit)
      : text_(text), lines_(lines), unit_(unit) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    bool lineStart = true;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '\n') {
        lineStart = true;
        ++pos_;
        continue;
      }
      if (c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v') {
        ++pos_;
        continue;
      }
      if (c == '#' && lineStart) {
        directive();
        continue;
      }
      lineStart = false;
      if (c == '/' && peek(1) == '/') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
        continue;
      }
      if (c == '/' && peek(1) == '*') {
        blockComment();
        continue;
      }
      std::uint32_t begin = static_cast<std::uint32_t>(pos_);
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
          ++pos_;
        std::string word = text_.substr(begin, pos_ - begin);
        Tok kind = kKeywords.count(word) ? Tok::Keyword : Tok::Ident;
        out.push_back({kind, std::move(word), begin, static_cast<std::uint32_t>(pos_)});
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(c))) {
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
          ++pos_;
        out.push_back({Tok::Number, text_.substr(begin, pos_ - begin), begin, static_cast<std::uint32_t>(pos_)});
        continue;
      }
      if (c == '"' || c == '\'') {
        quoted(c);
        out.push_back({c == '"' ? Tok::String : Tok::CharLit, text_.substr(begin, pos_ - begin), begin,
                       static_cast<std::uint32_t>(pos_)});
        continue;
      }
      static const char* kTwo[] = {"<=", ">=", "==", "!=", "&&", "||", "++", "--", "+=", "-=", "*=",
                                   "/=", "%=", "->", "<<", ">>", "&=", "|=", "^="};
      std::string punct(1, c);
      for (const char* two : kTwo) {
        if (c == two[0] && peek(1) == two[1]) {
          punct = two;
          break;
        }
      }
      if (punct.size() == 1 && std::string_view("(){};,=+-*/%<>!&|^~?:[].").find(c) == std::string_view::npos) {
        throw SyntaxError(lines_.lineOf(begin), lines_.columnOf(begin),
                          std::string("unexpected character '") + c + "'");
      }
      pos_ += punct.size();
      out.push_back({Tok::Punct, std::move(punct), begin, static_cast<std::uint32_t>(pos_)});
    }
    out.push_back({Tok::End, "", static_cast<std::uint32_t>(text_.size()), static_cast<std::uint32_t>(text_.size())});
    return out;
  }

 private:
  char peek(std::size_t ahead) const { return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0'; }

  void directive() {
    std::size_t begin = pos_;
    std::size_t nl = text_.find('\n', pos_);
    if (nl == std::string::npos) nl = text_.size();
    std::string line = trim(std::string_view(text_).substr(begin, nl - begin));
    int lineNo = lines_.lineOf(static_cast<std::uint32_t>(begin));
    std::string body = trim(std::string_view(line).substr(1));
    if (startsWith(body, "include")) {
      unit_.includeLines.push_back(lineNo);
    } else if (startsWith(body, "define")) {
      std::string rest = trim(std::string_view(body).substr(6));
      std::string name;
      for (char ch : rest) {
        if (std::isalnum(static_cast<unsigned char>(ch)) || ch == '_') name.push_back(ch);
        else break;
      }
      if (!namedConstantType(name)) {
        throw UnsupportedConstruct(lineNo, 1, "preprocessor macro '" + name + "'");
      }
    } else {
      throw UnsupportedConstruct(lineNo, 1, "preprocessor directive '#" + body.substr(0, body.find(' ')) + "'");
    }
    pos_ = nl;
  }

  void blockComment() {
    std::size_t begin = pos_;
    std::size_t close = text_.find("*/", pos_ + 2);
    if (close == std::string::npos) {
      throw SyntaxError(lines_.lineOf(static_cast<std::uint32_t>(begin)),
                        lines_.columnOf(static_cast<std::uint32_t>(begin)), "unterminated comment");
    }
    std::string inner = trim(std::string_view(text_).substr(begin + 2, close - begin - 2));
    if (inner == "FAULT") unit_.faultAnnotations.push_back(lines_.lineOf(static_cast<std::uint32_t>(begin)));
    pos_ = close + 2;
  }

  void quoted(char q) {
    std::size_t begin = pos_;
    ++pos_;
    while (pos_ < text_.size() && text_[pos_] != q) {
      if (text_[pos_] == '\\') ++pos_;
      if (text_[pos_] == '\n') break;
      ++pos_;
    }
    if (pos_ >= text_.size() || text_[pos_] != q) {
      throw SyntaxError(lines_.lineOf(static_cast<std::uint32_t>(begin)),
                        lines_.columnOf(static_cast<std::uint32_t>(begin)), "unterminated literal");
    }
    ++pos_;
  }

  const std::string& text_;
  const LineIndex& lines_;
  SourceUnit& unit_;
  std::size_t pos_ = 0;
};

using NodePtr = std::unique_ptr<AstNode>;

NodePtr makeNode(NodeKind kind, std::uint32_t begin, std::uint32_t end) {
  auto n = std::make_unique<AstNode>();
  n->kind = kind;
  n->span = {begin, end};
  return n;
}

class Parser {
 public:
  Parser(std::vector<Token> toks, const LineIndex& lines) : toks_(std::move(toks)), lines_(lines) {}

  std::vector<NodePtr> translationUnit() {
    std::vector<NodePtr> out;
    while (cur().kind != Tok::End) out.push_back(topLevel());
    return out;
  }

 private:
  const Token& cur() const { return toks_[pos_]; }
  const Token& ahead(std::size_t n) const { return toks_[std::min(pos_ + n, toks_.size() - 1)]; }
  bool is(std::string_view text) const {
    return (cur().kind == Tok::Punct || cur().kind == Tok::Keyword) && cur().text == text;
  }
  bool isAhead(std::size_t n, std::string_view text) const {
    const Token& t = ahead(n);
    return (t.kind == Tok::Punct || t.kind == Tok::Keyword) && t.text == text;
  }
  std::uint32_t prevEnd() const { return pos_ == 0 ? 0 : toks_[pos_ - 1].end; }

  [[noreturn]] void syntax(const std::string& msg) const {
    throw SyntaxError(lines_.lineOf(cur().begin), lines_.columnOf(cur().begin),
                      msg + (cur().kind == Tok::End ? " at end of input" : " near '" + cur().text + "'"));
  }
  [[noreturn]] void unsupported(const std::string& what) const {
    throw UnsupportedConstruct(lines_.lineOf(cur().begin), lines_.columnOf(cur().begin), what);
  }

  const Token& expect(std::string_view text) {
    if (!is(text)) syntax("expected '" + std::string(text) + "'");
    return toks_[pos_++];
  }

  void rejectKeyword() const {
    if (cur().kind == Tok::Keyword && kUnsupportedKeywords.count(cur().text)) {
      if (cur().text == "long") unsupported("long (use int64_t)");
      unsupported(cur().text);
    }
  }

  bool atTypeStart() const {
    if (cur().kind != Tok::Keyword) return false;
    static const std::set<std::string, std::less<>> kTypeStart = {"int", "char", "short", "unsigned", "void",
                                                                  "int64_t", "static", "const", "extern"};
    if (kTypeStart.count(cur().text)) return true;
    rejectKeyword();
    return false;
  }

  // Parses qualifiers and a base type; returns the type.
  CType baseType() {
    while (is("static") || is("const") || is("extern")) ++pos_;
    rejectKeyword();
    if (cur().kind != Tok::Keyword) syntax("expected a type");
    std::string word = cur().text;
    ++pos_;
    CType t;
    if (word == "unsigned") {
      if (is("int")) ++pos_;
      else if (is("char") || is("short")) unsupported("unsigned " + cur().text);
      rejectKeyword();
      t = CType::UInt;
    } else if (word == "short") {
      if (is("int")) ++pos_;
      t = CType::Short;
    } else if (auto named = typeFromName(word)) {
      t = *named;
    } else {
      syntax("expected a type");
    }
    while (is("const")) ++pos_;
    return t;
  }

  // Consumes pointer stars after a base type.
  CType declaratorPrefix(CType base) {
    CType t = base;
    while (is("*")) {
      ++pos_;
      while (is("const")) ++pos_;
      t = CType::Ptr;
    }
    return t;
  }

  NodePtr topLevel() {
    std::uint32_t begin = cur().begin;
    if (!atTypeStart()) {
      rejectKeyword();
      syntax("expected a declaration");
    }
    CType base = baseType();
    CType type = declaratorPrefix(base);
    if (is("(")) unsupported("function pointer");
    if (cur().kind != Tok::Ident) syntax("expected an identifier");
    std::string name = cur().text;
    std::uint32_t nameBegin = cur().begin;
    ++pos_;
    if (is("(")) return functionRest(begin, type, std::move(name));
    auto decl = varDeclRest(begin, type, std::move(name), nameBegin);
    decl->isGlobal = true;
    return decl;
  }

  NodePtr functionRest(std::uint32_t begin, CType ret, std::string name) {
    auto fn = makeNode(NodeKind::FunctionDef, begin, begin);
    fn->name = std::move(name);
    fn->declType = ret;
    expect("(");
    if (is("void") && isAhead(1, ")")) {
      ++pos_;
    }
    int unnamed = 0;
    while (!is(")")) {
      std::uint32_t pbegin = cur().begin;
      CType pt = declaratorPrefix(baseType());
      auto param = makeNode(NodeKind::VarDecl, pbegin, pbegin);
      param->isParam = true;
      param->declType = pt;
      if (cur().kind == Tok::Ident) {
        param->name = cur().text;
        ++pos_;
      } else {
        param->name = "$param" + std::to_string(unnamed++);
      }
      if (is("[")) unsupported("array");
      if (is("(")) unsupported("function pointer");
      param->span.end = prevEnd();
      fn->children.push_back(std::move(param));
      if (is(",")) {
        ++pos_;
        continue;
      }
      if (is("...")) unsupported("variadic function");
      if (!is(")")) syntax("expected ',' or ')'");
    }
    expect(")");
    if (is(";")) {
      ++pos_;
      fn->isPrototype = true;
      fn->span.end = prevEnd();
      return fn;
    }
    fn->children.push_back(block());
    fn->span.end = prevEnd();
    return fn;
  }

  NodePtr varDeclRest(std::uint32_t begin, CType type, std::string name, std::uint32_t /*nameBegin*/) {
    auto decl = makeNode(NodeKind::VarDecl, begin, begin);
    decl->name = std::move(name);
    decl->declType = type;
    if (type == CType::Void) syntax("variable of type void");
    if (is("[")) unsupported("array");
    if (is("=")) {
      ++pos_;
      decl->children.push_back(expression());
    }
    if (is(",")) unsupported("multiple declarators");
    expect(";");
    decl->span.end = prevEnd();
    return decl;
  }

  NodePtr block() {
    std::uint32_t begin = cur().begin;
    expect("{");
    auto b = makeNode(NodeKind::Block, begin, begin);
    while (!is("}")) {
      if (cur().kind == Tok::End) syntax("unterminated block");
      b->children.push_back(statement());
    }
    expect("}");
    b->span.end = prevEnd();
    return b;
  }

  NodePtr statement() {
    std::uint32_t begin = cur().begin;
    if (is("{")) return block();
    if (is(";")) {
      ++pos_;
      return makeNode(NodeKind::Block, begin, prevEnd());
    }
    if (cur().kind == Tok::Keyword) {
      const std::string& kw = cur().text;
      if (kw == "if") return ifStatement();
      if (kw == "while") return whileStatement();
      if (kw == "for") return forStatement();
      if (kw == "return") {
        ++pos_;
        auto r = makeNode(NodeKind::Return, begin, begin);
        if (!is(";")) r->children.push_back(expression());
        expect(";");
        r->span.end = prevEnd();
        return r;
      }
      if (atTypeStart()) {
        CType t = declaratorPrefix(baseType());
        if (cur().kind != Tok::Ident) syntax("expected an identifier");
        std::string name = cur().text;
        std::uint32_t nameBegin = cur().begin;
        ++pos_;
        if (is("(")) unsupported("nested function declaration");
        return varDeclRest(begin, t, std::move(name), nameBegin);
      }
      rejectKeyword();
      syntax("unexpected keyword");
    }
    auto s = simpleStatement();
    expect(";");
    s->span.end = prevEnd();
    return s;
  }

  // Assignment, increment, or call; no trailing ';'.
  NodePtr simpleStatement() {
    std::uint32_t begin = cur().begin;
    if (is("++") || is("--")) {
      std::string op = cur().text;
      ++pos_;
      if (cur().kind != Tok::Ident) syntax("expected an identifier");
      auto a = makeNode(NodeKind::Assign, begin, begin);
      a->op = op;
      a->children.push_back(identifier());
      a->span.end = prevEnd();
      return a;
    }
    if (cur().kind == Tok::Ident) {
      const Token& next = ahead(1);
      static const std::set<std::string, std::less<>> kAssignOps = {"=", "+=", "-=", "*=", "/=", "%="};
      if (next.kind == Tok::Punct && kAssignOps.count(next.text)) {
        auto a = makeNode(NodeKind::Assign, begin, begin);
        a->children.push_back(identifier());
        a->op = cur().text;
        ++pos_;
        a->children.push_back(expression());
        if (is("=")) unsupported("chained assignment");
        a->span.end = prevEnd();
        return a;
      }
      if (next.kind == Tok::Punct && (next.text == "++" || next.text == "--")) {
        auto a = makeNode(NodeKind::Assign, begin, begin);
        a->children.push_back(identifier());
        a->op = cur().text;
        ++pos_;
        a->span.end = prevEnd();
        return a;
      }
      if (next.kind == Tok::Punct && (next.text == "&=" || next.text == "|=" || next.text == "^=")) {
        ++pos_;
        unsupported("bitwise assignment");
      }
      if (next.kind == Tok::Punct && (next.text == "[" || next.text == "->" || next.text == ".")) {
        ++pos_;
        unsupported(next.text == "[" ? "array" : "struct member access");
      }
    }
    if (is("*")) unsupported("pointer dereference");
    auto e = expression();
    if (e->kind != NodeKind::Call) {
      throw UnsupportedConstruct(lines_.lineOf(begin), lines_.columnOf(begin), "expression statement without call");
    }
    if (is("=")) unsupported("assignment inside expression");
    return e;
  }

  NodePtr ifStatement() {
    std::uint32_t begin = cur().begin;
    expect("if");
    expect("(");
    auto n = makeNode(NodeKind::If, begin, begin);
    n->children.push_back(expression());
    expect(")");
    n->children.push_back(statement());
    if (is("else")) {
      ++pos_;
      n->children.push_back(statement());
    }
    n->span.end = prevEnd();
    return n;
  }

  NodePtr whileStatement() {
    std::uint32_t begin = cur().begin;
    expect("while");
    expect("(");
    auto n = makeNode(NodeKind::While, begin, begin);
    n->children.push_back(expression());
    expect(")");
    n->children.push_back(statement());
    n->span.end = prevEnd();
    return n;
  }

  NodePtr forStatement() {
    std::uint32_t begin = cur().begin;
    expect("for");
    expect("(");
    auto n = makeNode(NodeKind::For, begin, begin);
    if (is(";")) {
      ++pos_;
      n->children.push_back(nullptr);
    } else if (atTypeStart()) {
      std::uint32_t dbegin = cur().begin;
      CType t = declaratorPrefix(baseType());
      if (cur().kind != Tok::Ident) syntax("expected an identifier");
      std::string name = cur().text;
      std::uint32_t nameBegin = cur().begin;
      ++pos_;
      n->children.push_back(varDeclRest(dbegin, t, std::move(name), nameBegin));
    } else {
      auto init = simpleStatement();
      expect(";");
      init->span.end = prevEnd();
      n->children.push_back(std::move(init));
    }
    if (is(";")) {
      n->children.push_back(nullptr);
    } else {
      n->children.push_back(expression());
    }
    expect(";");
    if (is(")")) {
      n->children.push_back(nullptr);
    } else {
      n->children.push_back(simpleStatement());
    }
    expect(")");
    n->children.push_back(statement());
    n->span.end = prevEnd();
    return n;
  }

  NodePtr identifier() {
    if (cur().kind != Tok::Ident) syntax("expected an identifier");
    auto id = makeNode(NodeKind::Ident, cur().begin, cur().end);
    id->name = cur().text;
    ++pos_;
    return id;
  }

  NodePtr binary(NodePtr lhs, std::string op, NodePtr rhs) {
    auto n = makeNode(NodeKind::BinaryExpr, lhs->span.begin, rhs->span.end);
    n->op = std::move(op);
    n->children.push_back(std::move(lhs));
    n->children.push_back(std::move(rhs));
    return n;
  }

  NodePtr expression() { return logicalOr(); }

  NodePtr logicalOr() {
    auto lhs = logicalAnd();
    while (is("||")) {
      ++pos_;
      lhs = binary(std::move(lhs), "||", logicalAnd());
    }
    return lhs;
  }

  NodePtr logicalAnd() {
    auto lhs = equality();
    while (is("&&")) {
      ++pos_;
      lhs = binary(std::move(lhs), "&&", equality());
    }
    if (is("?")) unsupported("conditional operator");
    return lhs;
  }

  NodePtr equality() {
    auto lhs = relational();
    while (is("==") || is("!=")) {
      std::string op = cur().text;
      ++pos_;
      lhs = binary(std::move(lhs), op, relational());
    }
    if (is("|") || is("^") || (is("&") && !isAhead(1, "&"))) unsupported("bitwise operator '" + cur().text + "'");
    return lhs;
  }

  NodePtr relational() {
    auto lhs = additive();
    while (is("<") || is("<=") || is(">") || is(">=")) {
      std::string op = cur().text;
      ++pos_;
      lhs = binary(std::move(lhs), op, additive());
    }
    if (is("<<") || is(">>")) unsupported("shift operator");
    return lhs;
  }

  NodePtr additive() {
    auto lhs = multiplicative();
    while (is("+") || is("-")) {
      std::string op = cur().text;
      ++pos_;
      lhs = binary(std::move(lhs), op, multiplicative());
    }
    return lhs;
  }

  NodePtr multiplicative() {
    auto lhs = unary();
    while (is("*") || is("/") || is("%")) {
      std::string op = cur().text;
      ++pos_;
      lhs = binary(std::move(lhs), op, unary());
    }
    return lhs;
  }

  bool castAhead() const {
    if (!is("(")) return false;
    const Token& t = ahead(1);
    return t.kind == Tok::Keyword &&
           (t.text == "int" || t.text == "char" || t.text == "short" || t.text == "unsigned" ||
            t.text == "int64_t" || t.text == "void" || t.text == "const" || t.text == "long");
  }

  NodePtr unary() {
    std::uint32_t begin = cur().begin;
    if (is("-") || is("+") || is("!") || is("&")) {
      std::string op = cur().text;
      ++pos_;
      auto operand = unary();
      if (op == "&" && operand->kind != NodeKind::Ident) {
        throw UnsupportedConstruct(lines_.lineOf(begin), lines_.columnOf(begin), "address of non-variable");
      }
      auto n = makeNode(NodeKind::UnaryExpr, begin, operand->span.end);
      n->op = op;
      n->children.push_back(std::move(operand));
      return n;
    }
    if (is("~")) unsupported("bitwise operator '~'");
    if (is("*")) unsupported("pointer dereference");
    if (is("++") || is("--")) unsupported("increment inside expression");
    if (castAhead()) {
      ++pos_;
      CType t = declaratorPrefix(baseType());
      expect(")");
      auto operand = unary();
      auto n = makeNode(NodeKind::Cast, begin, operand->span.end);
      n->declType = t;
      n->children.push_back(std::move(operand));
      return n;
    }
    return postfix();
  }

  NodePtr postfix() {
    auto e = primary();
    if (is("(")) {
      if (e->kind != NodeKind::Ident) unsupported("call through expression");
      ++pos_;
      auto call = makeNode(NodeKind::Call, e->span.begin, e->span.begin);
      call->name = e->name;
      while (!is(")")) {
        call->children.push_back(expression());
        if (is(",")) {
          ++pos_;
          continue;
        }
        if (!is(")")) syntax("expected ',' or ')'");
      }
      expect(")");
      call->span.end = prevEnd();
      e = std::move(call);
    }
    if (is("[")) unsupported("array");
    if (is("->") || is(".")) unsupported("struct member access");
    if (is("++") || is("--")) unsupported("increment inside expression");
    return e;
  }

  NodePtr primary() {
    const Token& t = cur();
    if (t.kind == Tok::Ident) return identifier();
    if (t.kind == Tok::Number) return number();
    if (t.kind == Tok::CharLit) return charLiteral();
    if (t.kind == Tok::String) {
      auto n = makeNode(NodeKind::StringLiteral, t.begin, t.end);
      n->text = t.text;
      ++pos_;
      while (cur().kind == Tok::String) {
        n->text += " " + cur().text;
        n->span.end = cur().end;
        ++pos_;
      }
      return n;
    }
    if (is("(")) {
      ++pos_;
      auto e = expression();
      expect(")");
      return e;
    }
    rejectKeyword();
    syntax("expected an expression");
  }

  NodePtr number() {
    const Token& t = cur();
    std::string s = t.text;
    std::string digits = s;
    std::string suffix;
    while (!digits.empty() && std::string_view("uUlL").find(digits.back()) != std::string_view::npos) {
      suffix.insert(suffix.begin(), digits.back());
      digits.pop_back();
    }
    Int value = 0;
    bool ok = !digits.empty();
    if (digits.size() > 2 && digits[0] == '0' && (digits[1] == 'x' || digits[1] == 'X')) {
      for (std::size_t i = 2; i < digits.size() && ok; ++i) {
        char c = static_cast<char>(std::tolower(static_cast<unsigned char>(digits[i])));
        int d = std::isdigit(static_cast<unsigned char>(c)) ? c - '0' : (c >= 'a' && c <= 'f') ? c - 'a' + 10 : -1;
        if (d < 0) ok = false;
        else value = value * 16 + d;
        if (value > kIntInfinity) ok = false;
      }
    } else {
      for (char c : digits) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
          ok = false;
          break;
        }
        value = value * 10 + (c - '0');
        if (value > kIntInfinity) ok = false;
      }
    }
    if (!ok) syntax("malformed integer literal");
    auto n = makeNode(NodeKind::IntLiteral, t.begin, t.end);
    n->value = value;
    n->text = s;
    n->op = suffix;
    ++pos_;
    return n;
  }

  NodePtr charLiteral() {
    const Token& t = cur();
    auto n = makeNode(NodeKind::IntLiteral, t.begin, t.end);
    std::string body = t.text.substr(1, t.text.size() - 2);
    Int v = 0;
    if (body.size() == 1) {
      v = static_cast<unsigned char>(body[0]);
    } else if (body.size() == 2 && body[0] == '\\') {
      switch (body[1]) {
        case 'n': v = 10; break;
        case 't': v = 9; break;
        case '0': v = 0; break;
        case 'r': v = 13; break;
        default: v = static_cast<unsigned char>(body[1]); break;
      }
    } else {
      syntax("unsupported character literal");
    }
    n->value = v;
    n->text = t.text;
    ++pos_;
    return n;
  }

  std::vector<Token> toks_;
  const LineIndex& lines_;
  std::size_t pos_ = 0;
};

}  // namespace

SourceUnit parse(std::string path, std::string text) {
  SourceUnit unit;
  unit.path = std::move(path);
  unit.text = std::move(text);
  unit.lines = LineIndex(unit.text);
  Lexer lexer(unit.text, unit.lines, unit);
  Parser parser(lexer.run(), unit.lines);
  unit.ast = parser.translationUnit();
  return unit;
}

SourceUnit loadText(std::string path, std::string text) { return resolveTypes(parse(std::move(path), std::move(text))); }

SourceUnit loadFile(const std::string& path) { return loadText(path, readFile(path)); }

}  // namespace overfix::frontend
