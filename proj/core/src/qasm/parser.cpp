// Copyright 2026 The qcc Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "qcc/qasm/parser.hpp"

#include <cctype>
#include <cmath>
#include <set>
#include <unordered_map>

#include "qcc/ir/gate_table.hpp"

namespace qcc::qasm {
namespace {

enum class Tok { Ident, Number, String, Symbol, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  SourceSpan span;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space_and_comments();
      Token t;
      t.span = {line_, col_, 0};
      if (pos_ >= src_.size()) {
        t.kind = Tok::End;
        out.push_back(t);
        return out;
      }
      const char c = src_[pos_];
      const std::size_t start = pos_;
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
                src_[pos_] == '_')) {
          advance();
        }
        t.kind = Tok::Ident;
      } else if (std::isdigit(static_cast<unsigned char>(c)) ||
                 (c == '.' && pos_ + 1 < src_.size() &&
                  std::isdigit(static_cast<unsigned char>(src_[pos_ + 1])))) {
        lex_number();
        t.kind = Tok::Number;
      } else if (c == '"') {
        advance();
        while (pos_ < src_.size() && src_[pos_] != '"' && src_[pos_] != '\n') {
          advance();
        }
        if (pos_ >= src_.size() || src_[pos_] != '"') {
          throw SyntaxError("unterminated string literal", t.span);
        }
        advance();
        t.kind = Tok::String;
      } else if ((c == '-' && peek(1) == '>') || (c == '=' && peek(1) == '=')) {
        advance();
        advance();
        t.kind = Tok::Symbol;
      } else if (std::string_view(";,()[]{}+-*/^").find(c) !=
                 std::string_view::npos) {
        advance();
        t.kind = Tok::Symbol;
      } else {
        throw SyntaxError(std::string("unexpected character '") + c + "'",
                          SourceSpan{line_, col_, 1});
      }
      t.text = std::string(src_.substr(start, pos_ - start));
      t.span.length = static_cast<int>(pos_ - start);
      if (t.kind == Tok::String) t.text = t.text.substr(1, t.text.size() - 2);
      out.push_back(std::move(t));
    }
  }

 private:
  char peek(std::size_t ahead) const {
    return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
  }

  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_space_and_comments() {
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (c == '/' && peek(1) == '/') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else if (c == '/' && peek(1) == '*') {
        const SourceSpan at{line_, col_, 2};
        advance();
        advance();
        while (pos_ < src_.size() && !(src_[pos_] == '*' && peek(1) == '/')) {
          advance();
        }
        if (pos_ >= src_.size()) throw SyntaxError("unterminated comment", at);
        advance();
        advance();
      } else {
        return;
      }
    }
  }

  void lex_number() {
    auto digits = [&] {
      while (pos_ < src_.size() &&
             std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        advance();
      }
    };
    digits();
    if (pos_ < src_.size() && src_[pos_] == '.') {
      advance();
      digits();
    }
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      const char next = peek(1);
      const char after = peek(2);
      if (std::isdigit(static_cast<unsigned char>(next)) ||
          ((next == '+' || next == '-') &&
           std::isdigit(static_cast<unsigned char>(after)))) {
        advance();
        if (src_[pos_] == '+' || src_[pos_] == '-') advance();
        digits();
      }
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

const std::set<std::string, std::less<>> kReserved = {
    "OPENQASM", "include", "qreg", "creg",  "gate", "opaque", "measure",
    "reset",    "barrier", "if",   "pi",    "sin",  "cos",    "tan",
    "exp",      "ln",      "sqrt", "U",     "CX"};

const std::set<std::string, std::less<>> kFunctions = {"sin", "cos", "tan",
                                                       "exp", "ln",  "sqrt"};

struct GateSig {
  int num_params = 0;
  int num_qubits = 0;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {
    gates_["U"] = {3, 1};
    gates_["CX"] = {0, 2};
  }

  QasmAst run() {
    parse_header();
    while (peek().kind != Tok::End) parse_statement();
    return std::move(ast_);
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    const std::size_t i = std::min(pos_ + ahead, toks_.size() - 1);
    return toks_[i];
  }
  const Token& next() {
    const Token& t = toks_[pos_];
    if (pos_ + 1 < toks_.size()) ++pos_;
    return t;
  }
  bool is_symbol(std::string_view s, std::size_t ahead = 0) const {
    return peek(ahead).kind == Tok::Symbol && peek(ahead).text == s;
  }
  bool is_ident(std::string_view s) const {
    return peek().kind == Tok::Ident && peek().text == s;
  }

  [[noreturn]] void syntax_error(const std::string& what) const {
    const Token& t = peek();
    const std::string found =
        t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    throw SyntaxError(what + ", found " + found, t.span);
  }

  const Token& expect_symbol(std::string_view s) {
    if (!is_symbol(s)) syntax_error("expected '" + std::string(s) + "'");
    return next();
  }

  const Token& expect_ident(const char* what) {
    if (peek().kind != Tok::Ident) syntax_error(std::string("expected ") + what);
    return next();
  }

  const Token& expect_name(const char* what) {
    const Token& t = expect_ident(what);
    if (kReserved.contains(t.text)) {
      throw SyntaxError("reserved word '" + t.text + "' used as " + what, t.span);
    }
    return t;
  }

  int expect_nonneg_int(const char* what) {
    if (peek().kind != Tok::Number) syntax_error(std::string("expected ") + what);
    const Token& t = next();
    if (t.text.find_first_not_of("0123456789") != std::string::npos) {
      throw SyntaxError(std::string(what) + " must be an integer", t.span);
    }
    try {
      return std::stoi(t.text);
    } catch (const std::out_of_range&) {
      throw SyntaxError(std::string(what) + " out of range", t.span);
    }
  }

  void parse_header() {
    if (!is_ident("OPENQASM")) syntax_error("expected 'OPENQASM' header");
    next();
    if (peek().kind != Tok::Number) syntax_error("expected version number");
    const Token& v = next();
    if (v.text != "2.0") {
      throw SemanticError("unsupported OpenQASM version '" + v.text + "'",
                          v.span);
    }
    ast_.version = v.text;
    expect_symbol(";");
  }

  void parse_statement() {
    const Token& t = peek();
    if (t.kind != Tok::Ident) syntax_error("expected statement");
    if (t.text == "include") return parse_include();
    if (t.text == "qreg" || t.text == "creg") return parse_declaration();
    if (t.text == "gate") return parse_gate_def();
    if (t.text == "opaque") {
      throw SemanticError("opaque gate declarations are not supported", t.span);
    }
    if (t.text == "barrier") {
      ast_.statements.emplace_back(parse_barrier(nullptr));
      return;
    }
    if (t.text == "if") return parse_if();
    ast_.statements.push_back(std::visit(
        [](auto&& op) -> Statement { return std::move(op); }, parse_qop()));
  }

  void parse_include() {
    const Token& kw = next();
    if (peek().kind != Tok::String) syntax_error("expected include file name");
    const Token& name = next();
    expect_symbol(";");
    if (name.text != "qelib1.inc") {
      throw SemanticError("unknown include '" + name.text + "'", name.span);
    }
    (void)kw;
    if (!included_qelib_) {
      included_qelib_ = true;
      for (const auto& g : ir::primitive_gates()) {
        gates_[std::string(g.name)] = {g.num_params, g.num_qubits};
      }
    }
    ast_.includes.push_back(name.text);
  }

  void parse_declaration() {
    Declaration d;
    const Token& kw = next();
    d.span = kw.span;
    d.kind = kw.text == "qreg" ? Declaration::Kind::QReg : Declaration::Kind::CReg;
    d.name = expect_name("register name").text;
    expect_symbol("[");
    const SourceSpan size_span = peek().span;
    d.size = expect_nonneg_int("register size");
    expect_symbol("]");
    expect_symbol(";");
    if (d.size < 1) throw SemanticError("register size must be positive", size_span);
    if (qregs_.contains(d.name) || cregs_.contains(d.name)) {
      throw SemanticError("register '" + d.name + "' already declared", d.span);
    }
    (d.kind == Declaration::Kind::QReg ? qregs_ : cregs_)[d.name] = d.size;
    ast_.declarations.push_back(std::move(d));
  }

  std::vector<std::string> parse_id_list(const char* what) {
    std::vector<std::string> ids;
    ids.push_back(expect_name(what).text);
    while (is_symbol(",")) {
      next();
      ids.push_back(expect_name(what).text);
    }
    return ids;
  }

  void parse_gate_def() {
    GateDef def;
    def.span = next().span;
    const Token& name = expect_name("gate name");
    def.name = name.text;
    if (gates_.contains(def.name)) {
      throw SemanticError("gate '" + def.name + "' already defined", name.span);
    }
    if (is_symbol("(")) {
      next();
      if (!is_symbol(")")) def.params = parse_id_list("parameter name");
      expect_symbol(")");
    }
    def.qubits = parse_id_list("qubit argument");
    check_unique(def.params, "parameter", def.span);
    check_unique(def.qubits, "qubit argument", def.span);
    const GateSig self{static_cast<int>(def.params.size()),
                       static_cast<int>(def.qubits.size())};
    expect_symbol("{");
    const std::set<std::string> params(def.params.begin(), def.params.end());
    const std::set<std::string> qubits(def.qubits.begin(), def.qubits.end());
    body_scope_ = BodyScope{def.name, self, params, qubits};
    while (!is_symbol("}")) {
      if (peek().kind == Tok::End) syntax_error("expected '}'");
      if (is_ident("barrier")) {
        def.body.emplace_back(parse_barrier(&qubits));
      } else {
        def.body.emplace_back(parse_gate_call());
      }
    }
    next();
    body_scope_.reset();
    gates_[def.name] = self;
    ast_.gate_defs.push_back(std::move(def));
  }

  static void check_unique(const std::vector<std::string>& names,
                           const char* what, const SourceSpan& span) {
    std::set<std::string> seen;
    for (const auto& n : names) {
      if (!seen.insert(n).second) {
        throw SemanticError(std::string("duplicate ") + what + " '" + n + "'", span);
      }
    }
  }

  // Expressions ----------------------------------------------------------

  ExprPtr parse_expr() {
    ExprPtr lhs = parse_term();
    while (is_symbol("+") || is_symbol("-")) {
      const auto kind = next().text == "+" ? Expr::Kind::Add : Expr::Kind::Sub;
      lhs = Expr::binary(kind, lhs, parse_term());
    }
    return lhs;
  }

  ExprPtr parse_term() {
    ExprPtr lhs = parse_unary();
    while (is_symbol("*") || is_symbol("/")) {
      const auto kind = next().text == "*" ? Expr::Kind::Mul : Expr::Kind::Div;
      lhs = Expr::binary(kind, lhs, parse_unary());
    }
    return lhs;
  }

  ExprPtr parse_unary() {
    if (is_symbol("-")) {
      next();
      return Expr::unary(Expr::Kind::Negate, parse_unary());
    }
    if (is_symbol("+")) {
      next();
      return parse_unary();
    }
    return parse_power();
  }

  ExprPtr parse_power() {
    ExprPtr base = parse_primary();
    if (is_symbol("^")) {
      next();
      return Expr::binary(Expr::Kind::Pow, base, parse_unary());
    }
    return base;
  }

  ExprPtr parse_primary() {
    const Token& t = peek();
    if (t.kind == Tok::Number) {
      next();
      return Expr::number(std::strtod(t.text.c_str(), nullptr));
    }
    if (is_symbol("(")) {
      next();
      ExprPtr e = parse_expr();
      expect_symbol(")");
      return e;
    }
    if (t.kind == Tok::Ident) {
      if (t.text == "pi") {
        next();
        return Expr::pi();
      }
      if (kFunctions.contains(t.text)) {
        const std::string fn = next().text;
        expect_symbol("(");
        ExprPtr arg = parse_expr();
        expect_symbol(")");
        return Expr::call(fn, arg);
      }
      if (body_scope_ && body_scope_->params.contains(t.text)) {
        next();
        return Expr::param(t.text);
      }
      throw SemanticError("unknown identifier '" + t.text + "' in expression",
                          t.span);
    }
    syntax_error("expected expression");
  }

  // Quantum operations ---------------------------------------------------

  Argument parse_argument() {
    Argument a;
    const Token& name = expect_name("register name");
    a.reg = name.text;
    a.span = name.span;
    if (is_symbol("[")) {
      next();
      a.index = expect_nonneg_int("index");
      expect_symbol("]");
    }
    return a;
  }

  std::vector<Argument> parse_argument_list() {
    std::vector<Argument> args;
    args.push_back(parse_argument());
    while (is_symbol(",")) {
      next();
      args.push_back(parse_argument());
    }
    return args;
  }

  /// Returns the register size for whole-register arguments, 0 for indexed.
  int check_register_arg(const Argument& a,
                         const std::map<std::string, int>& table,
                         const char* kind) const {
    const auto it = table.find(a.reg);
    if (it == table.end()) {
      throw SemanticError(std::string("undeclared ") + kind + " '" + a.reg + "'",
                          a.span);
    }
    if (a.index) {
      if (*a.index >= it->second) {
        throw SemanticError("index " + std::to_string(*a.index) +
                                " out of range for '" + a.reg + "' of size " +
                                std::to_string(it->second),
                            a.span);
      }
      return 0;
    }
    return it->second;
  }

  /// Validates a top-level quantum argument list: registers exist, indices
  /// are in range, broadcast sizes agree and no qubit repeats.
  void check_qubit_args(const std::vector<Argument>& args, const SourceSpan& at) {
    int width = 0;
    for (const auto& a : args) {
      const int size = check_register_arg(a, qregs_, "qreg");
      if (size > 0) {
        if (width > 0 && size != width) {
          throw SemanticError("register operands differ in size", a.span);
        }
        width = size;
      }
    }
    for (std::size_t i = 0; i < args.size(); ++i) {
      for (std::size_t j = i + 1; j < args.size(); ++j) {
        const auto& a = args[i];
        const auto& b = args[j];
        if (a.reg == b.reg && (!a.index || !b.index || *a.index == *b.index)) {
          throw SemanticError("repeated qubit operand '" + a.reg + "'", at);
        }
      }
    }
  }

  GateCall parse_gate_call() {
    GateCall g;
    const Token& name = expect_ident("gate name");
    g.name = name.text;
    g.span = name.span;
    if (is_symbol("(")) {
      next();
      if (!is_symbol(")")) {
        g.params.push_back(parse_expr());
        while (is_symbol(",")) {
          next();
          g.params.push_back(parse_expr());
        }
      }
      expect_symbol(")");
    }
    if (body_scope_) {
      for (const auto& id : parse_id_list("qubit argument")) {
        g.args.push_back({id, std::nullopt, g.span});
      }
    } else {
      g.args = parse_argument_list();
    }
    expect_symbol(";");

    GateSig sig;
    if (body_scope_ && g.name == body_scope_->name) {
      sig = body_scope_->self;
    } else {
      const auto it = gates_.find(g.name);
      if (it == gates_.end()) {
        throw SemanticError("unknown gate '" + g.name + "'", g.span);
      }
      sig = it->second;
    }
    if (static_cast<int>(g.params.size()) != sig.num_params) {
      throw SemanticError("gate '" + g.name + "' expects " +
                              std::to_string(sig.num_params) + " parameter(s), got " +
                              std::to_string(g.params.size()),
                          g.span);
    }
    if (static_cast<int>(g.args.size()) != sig.num_qubits) {
      throw SemanticError("gate '" + g.name + "' expects " +
                              std::to_string(sig.num_qubits) + " qubit(s), got " +
                              std::to_string(g.args.size()),
                          g.span);
    }
    if (body_scope_) {
      std::set<std::string> seen;
      for (const auto& a : g.args) {
        if (!body_scope_->qubits.contains(a.reg)) {
          throw SemanticError("unknown qubit argument '" + a.reg + "'", g.span);
        }
        if (!seen.insert(a.reg).second) {
          throw SemanticError("repeated qubit operand '" + a.reg + "'", g.span);
        }
      }
    } else {
      check_qubit_args(g.args, g.span);
      for (auto& p : g.params) {
        const double v = evaluate(*p);
        if (!std::isfinite(v)) {
          throw SemanticError("gate parameter is not finite", g.span);
        }
        p = Expr::number(v);
      }
    }
    return g;
  }

  BarrierStmt parse_barrier(const std::set<std::string>* formal_qubits) {
    BarrierStmt b;
    b.span = next().span;
    if (formal_qubits != nullptr) {
      for (const auto& id : parse_id_list("qubit argument")) {
        if (!formal_qubits->contains(id)) {
          throw SemanticError("unknown qubit argument '" + id + "'", b.span);
        }
        b.args.push_back({id, std::nullopt, b.span});
      }
    } else {
      b.args = parse_argument_list();
      for (const auto& a : b.args) check_register_arg(a, qregs_, "qreg");
    }
    expect_symbol(";");
    return b;
  }

  QuantumOp parse_qop() {
    if (is_ident("measure")) {
      MeasureStmt m;
      m.span = next().span;
      m.qubit = parse_argument();
      expect_symbol("->");
      m.bit = parse_argument();
      expect_symbol(";");
      const int qsize = check_register_arg(m.qubit, qregs_, "qreg");
      const int csize = check_register_arg(m.bit, cregs_, "creg");
      if (qsize != csize) {
        throw SemanticError("measure operands differ in size", m.span);
      }
      return m;
    }
    if (is_ident("reset")) {
      ResetStmt r;
      r.span = next().span;
      r.qubit = parse_argument();
      expect_symbol(";");
      check_register_arg(r.qubit, qregs_, "qreg");
      return r;
    }
    if (is_ident("barrier") || is_ident("if") || is_ident("gate")) {
      syntax_error("expected quantum operation");
    }
    return parse_gate_call();
  }

  void parse_if() {
    IfStmt s;
    s.span = next().span;
    expect_symbol("(");
    const Token& creg = expect_name("creg name");
    s.creg = creg.text;
    if (!cregs_.contains(s.creg)) {
      throw SemanticError("undeclared creg '" + s.creg + "'", creg.span);
    }
    expect_symbol("==");
    const SourceSpan value_span = peek().span;
    s.value = expect_nonneg_int("comparison value");
    const int width = cregs_[s.creg];
    if (width < 62 && s.value >= (std::int64_t{1} << width)) {
      throw SemanticError("comparison value does not fit in '" + s.creg + "'",
                          value_span);
    }
    expect_symbol(")");
    s.body = parse_qop();
    ast_.statements.emplace_back(std::move(s));
  }

  struct BodyScope {
    std::string name;
    GateSig self;
    std::set<std::string> params;
    std::set<std::string> qubits;
  };

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  QasmAst ast_;
  bool included_qelib_ = false;
  std::map<std::string, int> qregs_;
  std::map<std::string, int> cregs_;
  std::unordered_map<std::string, GateSig> gates_;
  std::optional<BodyScope> body_scope_;
};

}  // namespace

QasmAst parse_qasm(std::string_view source) {
  return Parser(Lexer(source).run()).run();
}

}  // namespace qcc::qasm
