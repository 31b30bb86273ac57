#include "eqc/qasm/Qasm.hpp"

#include "eqc/Error.hpp"

#include <cctype>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>

namespace eqc::qasm {

std::string Diagnostic::format(std::string_view file) const {
  std::ostringstream os;
  if (!file.empty()) {
    os << file << ":";
  }
  os << line << ":" << column << ": "
     << (severity == Severity::Error ? "error" : "warning") << ": " << message;
  return os.str();
}

namespace {

enum class Tok : std::uint8_t { Ident, Number, String, Symbol, End };

struct Token {
  Tok kind{Tok::End};
  std::string text;
  double value{0.};
  // integer literal without fraction or exponent
  bool integral{false};
  std::size_t line{1};
  std::size_t col{1};
};

struct Failure {
  Token at;
  std::string message;
  std::string code;
};

class Lexer {
public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    skipSpaceAndComments();
    Token t;
    t.line = line_;
    t.col = col_;
    if (pos_ >= src_.size()) {
      return t;
    }
    const char c = src_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_') {
      t.kind = Tok::Ident;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) != 0 ||
              src_[pos_] == '_')) {
        t.text += advance();
      }
      return t;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) != 0 || c == '.') {
      return number(t);
    }
    if (c == '"') {
      advance();
      t.kind = Tok::String;
      while (pos_ < src_.size() && src_[pos_] != '"' && src_[pos_] != '\n') {
        t.text += advance();
      }
      if (pos_ >= src_.size() || src_[pos_] != '"') {
        throw Failure{t, "unterminated string", "syntax"};
      }
      advance();
      return t;
    }
    t.kind = Tok::Symbol;
    if (c == '-' && peekAt(1) == '>') {
      advance();
      advance();
      t.text = "->";
      return t;
    }
    if (c == '=' && peekAt(1) == '=') {
      advance();
      advance();
      t.text = "==";
      return t;
    }
    static constexpr std::string_view Symbols = ";,[](){}+-*/^";
    if (Symbols.find(c) != std::string_view::npos) {
      t.text = std::string(1, advance());
      return t;
    }
    std::ostringstream msg;
    if (std::isprint(static_cast<unsigned char>(c)) != 0) {
      msg << "unexpected character '" << c << "'";
    } else {
      msg << "unexpected byte 0x" << std::hex
          << static_cast<int>(static_cast<unsigned char>(c));
    }
    throw Failure{t, msg.str(), "syntax"};
  }

private:
  char peekAt(std::size_t k) const {
    return pos_ + k < src_.size() ? src_[pos_ + k] : '\0';
  }

  char advance() {
    const char c = src_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  void skipSpaceAndComments() {
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' ||
          c == '\v') {
        advance();
      } else if (c == '/' && peekAt(1) == '/') {
        while (pos_ < src_.size() && src_[pos_] != '\n') {
          advance();
        }
      } else if (c == '/' && peekAt(1) == '*') {
        Token at;
        at.line = line_;
        at.col = col_;
        advance();
        advance();
        while (pos_ < src_.size() && !(src_[pos_] == '*' && peekAt(1) == '/')) {
          advance();
        }
        if (pos_ >= src_.size()) {
          throw Failure{at, "unterminated comment", "syntax"};
        }
        advance();
        advance();
      } else {
        return;
      }
    }
  }

  Token number(Token t) {
    t.kind = Tok::Number;
    bool fraction = false;
    bool exponent = false;
    while (pos_ < src_.size() &&
           std::isdigit(static_cast<unsigned char>(src_[pos_])) != 0) {
      t.text += advance();
    }
    if (pos_ < src_.size() && src_[pos_] == '.') {
      fraction = true;
      t.text += advance();
      while (pos_ < src_.size() &&
             std::isdigit(static_cast<unsigned char>(src_[pos_])) != 0) {
        t.text += advance();
      }
    }
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      const char sign = peekAt(1);
      const bool signed_ = sign == '+' || sign == '-';
      const char digit = peekAt(signed_ ? 2 : 1);
      if (std::isdigit(static_cast<unsigned char>(digit)) != 0) {
        exponent = true;
        t.text += advance();
        if (signed_) {
          t.text += advance();
        }
        while (pos_ < src_.size() &&
               std::isdigit(static_cast<unsigned char>(src_[pos_])) != 0) {
          t.text += advance();
        }
      }
    }
    if (t.text == ".") {
      throw Failure{t, "malformed number", "syntax"};
    }
    errno = 0;
    char* end = nullptr;
    t.value = std::strtod(t.text.c_str(), &end);
    if (end == nullptr || *end != '\0' || !std::isfinite(t.value)) {
      throw Failure{t, "number out of range: " + t.text, "syntax"};
    }
    t.integral = !fraction && !exponent;
    return t;
  }

  std::string_view src_;
  std::size_t pos_{0};
  std::size_t line_{1};
  std::size_t col_{1};
};

struct Register {
  std::size_t offset;
  std::size_t size;
};

/// One operand: a single qubit or a whole register.
struct Operand {
  Token at;
  std::size_t first;
  std::size_t size;
  bool whole;
};

struct GateShape {
  ir::GateKind kind;
  std::size_t controls;
};

std::optional<ir::GateKind> baseKind(std::string_view n) {
  static const std::map<std::string_view, ir::GateKind> Aliases{
      {"u", ir::GateKind::U3},   {"U", ir::GateKind::U3},
      {"u1", ir::GateKind::P},   {"iden", ir::GateKind::I},
      {"i", ir::GateKind::I},
  };
  if (const auto it = Aliases.find(n); it != Aliases.end()) {
    return it->second;
  }
  const auto k = ir::kindFromName(n);
  if (k && *k == ir::GateKind::GPhase) {
    return std::nullopt;
  }
  return k;
}

/// cx, ccx, c3x, cswap, crz, cu1 ... : leading c's or c<k> add controls.
std::optional<GateShape> resolveGate(std::string_view n) {
  if (n == "CX") {
    return GateShape{ir::GateKind::X, 1};
  }
  if (const auto k = baseKind(n)) {
    return GateShape{*k, 0};
  }
  if (n.size() > 1 && n[0] == 'c' &&
      std::isdigit(static_cast<unsigned char>(n[1])) != 0) {
    std::size_t i = 1;
    std::size_t count = 0;
    while (i < n.size() && std::isdigit(static_cast<unsigned char>(n[i])) != 0) {
      count = count * 10 + static_cast<std::size_t>(n[i] - '0');
      if (count > MaxQubits) {
        return std::nullopt;
      }
      ++i;
    }
    if (count == 0) {
      return std::nullopt;
    }
    if (const auto k = baseKind(n.substr(i))) {
      return GateShape{*k, count};
    }
    return std::nullopt;
  }
  std::size_t count = 0;
  while (count < n.size() && n[count] == 'c') {
    ++count;
    if (const auto k = baseKind(n.substr(count))) {
      return GateShape{*k, count};
    }
  }
  return std::nullopt;
}

class Parser {
public:
  Parser(std::string_view src, std::vector<Diagnostic>& diags)
      : lex_(src), diags_(diags) {
    tok_ = lex_.next();
  }

  ir::Circuit run(std::string name) {
    header();
    while (tok_.kind != Tok::End) {
      statement();
    }
    circuit_.n = qubits_;
    circuit_.name = std::move(name);
    return std::move(circuit_);
  }

private:
  static constexpr int MaxDepth = 200;

  [[noreturn]] void fail(const Token& at, std::string msg,
                         std::string code = "syntax") {
    throw Failure{at, std::move(msg), std::move(code)};
  }

  void warn(const Token& at, std::string msg, std::string code) {
    diags_.push_back(
        {at.line, at.col, std::move(msg), Severity::Warning, std::move(code)});
  }

  static std::string describe(const Token& t) {
    switch (t.kind) {
    case Tok::End:
      return "end of input";
    case Tok::String:
      return "string \"" + t.text + "\"";
    default:
      return "'" + t.text + "'";
    }
  }

  Token take() {
    Token t = tok_;
    tok_ = lex_.next();
    return t;
  }

  bool isSymbol(std::string_view s) const {
    return tok_.kind == Tok::Symbol && tok_.text == s;
  }

  Token expectSymbol(std::string_view s) {
    if (!isSymbol(s)) {
      fail(tok_, "expected '" + std::string(s) + "' but found " + describe(tok_));
    }
    return take();
  }

  Token expectIdent(std::string_view what) {
    if (tok_.kind != Tok::Ident) {
      fail(tok_, "expected " + std::string(what) + " but found " +
                     describe(tok_));
    }
    return take();
  }

  std::size_t expectIndex() {
    if (tok_.kind != Tok::Number || !tok_.integral) {
      fail(tok_, "expected a non-negative integer but found " + describe(tok_));
    }
    const Token t = take();
    if (t.value > static_cast<double>(MaxQubits)) {
      fail(t, "integer " + t.text + " exceeds the qubit limit of " +
                  std::to_string(MaxQubits),
           "TooManyQubits");
    }
    return static_cast<std::size_t>(t.value);
  }

  void header() {
    if (tok_.kind != Tok::Ident || tok_.text != "OPENQASM") {
      fail(tok_, "missing 'OPENQASM 2.0;' header");
    }
    take();
    if (tok_.kind != Tok::Number) {
      fail(tok_, "expected a version number but found " + describe(tok_));
    }
    const Token v = take();
    if (v.value != 2.0) {
      fail(v, "unsupported OpenQASM version " + v.text, "UnsupportedVersion");
    }
    expectSymbol(";");
  }

  void statement() {
    if (tok_.kind != Tok::Ident) {
      fail(tok_, "expected a statement but found " + describe(tok_));
    }
    const std::string& kw = tok_.text;
    if (kw == "include") {
      include();
    } else if (kw == "qreg" || kw == "creg") {
      declaration();
    } else if (kw == "barrier") {
      take();
      operands();
      expectSymbol(";");
    } else if (kw == "measure") {
      measure();
    } else if (kw == "gate" || kw == "opaque") {
      fail(tok_, "custom gate definitions are not supported", "UnsupportedGate");
    } else if (kw == "reset" || kw == "if") {
      fail(tok_, "'" + kw + "' is not supported", "Unsupported");
    } else if (kw == "OPENQASM") {
      fail(tok_, "duplicate header");
    } else {
      application();
    }
  }

  void include() {
    take();
    if (tok_.kind != Tok::String) {
      fail(tok_, "expected a file name but found " + describe(tok_));
    }
    const Token file = take();
    if (file.text != "qelib1.inc") {
      fail(file, "cannot include \"" + file.text + "\"", "UnsupportedInclude");
    }
    expectSymbol(";");
  }

  void declaration() {
    const bool quantum = take().text == "qreg";
    const Token id = expectIdent("a register name");
    expectSymbol("[");
    const std::size_t size = expectIndex();
    expectSymbol("]");
    expectSymbol(";");
    if (qregs_.count(id.text) != 0 || cregs_.count(id.text) != 0) {
      fail(id, "register '" + id.text + "' is already declared");
    }
    if (quantum) {
      if (qubits_ + size > MaxQubits) {
        fail(id, "more than " + std::to_string(MaxQubits) + " qubits declared",
             "TooManyQubits");
      }
      qregs_.emplace(id.text, Register{qubits_, size});
      qubits_ += size;
    } else {
      cregs_.emplace(id.text, size);
    }
  }

  Operand operand() {
    const Token id = expectIdent("a qubit operand");
    const auto it = qregs_.find(id.text);
    if (it == qregs_.end()) {
      fail(id, "unknown quantum register '" + id.text + "'");
    }
    if (isSymbol("[")) {
      take();
      const Token idxTok = tok_;
      const std::size_t idx = expectIndex();
      expectSymbol("]");
      if (idx >= it->second.size) {
        fail(idxTok, "index " + std::to_string(idx) + " out of range for '" +
                         id.text + "[" + std::to_string(it->second.size) + "]'",
             "QubitOutOfRange");
      }
      return {id, it->second.offset + idx, 1, false};
    }
    return {id, it->second.offset, it->second.size, true};
  }

  std::vector<Operand> operands() {
    std::vector<Operand> ops{operand()};
    while (isSymbol(",")) {
      take();
      ops.push_back(operand());
    }
    return ops;
  }

  void measure() {
    const Token at = take();
    operand();
    expectSymbol("->");
    const Token id = expectIdent("a classical register");
    const auto it = cregs_.find(id.text);
    if (it == cregs_.end()) {
      fail(id, "unknown classical register '" + id.text + "'");
    }
    if (isSymbol("[")) {
      take();
      const Token idxTok = tok_;
      if (expectIndex() >= it->second) {
        fail(idxTok, "classical index out of range");
      }
      expectSymbol("]");
    }
    expectSymbol(";");
    if (!measured_) {
      measureAt_ = at;
    }
    measured_ = true;
    warn(at, "measurement ignored", "MeasurementIgnored");
  }

  void application() {
    const Token nameTok = take();
    const auto shape = resolveGate(nameTok.text);
    if (!shape) {
      fail(nameTok, "unsupported gate '" + nameTok.text + "'",
           "UnsupportedGate");
    }
    std::vector<double> params;
    if (isSymbol("(")) {
      take();
      if (!isSymbol(")")) {
        params.push_back(expression(0));
        while (isSymbol(",")) {
          take();
          params.push_back(expression(0));
        }
      }
      expectSymbol(")");
    }
    const auto ops = operands();
    expectSymbol(";");

    if (measured_) {
      fail(nameTok,
           "gate after measurement (first measurement at line " +
               std::to_string(measureAt_.line) + ")",
           "MidCircuitMeasurement");
    }
    const std::size_t nt = ir::numTargets(shape->kind);
    if (params.size() != ir::numParams(shape->kind)) {
      fail(nameTok, "'" + nameTok.text + "' takes " +
                        std::to_string(ir::numParams(shape->kind)) +
                        " parameter(s), got " + std::to_string(params.size()),
           "ParameterCount");
    }
    if (ops.size() != shape->controls + nt) {
      fail(nameTok, "'" + nameTok.text + "' takes " +
                        std::to_string(shape->controls + nt) +
                        " operand(s), got " + std::to_string(ops.size()),
           "OperandCount");
    }

    // register operands broadcast; all of them must agree in size
    std::size_t width = 1;
    for (const Operand& op : ops) {
      if (op.whole) {
        if (width != 1 && op.size != width) {
          fail(op.at, "register sizes differ in broadcast", "Broadcast");
        }
        width = op.size;
      }
    }
    for (std::size_t k = 0; k < width; ++k) {
      ir::Gate g;
      g.kind = shape->kind;
      g.params = params;
      for (std::size_t i = 0; i < ops.size(); ++i) {
        const Operand& op = ops[i];
        const auto q = static_cast<ir::Qubit>(op.whole ? op.first + k : op.first);
        (i < shape->controls ? g.controls : g.targets).push_back(q);
      }
      try {
        ir::validate(g, qubits_);
      } catch (const Error& e) {
        fail(nameTok, e.what(), std::string(toString(e.code())));
      }
      circuit_.gates.push_back(std::move(g));
    }
  }

  // expression := term (('+'|'-') term)*
  double expression(int depth) {
    guard(depth);
    double v = term(depth + 1);
    while (isSymbol("+") || isSymbol("-")) {
      const bool plus = take().text == "+";
      const double r = term(depth + 1);
      v = plus ? v + r : v - r;
    }
    return v;
  }

  double term(int depth) {
    guard(depth);
    double v = unary(depth + 1);
    while (isSymbol("*") || isSymbol("/")) {
      const Token op = take();
      const double r = unary(depth + 1);
      if (op.text == "*") {
        v *= r;
      } else {
        if (r == 0.) {
          fail(op, "division by zero", "NonFiniteValue");
        }
        v /= r;
      }
    }
    return finite(op_, v);
  }

  double unary(int depth) {
    guard(depth);
    if (isSymbol("-")) {
      take();
      return -unary(depth + 1);
    }
    if (isSymbol("+")) {
      take();
      return unary(depth + 1);
    }
    return power(depth + 1);
  }

  double power(int depth) {
    guard(depth);
    const Token at = tok_;
    const double base = primary(depth + 1);
    if (isSymbol("^")) {
      take();
      return finite(at, std::pow(base, unary(depth + 1)));
    }
    return base;
  }

  double primary(int depth) {
    guard(depth);
    op_ = tok_;
    if (tok_.kind == Tok::Number) {
      return take().value;
    }
    if (isSymbol("(")) {
      take();
      const double v = expression(depth + 1);
      expectSymbol(")");
      return v;
    }
    if (tok_.kind == Tok::Ident) {
      const Token id = take();
      if (id.text == "pi") {
        return std::numbers::pi;
      }
      static const std::map<std::string_view, double (*)(double)> Functions{
          {"sin", [](double x) { return std::sin(x); }},
          {"cos", [](double x) { return std::cos(x); }},
          {"tan", [](double x) { return std::tan(x); }},
          {"exp", [](double x) { return std::exp(x); }},
          {"ln", [](double x) { return std::log(x); }},
          {"sqrt", [](double x) { return std::sqrt(x); }},
      };
      const auto f = Functions.find(id.text);
      if (f == Functions.end()) {
        fail(id, "unknown identifier '" + id.text + "' in expression");
      }
      expectSymbol("(");
      const double arg = expression(depth + 1);
      expectSymbol(")");
      return finite(id, f->second(arg));
    }
    fail(tok_, "expected an expression but found " + describe(tok_));
  }

  double finite(const Token& at, double v) {
    if (!std::isfinite(v)) {
      fail(at, "expression is not a finite number", "NonFiniteValue");
    }
    return v;
  }

  void guard(int depth) {
    if (depth > MaxDepth) {
      fail(tok_, "expression nested too deeply");
    }
  }

  Lexer lex_;
  Token tok_;
  Token op_;
  std::vector<Diagnostic>& diags_;
  std::map<std::string, Register, std::less<>> qregs_;
  std::map<std::string, std::size_t, std::less<>> cregs_;
  std::size_t qubits_{0};
  bool measured_{false};
  Token measureAt_;
  ir::Circuit circuit_;
};

} // namespace

ParseResult parse(std::string_view text, std::string name) {
  ParseResult r;
  try {
    Parser p(text, r.diagnostics);
    r.circuit = p.run(std::move(name));
  } catch (const Failure& f) {
    r.diagnostics.push_back(
        {f.at.line, f.at.col, f.message, Severity::Error, f.code});
  } catch (const std::exception& e) {
    r.diagnostics.push_back({0, 0, e.what(), Severity::Error, "internal"});
  }
  return r;
}

ParseResult parseFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    ParseResult r;
    r.diagnostics.push_back(
        {0, 0, "cannot open '" + path + "'", Severity::Error, "io"});
    return r;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string stem = path;
  if (const auto slash = stem.find_last_of('/'); slash != std::string::npos) {
    stem = stem.substr(slash + 1);
  }
  if (const auto dot = stem.rfind('.'); dot != std::string::npos && dot > 0) {
    stem = stem.substr(0, dot);
  }
  return parse(buf.str(), stem);
}

} // namespace eqc::qasm
