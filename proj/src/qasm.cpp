// Copyright 2026 The qroute Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qroute/qasm.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <sstream>

namespace qroute {

Gate Gate::one_qubit(std::string name, std::vector<double> params, int q) {
  Gate g;
  g.kind = Kind::OneQubit;
  g.name = std::move(name);
  g.params = std::move(params);
  g.qubits = {q};
  return g;
}

Gate Gate::cnot(int control, int target) {
  Gate g;
  g.kind = Kind::Cnot;
  g.qubits = {control, target};
  return g;
}

Gate Gate::swap(int a, int b) {
  Gate g;
  g.kind = Kind::Swap;
  g.qubits = {a, b};
  return g;
}

Gate Gate::measure(int q, std::string creg, int cbit) {
  Gate g;
  g.kind = Kind::Measure;
  g.qubits = {q};
  g.creg = std::move(creg);
  g.cbit = cbit;
  return g;
}

Gate Gate::barrier(std::vector<int> qubits) {
  Gate g;
  g.kind = Kind::Barrier;
  g.qubits = std::move(qubits);
  return g;
}

std::vector<std::pair<int, int>> LogicalProgram::cnot_indices() const {
  std::vector<std::pair<int, int>> out;
  for (const Gate& g : gates) {
    if (g.kind == Gate::Kind::Cnot) out.emplace_back(g.control(), g.target());
  }
  return out;
}

int LogicalProgram::cnot_count() const {
  return static_cast<int>(
      std::count_if(gates.begin(), gates.end(), [](const Gate& g) {
        return g.kind == Gate::Kind::Cnot;
      }));
}

bool LogicalProgram::has_swaps() const {
  return std::any_of(gates.begin(), gates.end(), [](const Gate& g) {
    return g.kind == Gate::Kind::Swap;
  });
}

LogicalProgram expand_swaps(const LogicalProgram& program) {
  LogicalProgram out = program;
  out.gates.clear();
  for (const Gate& g : program.gates) {
    if (g.kind == Gate::Kind::Swap) {
      out.gates.push_back(Gate::cnot(g.qubits[0], g.qubits[1]));
      out.gates.push_back(Gate::cnot(g.qubits[1], g.qubits[0]));
      out.gates.push_back(Gate::cnot(g.qubits[0], g.qubits[1]));
    } else {
      out.gates.push_back(g);
    }
  }
  return out;
}

namespace {

// Arity of each supported 1-qubit gate.
const std::map<std::string, int>& one_qubit_arity() {
  static const std::map<std::string, int> table = {
      {"u1", 1}, {"u2", 2}, {"u3", 3}, {"rx", 1}, {"ry", 1},
      {"rz", 1}, {"h", 0},  {"x", 0},  {"y", 0},  {"z", 0},
      {"s", 0},  {"sdg", 0}, {"t", 0}, {"tdg", 0}, {"id", 0}};
  return table;
}

struct Scanner {
  const std::string& text;
  std::size_t pos = 0;
  int line = 1;
  int col = 1;

  explicit Scanner(const std::string& t) : text(t) {
    // Skip a UTF-8 BOM if present.
    if (text.size() >= 3 && text.compare(0, 3, "\xEF\xBB\xBF") == 0) pos = 3;
  }

  [[noreturn]] void fail(ParseErrc code, const std::string& msg) const {
    throw ParseError(code, line, col,
                     "line " + std::to_string(line) + ":" +
                         std::to_string(col) + ": " + msg);
  }

  bool eof() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }

  char advance() {
    char c = text[pos++];
    if (c == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    return c;
  }

  void skip_ws() {
    while (!eof()) {
      char c = peek();
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (c == '/' && pos + 1 < text.size() && text[pos + 1] == '/') {
        while (!eof() && peek() != '\n') advance();
      } else {
        return;
      }
    }
  }

  bool match(char c) {
    skip_ws();
    if (!eof() && peek() == c) {
      advance();
      return true;
    }
    return false;
  }

  void expect(char c) {
    skip_ws();
    if (eof() || peek() != c)
      fail(ParseErrc::SyntaxError, std::string("expected '") + c + "'");
    advance();
  }

  std::string identifier() {
    skip_ws();
    if (eof() || !(std::isalpha(static_cast<unsigned char>(peek())) ||
                   peek() == '_'))
      fail(ParseErrc::SyntaxError, "expected identifier");
    std::string id;
    while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) ||
                      peek() == '_'))
      id.push_back(advance());
    return id;
  }

  int integer() {
    skip_ws();
    if (eof() || !std::isdigit(static_cast<unsigned char>(peek())))
      fail(ParseErrc::SyntaxError, "expected integer");
    long v = 0;
    while (!eof() && std::isdigit(static_cast<unsigned char>(peek())))
      v = v * 10 + (advance() - '0');
    return static_cast<int>(v);
  }

  // Parameter expressions: reals, pi, + - * / ^ and parentheses.
  double expression() { return parse_sum(); }

  double parse_sum() {
    double v = parse_product();
    while (true) {
      skip_ws();
      if (!eof() && peek() == '+') {
        advance();
        v += parse_product();
      } else if (!eof() && peek() == '-') {
        advance();
        v -= parse_product();
      } else {
        return v;
      }
    }
  }

  double parse_product() {
    double v = parse_power();
    while (true) {
      skip_ws();
      if (!eof() && peek() == '*') {
        advance();
        v *= parse_power();
      } else if (!eof() && peek() == '/') {
        advance();
        v /= parse_power();
      } else {
        return v;
      }
    }
  }

  double parse_power() {
    double base = parse_atom();
    skip_ws();
    if (!eof() && peek() == '^') {
      advance();
      return std::pow(base, parse_power());
    }
    return base;
  }

  double parse_atom() {
    skip_ws();
    if (eof()) fail(ParseErrc::SyntaxError, "unexpected end of input");
    char c = peek();
    if (c == '-') {
      advance();
      return -parse_atom();
    }
    if (c == '+') {
      advance();
      return parse_atom();
    }
    if (c == '(') {
      advance();
      double v = parse_sum();
      expect(')');
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::string num;
      while (!eof() && (std::isdigit(static_cast<unsigned char>(peek())) ||
                        peek() == '.' || peek() == 'e' || peek() == 'E' ||
                        ((peek() == '+' || peek() == '-') && !num.empty() &&
                         (num.back() == 'e' || num.back() == 'E'))))
        num.push_back(advance());
      try {
        return std::stod(num);
      } catch (const std::exception&) {
        fail(ParseErrc::SyntaxError, "bad number '" + num + "'");
      }
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string id = identifier();
      if (id == "pi") return 3.14159265358979323846;
      fail(ParseErrc::SyntaxError, "unknown symbol '" + id + "'");
    }
    fail(ParseErrc::SyntaxError, "expected expression");
  }
};

struct Argument {
  std::string reg;
  int index = -1;  // -1: whole register
};

class Parser {
 public:
  explicit Parser(const std::string& text) : s_(text) {}

  LogicalProgram run() {
    header();
    while (true) {
      s_.skip_ws();
      if (s_.eof()) break;
      statement();
    }
    return std::move(prog_);
  }

 private:
  Scanner s_;
  LogicalProgram prog_;
  bool have_qreg_ = false;

  void header() {
    s_.skip_ws();
    // The OPENQASM line is optional on input but must be 2.x when present.
    if (lookahead_keyword("OPENQASM")) {
      s_.identifier();
      double version = s_.expression();
      if (version < 2.0 || version >= 3.0)
        s_.fail(ParseErrc::SyntaxError, "only OpenQASM 2.x is supported");
      s_.expect(';');
    }
  }

  bool lookahead_keyword(const std::string& kw) {
    s_.skip_ws();
    if (s_.text.compare(s_.pos, kw.size(), kw) != 0) return false;
    std::size_t after = s_.pos + kw.size();
    if (after < s_.text.size() &&
        (std::isalnum(static_cast<unsigned char>(s_.text[after])) ||
         s_.text[after] == '_'))
      return false;
    return true;
  }

  void statement() {
    int stmt_line = s_.line;
    int stmt_col = s_.col;
    std::string head = s_.identifier();

    if (head == "include") {
      skip_to_semicolon();
    } else if (head == "qreg") {
      declare_qreg(stmt_line, stmt_col);
    } else if (head == "creg") {
      std::string name = s_.identifier();
      s_.expect('[');
      int n = s_.integer();
      s_.expect(']');
      s_.expect(';');
      prog_.cregs.emplace_back(name, n);
    } else if (head == "gate") {
      skip_gate_definition();
    } else if (head == "opaque") {
      skip_to_semicolon();
    } else if (head == "measure") {
      parse_measure();
    } else if (head == "barrier") {
      parse_barrier();
    } else if (head == "if" || head == "reset") {
      throw ParseError(ParseErrc::UnsupportedGate, stmt_line, stmt_col,
                       "line " + std::to_string(stmt_line) + ": '" + head +
                           "' statements are not supported");
    } else {
      parse_application(head, stmt_line, stmt_col);
    }
  }

  void skip_to_semicolon() {
    while (!s_.eof() && s_.peek() != ';') s_.advance();
    s_.expect(';');
  }

  // Gate bodies contain no nested braces, so a flat scan suffices. Emitted
  // files define `swap` this way.
  void skip_gate_definition() {
    while (!s_.eof() && s_.peek() != '{') s_.advance();
    s_.expect('{');
    while (!s_.eof() && s_.peek() != '}') s_.advance();
    s_.expect('}');
  }

  void declare_qreg(int line, int col) {
    if (have_qreg_)
      throw ParseError(ParseErrc::MultipleQregs, line, col,
                       "line " + std::to_string(line) +
                           ": multiple quantum registers are not supported");
    std::string name = s_.identifier();
    s_.expect('[');
    int n = s_.integer();
    s_.expect(']');
    s_.expect(';');
    if (n < 1)
      throw ParseError(ParseErrc::SyntaxError, line, col,
                       "line " + std::to_string(line) +
                           ": quantum register must have at least one qubit");
    prog_.register_name = name;
    prog_.num_qubits = n;
    have_qreg_ = true;
  }

  Argument parse_argument() {
    Argument a;
    a.reg = s_.identifier();
    if (s_.match('[')) {
      a.index = s_.integer();
      s_.expect(']');
    }
    return a;
  }

  int resolve_qubit(const Argument& a, int line, int col) {
    if (!have_qreg_ || a.reg != prog_.register_name)
      throw ParseError(ParseErrc::UndeclaredRegister, line, col,
                       "line " + std::to_string(line) +
                           ": undeclared register '" + a.reg + "'");
    if (a.index < 0 || a.index >= prog_.num_qubits)
      throw ParseError(ParseErrc::IndexOutOfRange, line, col,
                       "line " + std::to_string(line) + ": index " +
                           std::to_string(a.index) + " out of range for " +
                           a.reg + "[" + std::to_string(prog_.num_qubits) +
                           "]");
    return a.index;
  }

  const std::pair<std::string, int>* find_creg(const std::string& name) const {
    for (const auto& c : prog_.cregs)
      if (c.first == name) return &c;
    return nullptr;
  }

  void parse_measure() {
    int line = s_.line, col = s_.col;
    Argument q = parse_argument();
    s_.skip_ws();
    if (!(s_.match('-') && s_.match('>')))
      s_.fail(ParseErrc::SyntaxError, "expected '->' in measure");
    Argument c = parse_argument();
    s_.expect(';');

    const auto* creg = find_creg(c.reg);
    if (!creg)
      throw ParseError(ParseErrc::UndeclaredRegister, line, col,
                       "line " + std::to_string(line) +
                           ": undeclared register '" + c.reg + "'");
    if (q.index < 0) {
      // Whole-register broadcast: measure q -> c.
      if (c.index >= 0 || creg->second < prog_.num_qubits)
        s_.fail(ParseErrc::SyntaxError, "register length mismatch in measure");
      for (int i = 0; i < prog_.num_qubits; ++i)
        prog_.gates.push_back(Gate::measure(
            resolve_qubit({q.reg, i}, line, col), c.reg, i));
    } else {
      int qi = resolve_qubit(q, line, col);
      if (c.index < 0 || c.index >= creg->second)
        throw ParseError(ParseErrc::IndexOutOfRange, line, col,
                         "line " + std::to_string(line) +
                             ": classical index out of range");
      prog_.gates.push_back(Gate::measure(qi, c.reg, c.index));
    }
  }

  void parse_barrier() {
    int line = s_.line, col = s_.col;
    std::vector<int> qs;
    while (true) {
      Argument a = parse_argument();
      if (a.index < 0) {
        if (!have_qreg_ || a.reg != prog_.register_name)
          throw ParseError(ParseErrc::UndeclaredRegister, line, col,
                           "line " + std::to_string(line) +
                               ": undeclared register '" + a.reg + "'");
        for (int i = 0; i < prog_.num_qubits; ++i) qs.push_back(i);
      } else {
        qs.push_back(resolve_qubit(a, line, col));
      }
      if (!s_.match(',')) break;
    }
    s_.expect(';');
    prog_.gates.push_back(Gate::barrier(std::move(qs)));
  }

  void parse_application(const std::string& name, int line, int col) {
    std::vector<double> params;
    if (s_.match('(')) {
      if (!s_.match(')')) {
        params.push_back(s_.expression());
        while (s_.match(',')) params.push_back(s_.expression());
        s_.expect(')');
      }
    }
    std::vector<Argument> args;
    args.push_back(parse_argument());
    while (s_.match(',')) args.push_back(parse_argument());
    s_.expect(';');

    auto it = one_qubit_arity().find(name);
    if (it != one_qubit_arity().end()) {
      if (static_cast<int>(params.size()) != it->second)
        s_.fail(ParseErrc::SyntaxError,
                name + " expects " + std::to_string(it->second) +
                    " parameter(s)");
      if (args.size() != 1)
        s_.fail(ParseErrc::SyntaxError, name + " expects one qubit argument");
      if (args[0].index < 0) {
        for (int i = 0; i < prog_.num_qubits; ++i)
          prog_.gates.push_back(Gate::one_qubit(
              name, params, resolve_qubit({args[0].reg, i}, line, col)));
      } else {
        prog_.gates.push_back(
            Gate::one_qubit(name, params, resolve_qubit(args[0], line, col)));
      }
      return;
    }

    if (name == "cx" || name == "CX" || name == "swap") {
      if (!params.empty() || args.size() != 2 || args[0].index < 0 ||
          args[1].index < 0)
        s_.fail(ParseErrc::SyntaxError,
                name + " expects two indexed qubit arguments");
      int a = resolve_qubit(args[0], line, col);
      int b = resolve_qubit(args[1], line, col);
      if (a == b)
        throw ParseError(ParseErrc::InvalidCnot, line, col,
                         "line " + std::to_string(line) + ": " + name +
                             " control and target coincide");
      prog_.gates.push_back(name == "swap" ? Gate::swap(a, b)
                                           : Gate::cnot(a, b));
      return;
    }

    throw ParseError(ParseErrc::UnsupportedGate, line, col,
                     "line " + std::to_string(line) + ": unsupported gate '" +
                         name + "'");
  }
};

}  // namespace

LogicalProgram parse_program(const std::string& text) {
  Parser p(text);
  LogicalProgram prog = p.run();
  if (prog.num_qubits == 0)
    throw ParseError(ParseErrc::SyntaxError, 1, 1,
                     "no quantum register declared");
  return prog;
}

}  // namespace qroute
