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

#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qroute {

/// A single circuit statement. OneQubit gates carry their name and real
/// parameters; Cnot/Swap carry (control, target) / (a, b); Measure carries
/// the classical destination; Barrier lists the qubits it spans.
struct Gate {
  enum class Kind { OneQubit, Cnot, Swap, Measure, Barrier };

  Kind kind;
  std::string name;            // OneQubit gate name ("h", "u3", ...)
  std::vector<double> params;  // OneQubit parameters
  std::vector<int> qubits;     // 1 entry for OneQubit/Measure, 2 for Cnot/Swap
  std::string creg;            // Measure destination register
  int cbit = -1;               // Measure destination bit

  static Gate one_qubit(std::string name, std::vector<double> params, int q);
  static Gate cnot(int control, int target);
  static Gate swap(int a, int b);
  static Gate measure(int q, std::string creg, int cbit);
  static Gate barrier(std::vector<int> qubits);

  int control() const { return qubits[0]; }
  int target() const { return qubits[1]; }

  bool operator==(const Gate&) const = default;
};

/// A parsed circuit over a single quantum register.
struct LogicalProgram {
  int num_qubits = 0;
  std::string register_name = "q";
  std::vector<std::pair<std::string, int>> cregs;  // (name, size)
  std::vector<Gate> gates;

  /// The CNOT (control, target) pairs in program order.
  std::vector<std::pair<int, int>> cnot_indices() const;

  int cnot_count() const;
  bool has_swaps() const;
};

/// Rewrites every Swap gate as its three-CNOT decomposition. The result is
/// unitarily identical and contains only 1-qubit gates, CNOTs, measurements
/// and barriers.
LogicalProgram expand_swaps(const LogicalProgram& program);

enum class ParseErrc {
  SyntaxError,
  UnsupportedGate,
  MultipleQregs,
  UndeclaredRegister,
  IndexOutOfRange,
  InvalidCnot,
};

class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrc code, int line, int col, const std::string& what)
      : std::runtime_error(what), code_(code), line_(line), col_(col) {}

  ParseErrc code() const { return code_; }
  int line() const { return line_; }
  int col() const { return col_; }

 private:
  ParseErrc code_;
  int line_;
  int col_;
};

/// Parses an OpenQASM 2.0 source string.
///
/// The supported subset is: the OPENQASM/include headers, one qreg, any
/// number of cregs, the 1-qubit gates u1/u2/u3/rx/ry/rz/h/x/y/z/s/sdg/t/tdg/id,
/// cx, swap, measure and barrier. Gate definition blocks are skipped so that
/// emitted files (which define `swap` inline) re-parse. Any other gate is
/// rejected with UnsupportedGate.
LogicalProgram parse_program(const std::string& text);

}  // namespace qroute
