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

#include <doctest.h>

#include <cmath>

#include "qroute/generator.hpp"
#include "qroute/qasm.hpp"
#include "qroute/router.hpp"

using qroute::Gate;
using qroute::LogicalProgram;
using qroute::ParseErrc;
using qroute::ParseError;

TEST_CASE("single-statement program") {
  auto p = qroute::parse_program("qreg q[2]; cx q[0],q[1];");
  CHECK(p.num_qubits == 2);
  REQUIRE(p.gates.size() == 1);
  CHECK(p.gates[0].kind == Gate::Kind::Cnot);
  CHECK(p.gates[0].control() == 0);
  CHECK(p.gates[0].target() == 1);
}

TEST_CASE("direct transcription of a small circuit") {
  auto p = qroute::parse_program(
      "OPENQASM 2.0;\n"
      "include \"qelib1.inc\";\n"
      "qreg q[3];\n"
      "h q[0];\n"
      "cx q[0],q[2];\n"
      "cx q[1],q[2];\n");
  CHECK(p.num_qubits == 3);
  CHECK(p.cnot_indices() ==
        std::vector<std::pair<int, int>>{{0, 2}, {1, 2}});
}

TEST_CASE("degenerate cx is rejected") {
  CHECK_THROWS_AS(qroute::parse_program("qreg q[2]; cx q[0],q[0];"),
                  ParseError);
  try {
    qroute::parse_program("qreg q[2];\ncx q[0],q[0];");
  } catch (const ParseError& e) {
    CHECK(e.code() == ParseErrc::InvalidCnot);
    CHECK(e.line() == 2);
  }
}

TEST_CASE("error taxonomy") {
  auto code_of = [](const std::string& text) {
    try {
      qroute::parse_program(text);
    } catch (const ParseError& e) {
      return e.code();
    }
    return ParseErrc::SyntaxError;
  };
  CHECK(code_of("qreg q[2]; qreg r[2];") == ParseErrc::MultipleQregs);
  CHECK(code_of("qreg q[2]; cx r[0],r[1];") == ParseErrc::UndeclaredRegister);
  CHECK(code_of("qreg q[2]; h q[5];") == ParseErrc::IndexOutOfRange);
  CHECK(code_of("qreg q[2]; frob q[0];") == ParseErrc::UnsupportedGate);
  CHECK(code_of("qreg q[2]; h q[0]") == ParseErrc::SyntaxError);  // missing ;
}

TEST_CASE("every two-qubit gate other than cx and swap is rejected") {
  for (const char* stmt : {"cz q[0],q[1];", "ccx q[0],q[1],q[2];",
                           "cu1(0.5) q[0],q[1];", "crz(1.0) q[0],q[1];"}) {
    std::string text = std::string("qreg q[3]; ") + stmt;
    try {
      qroute::parse_program(text);
      FAIL_CHECK("accepted: " << stmt);
    } catch (const ParseError& e) {
      CHECK(e.code() == ParseErrc::UnsupportedGate);
    }
  }
}

TEST_CASE("parameter expressions evaluate") {
  auto p = qroute::parse_program(
      "qreg q[1]; u3(pi/2, -pi/4, 0.25) q[0]; rz(2*pi) q[0];");
  REQUIRE(p.gates.size() == 2);
  CHECK(p.gates[0].params[0] == doctest::Approx(3.14159265358979 / 2));
  CHECK(p.gates[0].params[1] == doctest::Approx(-3.14159265358979 / 4));
  CHECK(p.gates[0].params[2] == doctest::Approx(0.25));
  CHECK(p.gates[1].params[0] == doctest::Approx(2 * 3.14159265358979));
}

TEST_CASE("measure, barrier, broadcast and comments") {
  auto p = qroute::parse_program(
      "// header comment\n"
      "OPENQASM 2.0;\n"
      "qreg q[3]; creg c[3];\n"
      "h q;              // broadcast\n"
      "barrier q;\n"
      "measure q -> c;\n");
  CHECK(p.gates.size() == 3 + 1 + 3);
  CHECK(p.gates[3].kind == Gate::Kind::Barrier);
  CHECK(p.gates[3].qubits == std::vector<int>{0, 1, 2});
  CHECK(p.gates[4].kind == Gate::Kind::Measure);
  CHECK(p.gates[4].creg == "c");
}

TEST_CASE("gate definitions are skipped, swap applications parse") {
  auto p = qroute::parse_program(
      "qreg q[3];\n"
      "gate swap a,b { cx a,b; cx b,a; cx a,b; }\n"
      "swap q[0],q[1];\n"
      "cx q[1],q[2];\n");
  REQUIRE(p.gates.size() == 2);
  CHECK(p.gates[0].kind == Gate::Kind::Swap);
  CHECK(p.has_swaps());

  auto expanded = qroute::expand_swaps(p);
  CHECK(expanded.cnot_count() == 4);
  CHECK(!expanded.has_swaps());
}

TEST_CASE("routed circuits round-trip through emission") {
  LogicalProgram prog = qroute::gen_random(5, 25, 99);
  qroute::RouterConfig cfg;
  cfg.seed = 4;
  qroute::RoutedCircuit routed = qroute::route(prog, cfg);

  std::string text = qroute::emit_program(routed, false);
  LogicalProgram reparsed = qroute::parse_program(text);
  CHECK(reparsed.num_qubits == routed.num_qubits);
  CHECK(reparsed.gates == qroute::physical_gates(routed, false));

  // decomposed swaps become three cx each
  std::string decomposed = qroute::emit_program(routed, true);
  LogicalProgram flat = qroute::parse_program(decomposed);
  CHECK(flat.cnot_count() ==
        routed.cnot_count() + 3 * routed.swap_count());
  CHECK(!flat.has_swaps());
}

TEST_CASE("swap decomposition emits the standard three cx lines") {
  // one SWAP at positions (1,2) on top of an identity block
  qroute::RoutedCircuit rc;
  rc.num_qubits = 3;
  rc.initial_mapping = qroute::Mapping::identity(3);
  rc.source.num_qubits = 3;
  rc.source.gates.push_back(Gate::cnot(0, 1));
  qroute::CnotBlock blk;
  blk.mapping = rc.initial_mapping;
  blk.physical_cnots = {{0, 1}};
  blk.source_indices = {0};
  blk.bridge.swaps = {{1, 2}};
  rc.blocks.push_back(blk);
  qroute::CnotBlock last;
  last.mapping = qroute::Mapping::from_positions({0, 2, 1});
  rc.blocks.push_back(last);
  rc.final_mapping = rc.blocks.back().mapping;

  std::string text = qroute::emit_program(rc, true);
  CHECK(text.find("cx q[1],q[2];\ncx q[2],q[1];\ncx q[1],q[2];") !=
        std::string::npos);
  std::string plain = qroute::emit_program(rc, false);
  CHECK(plain.find("gate swap a,b { cx a,b; cx b,a; cx a,b; }") !=
        std::string::npos);
  CHECK(plain.find("swap q[1],q[2];") != std::string::npos);
}

TEST_CASE("zero-swap emission contains exactly one cx") {
  qroute::RoutedCircuit rc;
  rc.num_qubits = 2;
  rc.initial_mapping = qroute::Mapping::identity(2);
  rc.final_mapping = rc.initial_mapping;
  rc.source.num_qubits = 2;
  rc.source.gates.push_back(Gate::cnot(0, 1));
  qroute::CnotBlock blk;
  blk.mapping = rc.initial_mapping;
  blk.physical_cnots = {{0, 1}};
  blk.source_indices = {0};
  rc.blocks.push_back(blk);

  std::string text = qroute::emit_program(rc, false);
  std::size_t first = text.find("cx ");
  CHECK(first != std::string::npos);
  CHECK(text.find("cx ", first + 1) == std::string::npos);
  CHECK(text.find("swap") == std::string::npos);
}

TEST_CASE("missing qreg is an error") {
  CHECK_THROWS_AS(qroute::parse_program("creg c[2];"), ParseError);
}
