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

#include "qroute/dependency.hpp"
#include "qroute/generator.hpp"
#include "qroute/router.hpp"

TEST_CASE("linear fixtures route to zero swaps") {
  for (std::uint64_t seed : {0, 1}) {  // brick and staircase variants
    auto prog = qroute::gen_linear(10, 80, seed);
    for (const auto& [c, t] : prog.cnot_indices())
      CHECK(std::abs(c - t) == 1);
    auto routed = qroute::route_meta(prog);
    CHECK(routed.swap_count() == 0);
  }
}

TEST_CASE("chain fixtures keep a single-gate front layer") {
  auto prog = qroute::gen_chain(7, 31, 4);
  CHECK(prog.cnot_count() == 31);
  auto deps = qroute::DependencyState::build(prog.cnot_indices());
  while (deps.remaining_count() > 0) {
    CHECK(deps.front_layer().size() == 1);
    deps.apply_cnot(*deps.front_layer().begin());
    deps.refresh_layers();
  }
}

TEST_CASE("generators are stable across calls") {
  auto a = qroute::gen_random(5, 30, 1);
  auto b = qroute::gen_random(5, 30, 1);
  CHECK(a.gates == b.gates);
  auto c = qroute::gen_random(5, 30, 2);
  CHECK(a.gates != c.gates);
}

TEST_CASE("triangle fixture") {
  auto prog = qroute::gen_triangle();
  CHECK(prog.cnot_indices() ==
        std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {0, 2}});
  CHECK_THROWS_AS(qroute::generate("nope", 4, 4, 0), std::invalid_argument);
}
