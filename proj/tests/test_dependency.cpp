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

#include <random>
#include <set>

#include "qroute/dependency.hpp"

using qroute::DependencyState;

namespace {

std::vector<std::pair<int, int>> random_cnots(int m, int n,
                                              std::mt19937_64& rng) {
  std::uniform_int_distribution<int> qubit(0, m - 1);
  std::vector<std::pair<int, int>> cnots;
  for (int i = 0; i < n; ++i) {
    int c = qubit(rng), t = qubit(rng);
    while (t == c) t = qubit(rng);
    cnots.emplace_back(c, t);
  }
  return cnots;
}

void check_invariants(const DependencyState& s) {
  int max_fwd = 0, max_rev = 0;
  for (int j : s.remaining_indices()) {
    CHECK(s.blockers(j).size() <= 2);
    CHECK((s.forward_layer(j) == 0) == s.blockers(j).empty());
    if (!s.blockers(j).empty()) {
      int best = -1;
      for (int i : s.blockers(j)) {
        CHECK(s.forward_layer(j) >= s.forward_layer(i) + 1);
        best = std::max(best, s.forward_layer(i));
      }
      CHECK(s.forward_layer(j) == best + 1);
    }
    max_fwd = std::max(max_fwd, s.forward_layer(j));
    max_rev = std::max(max_rev, s.reverse_layer(j));
    CHECK(s.forward_layer(j) + s.reverse_layer(j) <= s.max_layer());
  }
  if (s.remaining_count() > 0) {
    CHECK(max_fwd == s.max_layer());
    CHECK(max_rev == s.max_layer());
    CHECK(!s.front_layer().empty());
    // a longest-chain head sits in the front layer
    bool head_in_front = false;
    for (int j : s.front_layer())
      if (s.reverse_layer(j) == s.max_layer()) head_in_front = true;
    CHECK(head_in_front);
  }
}

bool same_state(const DependencyState& a, const DependencyState& b) {
  if (a.front_layer() != b.front_layer()) return false;
  if (a.max_layer() != b.max_layer()) return false;
  for (int j : a.remaining_indices()) {
    if (a.forward_layer(j) != b.forward_layer(j)) return false;
    if (a.reverse_layer(j) != b.reverse_layer(j)) return false;
    if (a.blockers(j) != b.blockers(j)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("chained CNOTs layer as a chain") {
  // (a,b), (b,c), (a,b) on qubits a=0, b=1, c=2
  auto s = DependencyState::build({{0, 1}, {1, 2}, {0, 1}});
  CHECK(s.forward_layer(0) == 0);
  CHECK(s.forward_layer(1) == 1);
  CHECK(s.forward_layer(2) == 2);
  CHECK(s.reverse_layer(0) == 2);
  CHECK(s.reverse_layer(1) == 1);
  CHECK(s.reverse_layer(2) == 0);
  CHECK(s.max_layer() == 2);
  CHECK(s.front_layer() == std::set<int>{0});
  check_invariants(s);
}

TEST_CASE("disjoint CNOTs share layer zero") {
  auto s = DependencyState::build({{0, 1}, {2, 3}});
  CHECK(s.forward_layer(0) == 0);
  CHECK(s.forward_layer(1) == 0);
  CHECK(s.max_layer() == 0);
  CHECK(s.front_layer() == std::set<int>{0, 1});
}

TEST_CASE("empty circuit") {
  auto s = DependencyState::build({});
  CHECK(s.max_layer() == 0);
  CHECK(s.front_layer().empty());
  CHECK(s.remaining_count() == 0);
  s.refresh_layers();
  CHECK(s.front_layer().empty());
}

TEST_CASE("front layer of three disjoint gates") {
  auto s = DependencyState::build({{0, 1}, {2, 3}, {4, 5}});
  CHECK(s.front_layer() == std::set<int>{0, 1, 2});
}

TEST_CASE("apply_cnot advances the front") {
  auto s = DependencyState::build({{0, 1}, {1, 2}});
  s.apply_cnot(0);
  CHECK(s.front_layer() == std::set<int>{1});

  auto t = DependencyState::build({{0, 1}, {2, 3}});
  t.apply_cnot(1);
  CHECK(t.front_layer() == std::set<int>{0});
}

TEST_CASE("apply_cnot rejects blocked gates") {
  auto s = DependencyState::build({{0, 1}, {1, 2}});
  CHECK_THROWS_AS(s.apply_cnot(1), qroute::NotInFrontLayer);
}

TEST_CASE("refresh is idempotent") {
  auto s = DependencyState::build({{0, 1}, {1, 2}, {0, 1}});
  auto t = s;
  t.refresh_layers();
  CHECK(same_state(s, t));
}

TEST_CASE("incremental update equals rebuild on random circuits") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 1000; ++trial) {
    int m = 2 + static_cast<int>(rng() % 7);   // M <= 8
    int n = 1 + static_cast<int>(rng() % 60);  // N <= 60
    auto cnots = random_cnots(m, n, rng);
    auto s = DependencyState::build(cnots);

    // apply a random front gate
    auto front = s.front_layer();
    auto it = front.begin();
    std::advance(it, rng() % front.size());
    int applied = *it;
    s.apply_cnot(applied);
    s.refresh_layers();
    check_invariants(s);

    // rebuild from scratch over the remaining list
    auto t = DependencyState::build(cnots);
    t.apply_cnot(applied);
    t.refresh_layers();
    CHECK(same_state(s, t));

    // and compare layers against a fresh build of the reduced list, mapped
    // through surviving indices
    std::vector<std::pair<int, int>> reduced;
    std::vector<int> ids;
    for (int j = 0; j < n; ++j) {
      if (j == applied) continue;
      reduced.push_back(cnots[j]);
      ids.push_back(j);
    }
    auto fresh = DependencyState::build(reduced);
    for (int k = 0; k < static_cast<int>(reduced.size()); ++k) {
      CHECK(fresh.forward_layer(k) == s.forward_layer(ids[k]));
      CHECK(fresh.reverse_layer(k) == s.reverse_layer(ids[k]));
    }
  }
}

TEST_CASE("layer index mirrors the forward layers") {
  std::mt19937_64 rng(99);
  auto cnots = random_cnots(6, 40, rng);
  auto s = DependencyState::build(cnots);
  for (int t = 0; t <= s.max_layer(); ++t)
    for (int j : s.cnots_in_layer(t)) CHECK(s.forward_layer(j) == t);
  int listed = 0;
  for (int t = 0; t <= s.max_layer(); ++t)
    listed += static_cast<int>(s.cnots_in_layer(t).size());
  CHECK(listed == s.remaining_count());
  CHECK(s.cnots_in_layer(s.max_layer() + 1).empty());
}

TEST_CASE("front layer is never empty while gates remain") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    auto cnots = random_cnots(5, 30, rng);
    auto s = DependencyState::build(cnots);
    while (s.remaining_count() > 0) {
      REQUIRE(!s.front_layer().empty());
      s.apply_cnot(*s.front_layer().begin());
      s.refresh_layers();
      check_invariants(s);
    }
  }
}
