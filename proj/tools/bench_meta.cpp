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

// Times the ten-configuration meta-routing serially and with the OpenMP
// config sweep, checks both agree gate for gate, and prints a small table.

#ifdef _OPENMP
#include <omp.h>
#endif

#include <chrono>
#include <cstdio>
#include <string>

#include "qroute/generator.hpp"
#include "qroute/router.hpp"

namespace {

double wall_ms(bool parallel, const qroute::LogicalProgram& prog,
               int* swaps_out) {
  auto t0 = std::chrono::steady_clock::now();
  qroute::RoutedCircuit routed =
      qroute::route_meta(prog, {}, nullptr, parallel, /*seed=*/7);
  double ms = std::chrono::duration<double, std::milli>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
  *swaps_out = routed.swap_count();
  return ms;
}

}  // namespace

int main(int argc, char** argv) {
  int repeats = argc > 1 ? std::stoi(argv[1]) : 3;

#ifdef _OPENMP
  std::printf("OpenMP: %d thread(s)\n", omp_get_max_threads());
#else
  std::printf("OpenMP: disabled at build time\n");
#endif
  std::printf("%-24s %10s %12s %12s %8s\n", "circuit", "swaps", "serial ms",
              "parallel ms", "speedup");

  struct Case {
    const char* name;
    int m, n;
    std::uint64_t seed;
  };
  const Case cases[] = {
      {"random m=8 n=120", 8, 120, 11},
      {"random m=12 n=400", 12, 400, 12},
      {"random m=16 n=1000", 16, 1000, 13},
      {"chain m=10 n=200", 10, 200, 14},
  };

  for (const Case& c : cases) {
    qroute::LogicalProgram prog =
        std::string(c.name).rfind("chain", 0) == 0
            ? qroute::gen_chain(c.m, c.n, c.seed)
            : qroute::gen_random(c.m, c.n, c.seed);

    double best_serial = 1e300, best_parallel = 1e300;
    int swaps_serial = 0, swaps_parallel = 0;
    for (int r = 0; r < repeats; ++r) {
      best_serial = std::min(best_serial, wall_ms(false, prog, &swaps_serial));
      best_parallel =
          std::min(best_parallel, wall_ms(true, prog, &swaps_parallel));
    }
    if (swaps_serial != swaps_parallel) {
      std::fprintf(stderr, "MISMATCH on %s: serial=%d parallel=%d\n", c.name,
                   swaps_serial, swaps_parallel);
      return 1;
    }
    std::printf("%-24s %10d %12.2f %12.2f %7.2fx\n", c.name, swaps_serial,
                best_serial, best_parallel, best_serial / best_parallel);
  }
  return 0;
}
