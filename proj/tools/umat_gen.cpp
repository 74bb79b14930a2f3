// Copyright 2026 The Authors.
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


// Writes a random instance as JSON: umat-gen --kind graphic --edges 12 ...

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "umat/generators.hpp"
#include "umat/io.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Random uncertainty-matroid instance generator"};
  std::string kind = "graphic";
  std::string areas = "mixed";
  std::size_t elements = 8;
  std::size_t vertices = 5;
  std::size_t rank = 2;
  int range = 4;
  std::uint64_t seed = 1;
  bool costs = false;
  app.add_option("--kind", kind, "graphic or uniform")->check(CLI::IsMember({"graphic", "uniform"}));
  app.add_option("--areas", areas, "finite, interval, mixed or zero_one")
      ->check(CLI::IsMember({"finite", "interval", "mixed", "zero_one"}));
  app.add_option("--elements", elements, "number of elements (edges for graphic)");
  app.add_option("--vertices", vertices, "vertex count for graphic instances")->check(CLI::PositiveNumber);
  app.add_option("--rank", rank, "rank for uniform instances");
  app.add_option("--range", range, "area values are drawn from [0, range]");
  app.add_option("--seed", seed, "random seed");
  app.add_flag("--costs", costs, "attach random (possibly negative) costs");
  CLI11_PARSE(app, argc, argv);

  umat::gen::Rng rng(seed);
  try {
    umat::Matroid m = kind == "graphic" ? umat::gen::random_connected_multigraph(rng, vertices, elements)
                                        : umat::Matroid::uniform(elements, rank);
    umat::gen::AreaKind ak = areas == "finite"     ? umat::gen::AreaKind::finite
                             : areas == "interval" ? umat::gen::AreaKind::interval
                             : areas == "mixed"    ? umat::gen::AreaKind::mixed
                                                   : umat::gen::AreaKind::zero_one;
    auto u = umat::gen::random_instance(rng, std::move(m), ak, range, 3, costs);
    std::cout << umat::io::to_json(u).dump(2) << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
