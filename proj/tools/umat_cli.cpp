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


// Command-line front end: umat <command> <instance.json> [flags]

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "umat/commands.hpp"

namespace {

std::string summarize(const std::string& command, const nlohmann::json& out) {
  if (out.is_null()) return {};
  if (command == "color") {
    std::size_t blue = 0, red = 0, uncolored = 0;
    for (const auto& c : out) {
      blue += c["blue"].get<bool>();
      red += c["red"].get<bool>();
      uncolored += !c["certain"].get<bool>() && !c["blue"].get<bool>() && !c["red"].get<bool>();
    }
    return std::to_string(out.size()) + " elements: " + std::to_string(blue) + " blue, " +
           std::to_string(red) + " red, " + std::to_string(uncolored) + " uncolored uncertain";
  }
  if (command == "uob") {
    return out["exists"].get<bool>() ? "uniformly optimal basis " + out["basis"].dump()
                                     : "no uniformly optimal basis";
  }
  if (command == "core") return "core " + out["core"].dump();
  if (command == "witgraph") {
    return "core " + out["core"].dump() + ", " + std::to_string(out["cliques"].size()) + " clique(s)";
  }
  if (command == "mcfq") return "query " + out["query"].dump() + " at cost " + out["cost"].get<std::string>();
  if (command == "feasible") {
    return std::string(out["feasible"].get<bool>() ? "feasible" : "not feasible") +
           (out["minimal"].get<bool>() ? ", minimal" : "");
  }
  if (command == "verify") return out["pass"].get<bool>() ? "verification passed" : "verification FAILED";
  return {};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Uniformly optimal bases and minimum-cost feasible queries for uncertainty matroids"};
  app.require_subcommand(1);

  std::string path;
  umat::CommandOptions opts;
  std::string set_text;
  bool summary = false;
  bool pretty = false;

  struct Sub {
    const char* name;
    const char* help;
  };
  const Sub subs[] = {
      {"color", "blue/red/certain flags per element"},
      {"uob", "find a uniformly optimal basis"},
      {"core", "elements contained in every feasible query"},
      {"witgraph", "core and cliques of the witness graph"},
      {"mcfq", "minimum-cost feasible query (needs costs)"},
      {"feasible", "check whether --set is a (minimal) feasible query"},
      {"verify", "cross-check every fast path against exhaustive enumeration"},
  };
  for (const auto& sub_def : subs) {
    CLI::App* sub = app.add_subcommand(sub_def.name, sub_def.help);
    sub->add_option("instance", path, "instance JSON file")->required();
    sub->add_flag("--summary", summary, "print a one-line summary to stderr");
    sub->add_flag("--pretty", pretty, "indent the JSON output");
    if (std::string(sub_def.name) == "uob") {
      sub->add_option("--method", opts.method, "structural or regret")
          ->check(CLI::IsMember({"structural", "regret"}));
    }
    if (std::string(sub_def.name) == "verify") {
      sub->add_option("--limit", opts.limit, "maximum number of elements to enumerate");
    }
    if (std::string(sub_def.name) == "feasible") {
      sub->add_option("--set", set_text, "comma-separated element indices")->required();
    }
  }

  CLI11_PARSE(app, argc, argv);
  const std::string command = app.get_subcommands().front()->get_name();
  if (command == "feasible") opts.set = set_text;

  umat::CommandResult result = umat::run_command_file(command, path, opts);
  if (!result.output.is_null()) std::cout << result.output.dump(pretty ? 2 : -1) << "\n";
  if (!result.error.empty()) std::cerr << "error: " << result.error << "\n";
  if (summary) {
    std::string line = summarize(command, result.output);
    if (!line.empty()) std::cerr << line << "\n";
  }
  return result.exit_code;
}
