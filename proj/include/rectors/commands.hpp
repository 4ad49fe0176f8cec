#pragma once

#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "rectors/error.hpp"

namespace rectors {

struct CommandRequest {
  std::string command;
  std::vector<std::string> inputs;
  // torsion, free, class, mode, morphism
  std::map<std::string, std::string> options;
  bool timing = true;
  Limits limits;
};

enum class Outcome { Pass = 0, Fail = 1, InputError = 2 };

struct CommandResult {
  Outcome outcome = Outcome::InputError;
  nlohmann::json report;
  std::string text;
  std::string json() const { return report.dump(2) + "\n"; }
};

const std::vector<std::string>& command_names();

// Never throws for bad input; errors land in the report with Outcome::InputError.
CommandResult run_command(const CommandRequest& req);

}  // namespace rectors
