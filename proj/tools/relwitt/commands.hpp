#pragma once

#include <functional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "request.hpp"

namespace relwitt::cli {

struct Outcome {
  json output;
  int exit_code = 0;
};

struct OptionSpec {
  std::string name;
  std::string help;
  bool is_flag = false;
};

struct Command {
  std::string group;  // empty for top-level commands
  std::string name;
  std::string help;
  std::vector<OptionSpec> options;
  std::function<Outcome(const Request&)> run;
};

const std::vector<Command>& commands();

}  // namespace relwitt::cli
