#include <fstream>
#include <iostream>
#include <map>
#include <memory>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "commands.hpp"
#include "relwitt/error.hpp"

namespace {

using nlohmann::json;
using relwitt::cli::Command;

constexpr int kUsage = 64;
constexpr int kInternal = 1;

void report_error(const std::string& kind, const std::string& message) {
  std::cerr << json{{"error", kind}, {"message", message}}.dump() << "\n";
}

struct Bound {
  const Command* command;
  CLI::App* app;
  std::map<std::string, std::string> values;
  std::map<std::string, bool> flags;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Relative Witt groups, unimodular rows and the Vaserstein symbol over small rings"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string config_path;
  app.add_option("--config", config_path, "JSON file with default values for the command's flags");

  std::map<std::string, CLI::App*> groups;
  std::vector<std::unique_ptr<Bound>> bound;
  for (const auto& cmd : relwitt::cli::commands()) {
    CLI::App* parent = &app;
    if (!cmd.group.empty()) {
      auto it = groups.find(cmd.group);
      if (it == groups.end()) {
        CLI::App* g = app.add_subcommand(cmd.group, cmd.group + " commands");
        g->require_subcommand(1);
        g->fallthrough();
        it = groups.emplace(cmd.group, g).first;
      }
      parent = it->second;
    }
    auto b = std::make_unique<Bound>();
    b->command = &cmd;
    b->app = parent->add_subcommand(cmd.name, cmd.help);
    for (const auto& opt : cmd.options) {
      if (opt.is_flag) {
        b->app->add_flag("--" + opt.name, b->flags[opt.name], opt.help);
      } else {
        b->app->add_option("--" + opt.name, b->values[opt.name], opt.help);
      }
    }
    bound.push_back(std::move(b));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    report_error("UsageError", e.what());
    return kUsage;
  }

  const Bound* chosen = nullptr;
  for (const auto& b : bound) {
    if (b->app->parsed()) chosen = b.get();
  }
  if (chosen == nullptr) {
    report_error("UsageError", "no command given");
    return kUsage;
  }

  json values = json::object();
  if (!config_path.empty()) {
    std::ifstream in(config_path);
    if (!in) {
      report_error("UsageError", "cannot read config " + config_path);
      return kUsage;
    }
    try {
      values = json::parse(in);
    } catch (const json::parse_error& e) {
      report_error("UsageError", std::string("config is not valid JSON: ") + e.what());
      return kUsage;
    }
    if (!values.is_object()) {
      report_error("UsageError", "config must be a JSON object");
      return kUsage;
    }
  }
  for (const auto& [name, value] : chosen->values) {
    if (chosen->app->count("--" + name) > 0) values[name] = value;
  }
  for (const auto& [name, value] : chosen->flags) {
    if (chosen->app->count("--" + name) > 0) values[name] = value;
  }

  try {
    relwitt::cli::Outcome out = chosen->command->run(relwitt::cli::Request(values));
    std::cout << out.output.dump(2) << "\n";
    return out.exit_code;
  } catch (const relwitt::cli::UsageError& e) {
    report_error("UsageError", e.what());
    return kUsage;
  } catch (const relwitt::AlgebraError& e) {
    report_error(std::string(relwitt::error_name(e.code())), e.what());
    return kInternal;
  } catch (const std::exception& e) {
    report_error("InternalError", e.what());
    return kInternal;
  }
}
