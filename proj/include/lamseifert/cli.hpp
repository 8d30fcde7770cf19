#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace lamseifert::cli {

enum ExitCode { kOk = 0, kDomainError = 1, kUsageError = 2 };

struct RunConfig {
  std::string command;
  std::string input;
  /// A path to a JSON file, or inline JSON text.
  std::optional<std::string> weights;
  std::optional<std::string> twists;
  int precision = 64;
  std::string format = "json";
  std::optional<std::string> out;
  bool batch = false;
  bool stroke_by_weight = true;
  bool overlay = false;
};

int cmd_validate(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_cone(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_seifert(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_twistspace(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_svg(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Dispatches one command, or maps it over every *.json file in a directory
/// when `batch` is set. Writes to `config.out` when given.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv and runs. Usage errors exit 2.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lamseifert::cli
