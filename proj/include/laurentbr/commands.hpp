#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace laurentbr {

enum class OutputFormat { Text, Json };

struct RunConfig {
  /// Base field descriptor; empty means F_p.
  std::string base;
  /// 0 means the characteristic of the base.
  int p = 0;
  /// 0 means the command default.
  int n = 0;
  /// "lo..hi" or per-variable ranges; unset means the command default.
  std::optional<std::string> window;
  long budget = 1000000;
  OutputFormat format = OutputFormat::Text;

  /// Applies one key=value setting (keys base, p, n, window, budget, format).
  void set(const std::string& key, const std::string& value);
  /// Reads key=value lines; '#' starts a comment.
  static RunConfig from_file(const std::string& path);
  /// Config from the file named by LAURENTBR_CONFIG, or defaults.
  static RunConfig from_environment();
  void validate() const;
};

struct Command {
  std::string name;
  std::map<std::string, std::string> args;
  RunConfig config;
};

const std::vector<std::string>& command_names();

/// Provenance of a reported value: "computed" by this library, "formula"
/// evaluated in closed form, or "cited-result" taken from the literature.
struct Claim {
  std::string name;
  nlohmann::json value;
  std::string source;
};

struct Report {
  std::string command;
  nlohmann::json inputs = nlohmann::json::object();
  nlohmann::json results = nlohmann::json::object();
  std::vector<Claim> claims;
  std::vector<std::string> trace;
  std::string error;
  double duration_ms = 0;
  int exit_code = 0;

  nlohmann::json to_json() const;
  std::string to_text() const;
  std::string render(OutputFormat f) const;
};

/// Exit codes: 0 success, 1 Unknown or expectation mismatch, 2 input error.
Report run(const Command& command);

Report report_all(const RunConfig& config);

}  // namespace laurentbr
