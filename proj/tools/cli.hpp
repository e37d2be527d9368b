#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "bhr/edge_list.hpp"
#include "bhr/error.hpp"
#include "bhr/path.hpp"

namespace bhr::cli {

enum ExitCode : int { kSuccess = 0, kUsage = 2, kNegative = 3, kUnknown = 4 };

struct UsageError : Error {
  using Error::Error;
};

enum class Output { text, record };

struct CommandConfig {
  std::string command;
  std::optional<EdgeLengthList> list;
  std::optional<int> v;
  std::optional<std::vector<int>> path;
  std::optional<Mode> mode;
  bool perfect = false;
  std::uint64_t budget = 0;
  Output output = Output::text;
  std::optional<std::filesystem::path> checkpoint;
  bool no_checkpoint = false;
  int workers = 1;
  int cap = 13;
  int max_param = 10;
  std::optional<std::filesystem::path> cert_dir;
  std::optional<std::filesystem::path> catalog;
};

// Default node budget: BHR_BUDGET when set, else the library default.
std::uint64_t default_budget();

// Parses argv into a config. Throws UsageError with the offending position for
// malformed list or path syntax. Returns nullopt after printing help.
std::optional<CommandConfig> parse_arguments(int argc, const char* const* argv, std::ostream& out);

// Runs one command and returns its exit code.
int run(const CommandConfig& config, std::ostream& out, std::ostream& err);

// parse_arguments + run, mapping usage errors to exit code 2.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bhr::cli
