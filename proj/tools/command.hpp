#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>

namespace hepta::cli {

enum class Subcommand { catalog, census, polygons, identities, verify_srg, params, construct };
enum class Engine { automatic, subset, extend };
enum class Format { json, csv, g6 };

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitInvalid = 2;

struct Command {
  Subcommand subcommand = Subcommand::catalog;
  std::filesystem::path host;
  bool all_records = false;
  Engine engine = Engine::automatic;
  int jobs = 0;
  Format format = Format::json;
  std::optional<std::filesystem::path> output;
  int order = 7;
  bool hamiltonian_only = true;
  std::int64_t max_k = 1000;
  std::string name;
};

struct ParseResult {
  std::optional<Command> command;
  int exit_code = kExitOk;  // meaningful when command is empty
  std::string message;      // usage error or help text
};

/// `args` excludes the program name.
ParseResult parse_args(std::span<const std::string> args);

int run(const Command& cmd, std::ostream& out, std::ostream& err);

}  // namespace hepta::cli
