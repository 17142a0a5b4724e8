#pragma once

// Command-line front end. Subcommands: enum, compose, matrix, resolve, ext,
// cheb, check. Global flags: --format json|csv|text (default json), --out,
// --seed, --max, --serial, --timing.
//
// JSON output is wrapped as
//   {"schema_version": 1, "command": "...", "status": "ok"|"error", "payload": {...}}
// with "elapsed_ms" added only under --timing, so repeated runs are
// byte-identical by default.
//
// Exit codes: 0 success, 1 failed check, 2 usage or input error.

#include <ostream>
#include <string>
#include <vector>

#include "chebtl/io.hpp"

namespace chebtl::cli {

inline constexpr int kSchemaVersion = 1;

struct CommandResult {
  enum class Status { ok, error };
  Status status = Status::ok;
  std::string command;
  Json payload;
  double elapsed_ms = 0;
  int exit_code = 0;
};

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chebtl::cli
