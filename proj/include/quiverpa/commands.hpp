#pragma once

#include <string>

namespace qpa {

struct CommandOptions {
  int truncate = -1;        // -1: take the document's value, default 4
  bool structured = false;  // JSON instead of plain text
};

struct CommandResult {
  int exit_code = 0;  // 0 valid, 1 reported violations, 2 input errors
  std::string output;
};

/// Dispatches one CLI verb ("validate", "globalize", "restrict",
/// "algebra-check", "export-dot") over an instance document.
CommandResult run_command(const std::string& verb, const std::string& input,
                          const CommandOptions& opts = {});

}  // namespace qpa
