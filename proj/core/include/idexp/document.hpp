#pragma once

#include <optional>
#include <string>
#include <vector>

namespace idexp {

// Effective run options; unset fields fall back to the document's options
// block, then to the defaults 64 / 3 / 1.
struct RunOverrides {
  std::optional<int> degree_bound;
  std::optional<int> search_depth;
  std::optional<int> extensions;
};

struct CommandResult {
  std::string report;             // JSON text, stable key order
  std::optional<std::string> svg; // present when the command drew a plot
};

const std::vector<std::string>& command_names();

// Parse the document, run one command, return the JSON report. The report
// embeds the normalized input; re-running a command on that embedded copy
// reproduces the report byte for byte.
CommandResult run_command(const std::string& command, const std::string& document_text,
                          const RunOverrides& overrides = {});

}  // namespace idexp
