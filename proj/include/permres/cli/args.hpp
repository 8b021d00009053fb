#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "permres/cli/envelope.hpp"

namespace permres::cli {

/// Either a request to run, or an exit code with text to print (help,
/// version, or a usage error).
struct ParseOutcome {
    std::optional<CommandRequest> request;
    int exit_code = 0;
    std::string message;
};

ParseOutcome parse_command_line(const std::vector<std::string>& args);

/// "a..b" or "a" as an inclusive range. Throws std::invalid_argument.
std::pair<int, int> parse_range(const std::string& text);

/// Comma- or space-separated integers. Throws std::invalid_argument.
std::vector<int> parse_int_list(const std::string& text);

}  // namespace permres::cli
