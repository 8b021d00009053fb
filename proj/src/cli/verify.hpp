#pragma once

#include <string>
#include <vector>

#include "permres/cli/commands.hpp"

namespace permres::cli {

/// Appends one record per check of the named suite ("all" runs every suite).
void run_suite(const std::string& suite, Context& ctx, std::vector<ResultRecord>& out);

}  // namespace permres::cli
