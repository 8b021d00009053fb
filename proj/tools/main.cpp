#include <iostream>

#include "permres/cli/args.hpp"
#include "permres/cli/commands.hpp"

int main(int argc, char** argv) {
    using namespace permres::cli;
    std::vector<std::string> args(argv + 1, argv + argc);
    const ParseOutcome parsed = parse_command_line(args);
    if (!parsed.request) {
        (parsed.exit_code == 0 ? std::cout : std::cerr) << parsed.message;
        return parsed.exit_code;
    }
    const ResultEnvelope env = run(*parsed.request);
    switch (parsed.request->format) {
        case OutputFormat::json: std::cout << to_json(env).dump(2) << '\n'; break;
        case OutputFormat::csv:
            std::cout << to_csv(env);
            if (!env.error.empty()) std::cerr << "error: " << env.error << '\n';
            break;
        case OutputFormat::text: std::cout << to_text(env); break;
    }
    return exit_code(env.status);
}
