#pragma once

#include <functional>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

namespace hahn::cli {

/// Parsed inputs of one command: named options plus repeated `--let` bindings.
struct Args {
    std::map<std::string, std::string> values;
    std::vector<std::string> lets;

    bool has(const std::string& key) const;
    const std::string& get(const std::string& key) const;
};

struct Outcome {
    nlohmann::json body;
    int exit_code = 0;
};

struct Command {
    std::vector<std::string> path;         // e.g. {"group", "fr"}
    std::vector<std::string> positionals;  // e.g. {"id"} for `embed <id>`
    std::vector<std::string> required;     // --name options
    std::vector<std::string> optional;
    std::vector<std::string> operations;   // library operations the command exposes
    std::string summary;
    std::function<Outcome(const Args&)> handler;
};

const std::vector<Command>& dispatch_table();

/// Runs the CLI on argv-style arguments (without the program name).
/// Exit codes: 0 success, 1 property failure, 2 usage or parse error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hahn::cli
