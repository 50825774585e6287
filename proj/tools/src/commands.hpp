#pragma once

#include <CLI11.hpp>
#include <functional>
#include <map>
#include <stdexcept>

#include "manifest.hpp"

namespace mealy::cli {

/// Bad command-line input that CLI11 cannot see (missing automaton, bad word).
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Context {
    RunManifest manifest;
    unsigned jobs = 1;
    /// Subcommand -> action returning the exit code.
    std::map<const CLI::App*, std::function<int()>> actions;
};

void add_commands(CLI::App& app, Context& ctx);

} // namespace mealy::cli
