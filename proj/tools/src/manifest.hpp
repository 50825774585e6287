#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace mealy::cli {

/// What produced an output file: enough to rerun it.
struct RunManifest {
    std::string subcommand;
    std::map<std::string, std::vector<std::string>> flags;
    std::uint64_t seed = 1;
    std::string version;
    std::chrono::steady_clock::time_point started = std::chrono::steady_clock::now();

    std::string to_json() const;
};

/// Writes `content` to `path` and the manifest to `path.manifest.json`.
void write_output(const std::filesystem::path& path, const std::string& content, const RunManifest& manifest);

} // namespace mealy::cli
