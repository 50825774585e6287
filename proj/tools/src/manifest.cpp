#include "manifest.hpp"

#include <fstream>
#include <json.hpp>

#include "mealy/error.hpp"

namespace mealy::cli {

std::string RunManifest::to_json() const {
    const double wall =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    nlohmann::ordered_json j;
    j["subcommand"] = subcommand;
    j["flags"] = flags;
    j["seed"] = seed;
    j["version"] = version;
    j["wall_time_seconds"] = wall;
    return j.dump(2) + "\n";
}

void write_output(const std::filesystem::path& path, const std::string& content, const RunManifest& manifest) {
    auto write = [](const std::filesystem::path& p, const std::string& text) {
        std::ofstream out(p, std::ios::binary);
        if (!out) throw Error("cannot write " + p.string());
        out << text;
    };
    write(path, content);
    write(path.string() + ".manifest.json", manifest.to_json());
}

} // namespace mealy::cli
