#include "ltm/manifest.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace ltm {

using nlohmann::json;

std::string RunManifest::to_json() const {
    json j;
    j["command"] = command;
    j["parameters"] = parameters;
    j["seed"] = seed;
    j["timestamp"] = timestamp;
    j["code_version"] = code_version;
    j["outputs"] = outputs;
    return j.dump(2) + "\n";
}

RunManifest RunManifest::from_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open manifest " + path.string());
    json j = json::parse(in);
    RunManifest m;
    m.command = j.at("command").get<std::string>();
    m.parameters = j.at("parameters").get<std::map<std::string, std::string>>();
    m.seed = j.at("seed").get<std::uint64_t>();
    m.timestamp = j.at("timestamp").get<std::string>();
    m.code_version = j.at("code_version").get<std::string>();
    m.outputs = j.at("outputs").get<std::vector<std::string>>();
    return m;
}

std::vector<std::string> RunManifest::validate() const {
    std::vector<std::string> problems;
    if (command.empty()) problems.push_back("command must be a non-empty string");
    if (timestamp.size() < 20 || timestamp.find('T') == std::string::npos ||
        timestamp.back() != 'Z')
        problems.push_back("timestamp must be ISO-8601 UTC (ending in Z)");
    if (code_version.empty()) problems.push_back("code_version must be non-empty");
    for (const auto& out : outputs)
        if (out.empty() || out.find('/') == 0)
            problems.push_back("outputs must be relative, non-empty paths");
    return problems;
}

void write_manifest_atomic(const RunManifest& manifest,
                           const std::filesystem::path& path) {
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        out << manifest.to_json();
    }
    std::filesystem::rename(tmp, path);
}

std::string iso8601_utc_now() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace ltm
