#ifndef LTM_MANIFEST_HPP
#define LTM_MANIFEST_HPP

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace ltm {

// Reproducibility record written atomically next to every command's output
// files.  Re-running a deterministic command from its manifest regenerates
// the outputs byte for byte.
struct RunManifest {
    std::string command;                            // e.g. "verify bounds"
    std::map<std::string, std::string> parameters;  // resolved flag values
    std::uint64_t seed = 0;
    std::string timestamp;     // ISO-8601 UTC
    std::string code_version;  // git describe at build time
    std::vector<std::string> outputs;  // file names relative to the out dir

    std::string to_json() const;
    static RunManifest from_json_file(const std::filesystem::path& path);

    // Structural check mirroring the shipped JSON schema; returns the list
    // of violated constraints (empty when valid).
    std::vector<std::string> validate() const;
};

// Write via a temporary file plus rename so readers never observe a partial
// manifest.
void write_manifest_atomic(const RunManifest& manifest,
                           const std::filesystem::path& path);

std::string iso8601_utc_now();

}  // namespace ltm

#endif
