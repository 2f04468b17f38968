#pragma once

#include <map>
#include <string>
#include <vector>

namespace hypercen::cli {

// Record of a CLI run: the exact argv, the resolved flag values, and
// digests of every file read or written. Contains nothing time- or
// host-dependent, so a rerun of the same command produces the same
// manifest byte for byte.
struct RunManifest {
    std::string subcommand;
    std::vector<std::string> argv;           // without the program name
    std::map<std::string, std::string> flags;  // resolved values, defaults included
    std::string version;
    std::map<std::string, std::string> input_digests;   // path -> sha256:...
    std::map<std::string, std::string> output_digests;

    std::string to_json() const;
    static RunManifest from_json(const std::string& text);

    // Written next to the primary output as <output>.manifest.json.
    static std::string path_for(const std::string& primary_output);
};

std::string sha256_hex(const std::string& bytes);
std::string file_digest(const std::string& path);

} // namespace hypercen::cli
