#include "hypercen/manifest.hpp"

#include "hypercen/errors.hpp"
#include "hypercen/io.hpp"

#include <json.hpp>
#include <openssl/evp.h>

#include <array>
#include <memory>

namespace hypercen::cli {

namespace {

using nlohmann::json;

} // namespace

std::string sha256_hex(const std::string& bytes) {
    std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
    unsigned int length = 0;
    const std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(),
                                                                      &EVP_MD_CTX_free);
    if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
        EVP_DigestUpdate(ctx.get(), bytes.data(), bytes.size()) != 1 ||
        EVP_DigestFinal_ex(ctx.get(), digest.data(), &length) != 1)
        throw IoError("sha256 computation failed");
    static const char* hex = "0123456789abcdef";
    std::string out;
    out.reserve(2 * length);
    for (unsigned int i = 0; i < length; ++i) {
        out.push_back(hex[digest[i] >> 4]);
        out.push_back(hex[digest[i] & 0xF]);
    }
    return out;
}

std::string file_digest(const std::string& path) {
    return "sha256:" + sha256_hex(io::read_file(path));
}

std::string RunManifest::to_json() const {
    json doc;
    doc["subcommand"] = subcommand;
    doc["argv"] = argv;
    doc["flags"] = flags;
    doc["version"] = version;
    doc["inputs"] = input_digests;
    doc["outputs"] = output_digests;
    return doc.dump(2) + "\n";
}

RunManifest RunManifest::from_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(e.what(), "manifest");
    }
    RunManifest manifest;
    manifest.subcommand = doc.value("subcommand", "");
    if (doc.contains("argv"))
        manifest.argv = doc["argv"].get<std::vector<std::string>>();
    if (doc.contains("flags"))
        manifest.flags = doc["flags"].get<std::map<std::string, std::string>>();
    manifest.version = doc.value("version", "");
    if (doc.contains("inputs"))
        manifest.input_digests = doc["inputs"].get<std::map<std::string, std::string>>();
    if (doc.contains("outputs"))
        manifest.output_digests = doc["outputs"].get<std::map<std::string, std::string>>();
    return manifest;
}

std::string RunManifest::path_for(const std::string& primary_output) {
    return primary_output + ".manifest.json";
}

} // namespace hypercen::cli
