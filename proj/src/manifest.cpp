#include "l1pde/manifest.hpp"

#include <cstdio>
#include <fstream>

#include <json.hpp>

#include "l1pde/errors.hpp"
#include "l1pde/version.hpp"

namespace l1pde {

std::string fnv1a64_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot hash missing file: " + path);
    std::uint64_t h = 0xcbf29ce484222325ULL;
    char buf[1 << 16];
    while (in.read(buf, sizeof buf) || in.gcount() > 0) {
        const std::streamsize got = in.gcount();
        for (std::streamsize i = 0; i < got; ++i) {
            h ^= std::uint8_t(buf[i]);
            h *= 0x100000001b3ULL;
        }
    }
    char hex[17];
    std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(h));
    return hex;
}

void RunManifest::write(const std::string& out_dir, const std::string& filename) {
    nlohmann::json j;
    j["tool"] = "l1pde";
    j["version"] = L1PDE_VERSION;
    j["command"] = command;
    j["config"] = config_echo;
    j["seed"] = seed;
    nlohmann::json jt = nlohmann::json::object();
    for (const auto& [name, sec] : timings_sec) jt[name] = sec;
    j["timings_sec"] = jt;
    nlohmann::json jf = nlohmann::json::array();
    for (auto& f : files) {
        const std::string full = out_dir + "/" + f.path;
        std::ifstream probe(full, std::ios::binary | std::ios::ate);
        if (!probe) throw IoError("manifest lists missing file: " + full);
        f.bytes = std::uint64_t(probe.tellg());
        f.hash = fnv1a64_file(full);
        jf.push_back({{"path", f.path}, {"bytes", f.bytes}, {"fnv1a64", f.hash}});
    }
    j["files"] = jf;
    j["warnings"] = warnings;
    j["report"] = nlohmann::json::parse(extra_json);

    const std::string full = out_dir + "/" + filename;
    std::ofstream out(full);
    if (!out) throw IoError("cannot write manifest: " + full);
    out << j.dump(2) << "\n";
    if (!out) throw IoError("manifest write failed: " + full);
}

} // namespace l1pde
