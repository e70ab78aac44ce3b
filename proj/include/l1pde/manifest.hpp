#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace l1pde {

/// FNV-1a 64-bit content hash, reported as 16 hex digits.
std::string fnv1a64_file(const std::string& path);

struct ManifestFile {
    std::string path; // relative to the output directory
    std::uint64_t bytes = 0;
    std::string hash;
};

/** Reproducibility record written next to every run's outputs: echo of the
 *  config, seed, library version, per-file content hashes, phase timings. */
struct RunManifest {
    std::string command;
    std::string config_echo;
    std::uint64_t seed = 0;
    std::vector<std::pair<std::string, double>> timings_sec;
    std::vector<ManifestFile> files;
    std::vector<std::string> warnings;
    std::string extra_json = "{}"; // scenario-specific report payload

    /// Hashes each listed file (paths resolved against out_dir) and writes JSON.
    void write(const std::string& out_dir, const std::string& filename = "manifest.json");
};

} // namespace l1pde
