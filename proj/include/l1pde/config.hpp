#pragma once

#include <map>
#include <string>
#include <vector>

namespace l1pde {

/** Key-value run configuration with nested [section]s:
 *
 *    # comment
 *    problem = heat1d
 *    [grid]
 *    n = 500
 *    snapshot_times = 0 0.398 1.594
 *
 *  Keys outside any section live in the "" section. Addressing uses
 *  "section.key" (or plain "key" for the top level). */
class Config {
  public:
    static Config load(const std::string& path);
    static Config parse(const std::string& text, const std::string& origin = "<string>");

    bool has(const std::string& key) const;
    std::string get_string(const std::string& key) const;
    std::string get_string(const std::string& key, const std::string& fallback) const;
    double get_double(const std::string& key) const;
    double get_double(const std::string& key, double fallback) const;
    long get_long(const std::string& key) const;
    long get_long(const std::string& key, long fallback) const;
    bool get_bool(const std::string& key, bool fallback) const;
    std::vector<double> get_list(const std::string& key) const;
    std::vector<double> get_list(const std::string& key, std::vector<double> fallback) const;

    /// Canonical text form (sorted keys), echoed into run manifests.
    std::string echo() const;

    const std::map<std::string, std::string>& entries() const { return kv_; }

  private:
    std::map<std::string, std::string> kv_;
    std::string origin_;
};

} // namespace l1pde
