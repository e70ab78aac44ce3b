#include "l1pde/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "l1pde/errors.hpp"

namespace l1pde {

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

} // namespace

Config Config::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse(ss.str(), path);
}

Config Config::parse(const std::string& text, const std::string& origin) {
    Config cfg;
    cfg.origin_ = origin;
    std::stringstream ss(text);
    std::string line, section;
    int lineno = 0;
    while (std::getline(ss, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ConfigError(origin + ":" + std::to_string(lineno) + ": bad section");
            section = trim(line.substr(1, line.size() - 2));
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(origin + ":" + std::to_string(lineno) + ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty())
            throw ConfigError(origin + ":" + std::to_string(lineno) + ": empty key");
        const std::string full = section.empty() ? key : section + "." + key;
        if (cfg.kv_.count(full))
            throw ConfigError(origin + ":" + std::to_string(lineno) + ": duplicate key " + full);
        cfg.kv_[full] = value;
    }
    return cfg;
}

bool Config::has(const std::string& key) const { return kv_.count(key) > 0; }

std::string Config::get_string(const std::string& key) const {
    const auto it = kv_.find(key);
    if (it == kv_.end()) throw ConfigError(origin_ + ": missing required key '" + key + "'");
    return it->second;
}

std::string Config::get_string(const std::string& key, const std::string& fallback) const {
    const auto it = kv_.find(key);
    return it == kv_.end() ? fallback : it->second;
}

double Config::get_double(const std::string& key) const {
    const std::string s = get_string(key);
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end == s.c_str() || *end != '\0')
        throw ConfigError(origin_ + ": key '" + key + "' is not a number: " + s);
    return v;
}

double Config::get_double(const std::string& key, double fallback) const {
    return has(key) ? get_double(key) : fallback;
}

long Config::get_long(const std::string& key) const {
    const double v = get_double(key);
    const long l = long(v);
    if (double(l) != v)
        throw ConfigError(origin_ + ": key '" + key + "' is not an integer");
    return l;
}

long Config::get_long(const std::string& key, long fallback) const {
    return has(key) ? get_long(key) : fallback;
}

bool Config::get_bool(const std::string& key, bool fallback) const {
    if (!has(key)) return fallback;
    const std::string s = get_string(key);
    if (s == "true" || s == "1" || s == "yes" || s == "on") return true;
    if (s == "false" || s == "0" || s == "no" || s == "off") return false;
    throw ConfigError(origin_ + ": key '" + key + "' is not a boolean: " + s);
}

std::vector<double> Config::get_list(const std::string& key) const {
    std::stringstream ss(get_string(key));
    std::vector<double> out;
    std::string tok;
    while (ss >> tok) {
        char* end = nullptr;
        const double v = std::strtod(tok.c_str(), &end);
        if (end == tok.c_str() || *end != '\0')
            throw ConfigError(origin_ + ": key '" + key + "' has a non-numeric entry: " + tok);
        out.push_back(v);
    }
    if (out.empty()) throw ConfigError(origin_ + ": key '" + key + "' is an empty list");
    return out;
}

std::vector<double> Config::get_list(const std::string& key,
                                     std::vector<double> fallback) const {
    return has(key) ? get_list(key) : fallback;
}

std::string Config::echo() const {
    std::stringstream out;
    for (const auto& [k, v] : kv_) out << k << " = " << v << "\n";
    return out.str();
}

} // namespace l1pde
