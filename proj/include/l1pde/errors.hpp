#pragma once

#include <stdexcept>
#include <string>

namespace l1pde {

/** Invalid run configuration (bad grid, CFL violation, malformed recipe).
 *  The CLI maps this to exit code 2. */
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/** File read/write failure. Mapped to exit code 4 by the CLI. */
struct IoError : std::runtime_error {
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace l1pde
