#pragma once

#include <string>

#include "l1pde/grid.hpp"

namespace l1pde {

/** CSV field format:
 *    # grid: d=<dim> n=<n> xmin=<..> xmax=<..>
 *  then one value per line (1D) or n lines of n comma-separated values (2D),
 *  written with 17 significant digits. */
void write_field_csv(const Field& u, const std::string& path);
Field read_field_csv(const std::string& path);

/// 0/1 mask in the same layout as the field CSV.
void write_mask_csv(const Grid& g, const std::vector<std::uint8_t>& mask,
                    const std::string& path);

} // namespace l1pde
