#pragma once

#include <filesystem>
#include <string>

#include "cvtele/grid.hpp"

namespace cvtele {

// Grids are stored as a pair of files: `<stem>.csv` with the header row
// "alpha_r,alpha_i,value" followed by one row per node (alpha_r major), and
// `<stem>.json` with {"sigma", "extent", "resolution", "pure_origin"}.
// Numbers are written with 12 significant digits.

std::string format_number(double x);

void write_grid(const WignerGrid& g, const std::filesystem::path& stem);

// Throws std::runtime_error on malformed input, std::ios_base::failure on I/O.
WignerGrid read_grid(const std::filesystem::path& stem);

}  // namespace cvtele
