// Reading observation files: one value per line (plain text or a
// single-column CSV, optionally with a header row).

#pragma once

#include <filesystem>
#include <istream>
#include <vector>

#include "loovar/model.hpp"

namespace loovar {

// Blank lines and '#' comments are skipped; a trailing comma per line is
// tolerated. A first line that does not parse as a number is treated as a
// header; anywhere else it is an error naming the line.
std::vector<double> read_values(std::istream& in);

Dataset read_dataset(const std::filesystem::path& path);

}  // namespace loovar
