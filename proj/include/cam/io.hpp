#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cam {

// Full round-trip formatting: 17 significant digits, '.' separator.
std::string format_g17(double v);

// CSV with a header row and '\n' line endings; fields are written verbatim
// (callers format numbers with format_g17).
void write_csv(std::ostream& os, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows);

} // namespace cam
