#pragma once

#include <filesystem>
#include <string>
#include <string_view>

namespace drama::io {

/// Write-to-temp then rename, so readers never observe partial files.
void atomic_write(const std::filesystem::path& path, std::string_view content);

std::string read_file(const std::filesystem::path& path);

/// Shortest decimal rendering that round-trips the double exactly.
std::string format_double(double value);

}  // namespace drama::io
