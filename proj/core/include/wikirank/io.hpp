#pragma once

#include <filesystem>
#include <string>
#include <string_view>

namespace wikirank {

// Reads a whole file into memory. Throws IoError on failure.
std::string read_file(const std::filesystem::path& path);

// Writes content to path atomically: the data goes to a temporary file in
// the same directory which is then renamed over the target, so readers never
// observe a partial file. Throws IoError on failure.
void atomic_write_file(const std::filesystem::path& path,
                       std::string_view content);

}  // namespace wikirank
