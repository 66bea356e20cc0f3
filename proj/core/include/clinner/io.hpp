#pragma once

#include <filesystem>
#include <string>
#include <string_view>

namespace clinner::io {

/// Reads a whole file; throws ParseError when the file cannot be opened.
std::string read_file(const std::filesystem::path& path);

/// Writes content atomically: a unique temp file in the target directory is
/// written, flushed, and renamed over the destination. An interrupted run
/// never leaves a truncated file behind.
void atomic_write_file(const std::filesystem::path& path,
                       std::string_view content);

}  // namespace clinner::io
