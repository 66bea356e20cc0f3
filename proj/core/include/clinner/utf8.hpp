#pragma once

#include <cstddef>
#include <string>
#include <string_view>

namespace clinner::utf8 {

/// Decodes UTF-8 into code points. Invalid byte sequences decode to U+FFFD
/// one byte at a time; decoding never fails (model output is dirty).
std::u32string decode(std::string_view text);

std::string encode(std::u32string_view text);
std::string encode(char32_t cp);

/// Number of Unicode scalar values in a UTF-8 string. All span offsets in
/// this library are counted in these units, never in bytes.
std::size_t length(std::string_view text);

/// Substring by code-point offsets [start, end) of a UTF-8 string.
std::string substr(std::string_view text, std::size_t start, std::size_t end);

bool is_space(char32_t cp);

}  // namespace clinner::utf8
