#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "zshadow/lincode.hpp"

namespace zshadow {

/// Parses the text code format:
///
///   m <int>
///   n <int>
///   rows <int>
///   <row: n space-separated components>   (repeated `rows` times)
///
/// `#` starts a comment; blank lines are ignored. Throws ParseError with the
/// offending line number.
LinearCode parse_code(std::string_view text);

LinearCode read_code_file(const std::filesystem::path& path);

/// Writes the canonical generators in the same format; parse_code inverts it.
std::string format_code(const LinearCode& code);

void write_code_file(const std::filesystem::path& path, const LinearCode& code);

}  // namespace zshadow
