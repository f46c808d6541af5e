#pragma once

#include <string>
#include <string_view>

namespace pseudospec {

/// Shortest decimal string that parses back to exactly x; "inf", "-inf", "nan"
/// for non-finite values.
std::string format_double(double x);

/// Inverse of format_double. ConfigError on malformed input.
double parse_double(std::string_view text);

/// Writes text to path, replacing the file. IoError on failure.
void write_text_file(const std::string& path, std::string_view text);

}  // namespace pseudospec
