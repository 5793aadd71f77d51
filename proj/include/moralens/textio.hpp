#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace moralens {

// Full-precision decimal form that round-trips through strtod. Used for all
// numeric artifacts so stage outputs are byte-stable across reruns.
std::string format_double(double v);

// Fixed-point form for human-facing tables.
std::string format_fixed(double v, int digits);

std::string read_file(const std::string& path);
std::vector<std::string> read_lines(const std::string& path);
void write_file(const std::string& path, const std::string& content);

std::string trim(std::string_view s);
std::vector<std::string> split(std::string_view s, char sep);
std::string to_lower_ascii(std::string_view s);
bool ends_with(std::string_view s, std::string_view suffix);

// Minimal CSV row writer; quotes fields containing separators or quotes.
std::string csv_row(const std::vector<std::string>& fields);

}  // namespace moralens
