#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tsecon::detail {

std::string_view trim(std::string_view s);
std::string_view unquote(std::string_view s);
/// Plain decimal: [sign] digits [. digits] [e [sign] digits]. Rejects locale
/// separators, hex, inf/nan and empty cells.
bool is_plain_decimal(std::string_view s);
std::optional<double> parse_decimal(std::string_view s);
/// Lines without CR, BOM stripped, trailing blank lines dropped.
std::vector<std::string_view> split_lines(std::string_view text);
std::vector<std::string_view> split_fields(std::string_view line);
std::string read_file(const std::filesystem::path& path);

}  // namespace tsecon::detail
