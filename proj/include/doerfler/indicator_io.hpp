#pragma once

// Indicator files: `.f64` holds raw little-endian IEEE-754 doubles; any other
// extension (canonically `.txt`) holds one decimal number per line. Blank
// lines are ignored. Marked-index files list 0-based indices, one per line.

#include <cstddef>
#include <filesystem>
#include <span>
#include <string_view>
#include <vector>

#include "doerfler/core.hpp"

namespace doerfler {

enum class IndicatorFormat { kText, kBinary };

IndicatorFormat format_for(const std::filesystem::path& path);

/// Parses text; errors carry the 1-based line number.
std::vector<double> parse_indicator_text(std::string_view text);
std::vector<double> parse_indicator_binary(std::span<const std::byte> bytes);

/// Throws Error{kResourceError} when the file cannot be read,
/// Error{kParseError} for malformed content and
/// Error{kInvalidIndicatorVector} for content that is not a valid vector.
IndicatorVector read_indicator_file(const std::filesystem::path& path);

void write_indicator_file(const std::filesystem::path& path, std::span<const double> values);
void write_marked_indices(const std::filesystem::path& path, std::span<const std::size_t> marked);

}  // namespace doerfler
