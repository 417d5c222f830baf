#ifndef SUBSEL_POINT_IO_HPP
#define SUBSEL_POINT_IO_HPP

#include <filesystem>
#include <string>
#include <string_view>

#include "subsel/core.hpp"

namespace subsel {

// Text format: a header line "m=<int>", then one point per line with
// comma-separated values in shortest round-trip decimal form.
// Binary format: "PSS1", uint64 m, uint64 n, then n*m little-endian doubles.

enum class PointFormat { Csv, Binary };

PointFormat parse_point_format(std::string_view name);

std::string to_csv(const PointSet& s);

/**
 * Parses point rows. The "m=" header is optional; values may be separated
 * by commas, semicolons or whitespace; blank lines and lines starting with
 * '#' are ignored. Malformed numbers or ragged rows raise InvalidInput.
 */
PointSet parse_points(std::string_view text);

std::string to_binary(const PointSet& s);
PointSet parse_binary(std::string_view bytes);

void write_points(const PointSet& s, const std::filesystem::path& path, PointFormat format = PointFormat::Csv);

/// Reads either format (binary is recognised by its magic bytes).
PointSet read_points(const std::filesystem::path& path);

}  // namespace subsel

#endif
