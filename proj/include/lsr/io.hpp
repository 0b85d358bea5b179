#ifndef LSR_IO_HPP
#define LSR_IO_HPP

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "lsr/measure.hpp"

namespace lsr::io {

using nlohmann::json;

// {"supports": [...], "amplitudes_re": [...], "amplitudes_im": [...]}
json to_json(const DiscreteMeasure& mu);
DiscreteMeasure measure_from_json(const json& j);

// {"omega", "m", "sigma", "seed": int|null, "values_re": [...], "values_im": [...]}
json to_json(const Measurement& y);
Measurement measurement_from_json(const json& j);

/// Reads and parses a JSON file; throws Error(IoError) on failure.
json read_json_file(const std::filesystem::path& path);

/// Writes `contents` to a sibling temp file and renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, std::string_view contents);

/// Shortest-safe decimal form of a double: 17 significant digits.
std::string format_double(double x);

}  // namespace lsr::io

#endif  // LSR_IO_HPP
