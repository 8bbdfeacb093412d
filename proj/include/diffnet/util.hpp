#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace diffnet {

using Seconds = std::int64_t;

constexpr Seconds kHour = 3600;
constexpr Seconds kDay = 24 * kHour;

/// Parses "90", "90s", "30m", "6h", "14d" into seconds. Throws InvalidArgument.
Seconds parse_duration(std::string_view text);

/// Inverse of parse_duration using the largest exact unit ("1h", "7d", "90s").
std::string format_duration(Seconds s);

/// Shortest decimal representation that round-trips to the same double.
std::string format_double(double v);

/// Splits one delimiter-separated line. No quoting support; fields must not
/// contain the delimiter.
std::vector<std::string> split_fields(std::string_view line, char delim = ',');

/// Runs body(i) for i in [0, n) on up to `jobs` threads. Results must be
/// written to index-addressed slots by the caller; the first exception thrown
/// by any task is rethrown after all workers join.
void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& body);

/// Hex SHA-256 digest of a file's bytes. Throws Io if unreadable.
std::string sha256_file(const std::string& path);
std::string sha256_hex(std::string_view bytes);

}  // namespace diffnet
