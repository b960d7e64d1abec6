#pragma once

#include "arkimex/tableau.hpp"

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace arkimex {

inline constexpr int kCoefficientSchemaVersion = 1;

/// Parses a coefficient file. Coefficients are decimal strings converted with
/// correct rounding; every record is validated. Errors carry the line and the
/// field path of the offending value.
std::vector<ArkMethod> parse_coefficient_file(std::string_view text);

std::vector<ArkMethod> load_coefficient_file(const std::filesystem::path& path);

/// Writes methods using the shortest decimal strings that round-trip to the
/// same doubles, so parse(serialize(m)) reproduces m bitwise.
std::string serialize_coefficient_file(const std::vector<ArkMethod>& methods);

/// Parses one decimal coefficient string; throws std::invalid_argument on
/// trailing garbage or non-finite values.
double parse_decimal(std::string_view text);

/// Shortest round-trip decimal representation of x.
std::string format_decimal(double x);

}  // namespace arkimex
