#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "ifd/dimension.hpp"
#include "ifd/mass_function.hpp"

namespace ifd::io {

/// Parses the mass-function document
///   {"frame": [labels...], "focal": [{"elements": [labels...], "mass": x}, ...]}
/// Unknown keys and malformed structure raise MalformedInput; domain
/// violations raise the corresponding evidence-core error.
MassFunction parse_mass_json(std::string_view text, double tolerance = kDefaultMassTolerance);

MassFunction read_mass_json(const std::filesystem::path& path,
                            double tolerance = kDefaultMassTolerance);

/// Focal elements in storage order, masses at round-trip precision.
std::string mass_to_json(const MassFunction& mass);

/// {"entropy_bits":..,"split_scale_bits":..,"dimension":..,"degenerate":..}
std::string report_to_json(const DimensionReport& report);

DimensionReport report_from_json(std::string_view text);

}  // namespace ifd::io
