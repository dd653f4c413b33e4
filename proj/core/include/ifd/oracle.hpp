#pragma once

#include "ifd/dimension.hpp"
#include "ifd/mass_function.hpp"

namespace ifd::oracle {

/// Largest frame the brute-force oracle accepts.
inline constexpr int kOracleFrameLimit = 20;

/// Reference report evaluated term by term over the focal elements in
/// storage order, in bits. Shares no code with the main evaluation path.
/// Throws FrameTooLarge.
DimensionReport brute_force_report(const MassFunction& mass);

/// Degenerate flags equal and every numeric field within `tol`.
bool compare_reports(const DimensionReport& a, const DimensionReport& b, double tol);

}  // namespace ifd::oracle
