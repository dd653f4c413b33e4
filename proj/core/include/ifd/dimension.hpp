#pragma once

#include "ifd/log_base.hpp"
#include "ifd/mass_function.hpp"
#include "ifd/profile.hpp"

namespace ifd {

/// Result of an information-dimension evaluation.
///
/// `entropy` and `split_scale` are expressed in the base the report was
/// requested in (bits unless stated otherwise). `dimension` is their ratio
/// and does not depend on the base. A degenerate report (a single singleton
/// focal element, or a one-outcome distribution) has every field zero.
struct DimensionReport {
  double entropy = 0.0;
  double split_scale = 0.0;
  double dimension = 0.0;
  bool degenerate = false;

  friend bool operator==(const DimensionReport&, const DimensionReport&) = default;
};

/// log sum_A (2^|A| - 1)^m(A). Zero only for a single singleton focal element.
double split_scale(const MassFunction& mass, LogBase base = LogBase::two());

double split_scale_profile(const CardinalityProfile& profile, LogBase base = LogBase::two());

DimensionReport information_dimension(const MassFunction& mass, LogBase base = LogBase::two());

DimensionReport information_dimension_profile(const CardinalityProfile& profile,
                                              LogBase base = LogBase::two());

/// Shannon entropy over log N. Degenerate for a single outcome.
DimensionReport probability_dimension(const ProbabilityDistribution& dist,
                                      LogBase base = LogBase::two());

}  // namespace ifd
