#pragma once

#include "ifd/log_base.hpp"
#include "ifd/mass_function.hpp"
#include "ifd/profile.hpp"

namespace ifd {

/// -sum p log p. Zero exactly for a deterministic distribution.
double shannon_entropy(const ProbabilityDistribution& dist, LogBase base = LogBase::two());

/// log n, the entropy of the uniform distribution over n outcomes.
double shannon_max(int n, LogBase base = LogBase::two());

/// -sum_A m(A) log(m(A) / (2^|A| - 1)) over focal elements.
double deng_entropy(const MassFunction& mass, LogBase base = LogBase::two());

/// Grouped form over cardinality layers; O(N) regardless of the number of
/// focal sets.
double deng_entropy_profile(const CardinalityProfile& profile, LogBase base = LogBase::two());

/// log(3^n - 2^n): the Deng entropy of the maximum-entropy assignment over
/// the full power set of an n-element frame.
double max_deng_entropy(int n, LogBase base = LogBase::two());

}  // namespace ifd
