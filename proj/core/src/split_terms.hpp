#pragma once

// Natural-log kernels shared by the entropy and dimension evaluators.

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <limits>

#include "ifd/combinatorics.hpp"
#include "ifd/mass_function.hpp"
#include "ifd/profile.hpp"

namespace ifd::detail {

inline double layer_mass(const ProfileRow& row) {
  if (row.set_count.exact && row.per_set_mass >= DBL_MIN) {
    return static_cast<double>(*row.set_count.exact) * row.per_set_mass;
  }
  return std::exp(row.set_count.log + row.log_per_set_mass);
}

inline double deng_entropy_nats(const MassFunction& mass) {
  double h = 0.0;
  for (const auto& f : mass.focal()) {
    h += f.mass * (combinatorics::log_pow2_minus_one(f.subset.cardinality()) - std::log(f.mass));
  }
  return h;
}

inline double deng_entropy_nats(const CardinalityProfile& profile) {
  double h = 0.0;
  for (const auto& row : profile.rows()) {
    const double weight = layer_mass(row);
    if (weight == 0.0) continue;
    h += weight * (combinatorics::log_pow2_minus_one(row.cardinality) - row.log_per_set_mass);
  }
  return h;
}

inline double split_scale_nats(const MassFunction& mass) {
  double sum = 0.0;
  for (const auto& f : mass.focal()) {
    sum += std::exp(f.mass * combinatorics::log_pow2_minus_one(f.subset.cardinality()));
  }
  return std::log(sum);
}

// log-sum-exp over layers of ln(count_k) + m_k ln(2^k - 1), ascending k.
inline double split_scale_nats(const CardinalityProfile& profile) {
  const auto& rows = profile.rows();
  if (rows.empty()) return 0.0;
  double peak = -std::numeric_limits<double>::infinity();
  for (const auto& row : rows) {
    peak = std::max(peak, row.set_count.log +
                              row.per_set_mass * combinatorics::log_pow2_minus_one(row.cardinality));
  }
  double sum = 0.0;
  for (const auto& row : rows) {
    sum += std::exp(row.set_count.log +
                    row.per_set_mass * combinatorics::log_pow2_minus_one(row.cardinality) - peak);
  }
  return peak + std::log(sum);
}

}  // namespace ifd::detail
