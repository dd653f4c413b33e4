#include "ifd/profile.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <limits>
#include <map>
#include <string>

#include "ifd/combinatorics.hpp"
#include "ifd/error.hpp"
#include "split_terms.hpp"

namespace ifd {
namespace {

constexpr double kSymmetryTolerance = 1e-12;


bool exceeds_binomial(int n, const ProfileRow& row) {
  const auto bound = combinatorics::binomial_exact(n, row.cardinality);
  if (bound && row.set_count.exact) return *row.set_count.exact > *bound;
  // Log-domain comparison with slack for lgamma rounding.
  const double log_bound = combinatorics::log_binomial(n, row.cardinality);
  return row.set_count.log > log_bound + 1e-9 * std::max(1.0, std::abs(log_bound));
}

std::vector<ProfileRow> validate(int frame_size, std::vector<ProfileRow> rows, double tolerance) {
  if (frame_size < 1) throw Error(ErrorCode::InvalidProfile, "frame size must be at least 1");
  if (frame_size > kDefaultProfileLimit) {
    throw Error(ErrorCode::FrameTooLarge, "profile frame size " + std::to_string(frame_size) +
                                              " exceeds " + std::to_string(kDefaultProfileLimit));
  }
  if (!(tolerance > 0.0)) throw Error(ErrorCode::InvalidArgument, "tolerance must be positive");

  std::erase_if(rows, [](const ProfileRow& r) { return r.set_count.is_zero(); });
  std::ranges::sort(rows, {}, &ProfileRow::cardinality);

  double total = 0.0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const ProfileRow& row = rows[i];
    if (row.cardinality < 1 || row.cardinality > frame_size) {
      throw Error(ErrorCode::InvalidProfile,
                  "cardinality " + std::to_string(row.cardinality) + " outside [1, N]");
    }
    if (i > 0 && rows[i - 1].cardinality == row.cardinality) {
      throw Error(ErrorCode::InvalidProfile,
                  "cardinality " + std::to_string(row.cardinality) + " listed twice");
    }
    if (exceeds_binomial(frame_size, row)) {
      throw Error(ErrorCode::InvalidProfile,
                  "more sets of cardinality " + std::to_string(row.cardinality) +
                      " than C(N, k)");
    }
    if (std::isnan(row.log_per_set_mass) || row.per_set_mass < 0.0 ||
        row.log_per_set_mass == -std::numeric_limits<double>::infinity() ||
        row.log_per_set_mass > 0.0) {
      throw Error(ErrorCode::InvalidProfile,
                  "per-set mass of a populated layer must lie in (0, 1]");
    }
    total += detail::layer_mass(row);
  }
  if (!(std::abs(total - 1.0) <= tolerance)) {
    throw Error(ErrorCode::NonUnitTotal,
                "profile mass must total 1, got " + std::to_string(total));
  }
  return rows;
}

// Next mask with the same popcount (Gosper).
std::uint64_t next_combination(std::uint64_t x) {
  const std::uint64_t c = x & (~x + 1);
  const std::uint64_t r = x + c;
  return (((r ^ x) >> 2) / c) | r;
}

}  // namespace

SetCount SetCount::of(std::uint64_t n) {
  return SetCount{n, n == 0 ? -std::numeric_limits<double>::infinity()
                            : std::log(static_cast<double>(n))};
}

SetCount SetCount::from_log(double log_count) { return SetCount{std::nullopt, log_count}; }

double SetCount::approx() const noexcept {
  return exact ? static_cast<double>(*exact) : std::exp(log);
}

CardinalityProfile CardinalityProfile::make(int frame_size, const std::vector<Layer>& layers,
                                            double tolerance) {
  std::vector<ProfileRow> rows;
  rows.reserve(layers.size());
  for (const auto& layer : layers) {
    if (!std::isfinite(layer.per_set_mass)) {
      throw Error(ErrorCode::InvalidProfile, "per-set mass must be finite");
    }
    rows.push_back(ProfileRow{layer.cardinality, layer.set_count, layer.per_set_mass,
                              layer.per_set_mass > 0.0
                                  ? std::log(layer.per_set_mass)
                                  : -std::numeric_limits<double>::infinity()});
  }
  return CardinalityProfile(frame_size, validate(frame_size, std::move(rows), tolerance));
}

CardinalityProfile CardinalityProfile::make_log(int frame_size, std::vector<ProfileRow> rows,
                                                double tolerance) {
  for (auto& row : rows) row.per_set_mass = std::exp(row.log_per_set_mass);
  return CardinalityProfile(frame_size, validate(frame_size, std::move(rows), tolerance));
}

const ProfileRow* CardinalityProfile::row(int cardinality) const noexcept {
  for (const auto& r : rows_) {
    if (r.cardinality == cardinality) return &r;
  }
  return nullptr;
}

bool CardinalityProfile::is_single_singleton() const noexcept {
  return rows_.size() == 1 && rows_[0].cardinality == 1 && rows_[0].set_count.exact &&
         *rows_[0].set_count.exact == 1;
}

CardinalityProfile mass_to_profile(const MassFunction& mass) {
  std::map<int, std::pair<std::uint64_t, double>> layers;
  for (const auto& f : mass.focal()) {
    auto [it, inserted] = layers.try_emplace(f.subset.cardinality(), 0, f.mass);
    if (!inserted && std::abs(it->second.second - f.mass) > kSymmetryTolerance) {
      throw Error(ErrorCode::NotCardinalitySymmetric,
                  "focal sets of cardinality " + std::to_string(it->first) +
                      " carry different masses");
    }
    ++it->second.first;
  }
  std::vector<ProfileRow> rows;
  for (const auto& [k, layer] : layers) {
    rows.push_back(ProfileRow{k, SetCount::of(layer.first), layer.second, std::log(layer.second)});
  }
  // The mass function was validated on construction; only the grouping is new.
  return CardinalityProfile(static_cast<int>(mass.frame().size()), std::move(rows));
}

MassFunction profile_to_mass(const CardinalityProfile& profile, int expansion_limit) {
  if (profile.frame_size() > expansion_limit) {
    throw Error(ErrorCode::FrameTooLarge,
                "cannot enumerate a frame of " + std::to_string(profile.frame_size()) +
                    " elements (limit " + std::to_string(expansion_limit) + ")");
  }
  return profile_to_mass(profile, Frame::with_size(static_cast<std::size_t>(profile.frame_size())),
                         expansion_limit);
}

MassFunction profile_to_mass(const CardinalityProfile& profile, const Frame& frame,
                             int expansion_limit) {
  const int n = profile.frame_size();
  if (n > expansion_limit || n > static_cast<int>(kMaxExplicitFrameSize)) {
    throw Error(ErrorCode::FrameTooLarge,
                "cannot enumerate a frame of " + std::to_string(n) + " elements (limit " +
                    std::to_string(expansion_limit) + ")");
  }
  if (static_cast<int>(frame.size()) != n) {
    throw Error(ErrorCode::InvalidArgument, "frame size differs from profile frame size");
  }
  std::vector<FocalElement> focal;
  for (const auto& row : profile.rows()) {
    const auto full = combinatorics::binomial_exact(n, row.cardinality);
    if (!row.set_count.exact || *row.set_count.exact != *full) {
      throw Error(ErrorCode::PartialLayerUnsupported,
                  "layer of cardinality " + std::to_string(row.cardinality) +
                      " does not hold every subset");
    }
    std::uint64_t mask =
        row.cardinality == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << row.cardinality) - 1;
    for (std::uint64_t i = 0; i < *full; ++i) {
      focal.push_back({Subset(mask), row.per_set_mass});
      if (i + 1 < *full) mask = next_combination(mask);
    }
  }
  return mass_from_assignments(frame, focal);
}

}  // namespace ifd
