#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ifd/mass_function.hpp"

namespace ifd {

/// Largest frame the profile operations accept.
inline constexpr int kDefaultProfileLimit = 1024;

/// Largest frame profile_to_mass will enumerate.
inline constexpr int kDefaultExpansionLimit = 20;

/// Number of focal sets in one cardinality layer. The exact count is kept
/// while it fits in 64 bits; the natural log is always available.
struct SetCount {
  std::optional<std::uint64_t> exact;
  double log = 0.0;

  static SetCount of(std::uint64_t n);
  static SetCount from_log(double log_count);

  bool is_zero() const noexcept { return exact ? *exact == 0 : false; }
  double approx() const noexcept;
};

/// All focal sets of cardinality `cardinality` carry `per_set_mass`.
/// `log_per_set_mass` is authoritative when `per_set_mass` underflows.
struct ProfileRow {
  int cardinality = 0;
  SetCount set_count;
  double per_set_mass = 0.0;
  double log_per_set_mass = 0.0;
};

/// Compressed cardinality-symmetric mass function. Rows are kept in strictly
/// ascending cardinality and every evaluation visits them in that order.
class CardinalityProfile {
 public:
  struct Layer {
    int cardinality;
    SetCount set_count;
    double per_set_mass;
  };

  /// Builds and validates a profile. Layers with a zero count are dropped.
  /// Throws InvalidProfile (cardinality out of range, count above C(N,k),
  /// nonpositive mass with a nonzero count, duplicate layer), NonUnitTotal or
  /// FrameTooLarge (frame_size above kDefaultProfileLimit).
  static CardinalityProfile make(int frame_size, const std::vector<Layer>& layers,
                                 double tolerance = kDefaultMassTolerance);

  /// As make() but with masses given in log-domain; used by generators whose
  /// per-set masses underflow a double for large frames.
  static CardinalityProfile make_log(int frame_size, std::vector<ProfileRow> rows,
                                     double tolerance = kDefaultMassTolerance);

  int frame_size() const noexcept { return frame_size_; }
  const std::vector<ProfileRow>& rows() const noexcept { return rows_; }

  /// Row for cardinality k, or nullptr.
  const ProfileRow* row(int cardinality) const noexcept;

  /// Single focal element which is a singleton.
  bool is_single_singleton() const noexcept;

 private:
  friend CardinalityProfile mass_to_profile(const MassFunction& mass);

  CardinalityProfile(int frame_size, std::vector<ProfileRow> rows)
      : frame_size_(frame_size), rows_(std::move(rows)) {}

  int frame_size_;
  std::vector<ProfileRow> rows_;
};

/// Groups focal sets by cardinality. Throws NotCardinalitySymmetric when two
/// focal sets of equal cardinality differ in mass by more than 1e-12.
CardinalityProfile mass_to_profile(const MassFunction& mass);

/// Expands every full layer over a frame "w1".."wN". Throws FrameTooLarge
/// when frame_size exceeds `expansion_limit`, PartialLayerUnsupported when a
/// populated layer holds fewer than C(N,k) sets.
MassFunction profile_to_mass(const CardinalityProfile& profile,
                             int expansion_limit = kDefaultExpansionLimit);

/// Same, over a caller-supplied frame whose size must equal frame_size().
MassFunction profile_to_mass(const CardinalityProfile& profile, const Frame& frame,
                             int expansion_limit = kDefaultExpansionLimit);

}  // namespace ifd
