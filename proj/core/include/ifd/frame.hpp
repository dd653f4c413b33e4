#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ifd {

/// Explicit frames and subsets are bounded by the 64-bit membership mask.
inline constexpr std::size_t kMaxExplicitFrameSize = 64;

/// Frame of discernment: an ordered set of distinct, nonempty labels.
class Frame {
 public:
  /// Throws EmptyFrame, EmptyLabel, DuplicateLabel or FrameTooLarge.
  explicit Frame(std::vector<std::string> labels);

  /// Frame with generated labels "w1" .. "wN".
  static Frame with_size(std::size_t n);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(std::size_t index) const { return labels_.at(index); }

  /// Index of `label`, or size() when absent.
  std::size_t index_of(std::string_view label) const noexcept;

  std::uint64_t full_mask() const noexcept;

  friend bool operator==(const Frame&, const Frame&) = default;

 private:
  std::vector<std::string> labels_;
};

Frame frame_new(std::vector<std::string> labels);

/// Nonempty subset of a frame, stored as a membership mask over frame indices.
class Subset {
 public:
  /// Throws EmptySubset for a zero mask.
  explicit Subset(std::uint64_t mask);

  std::uint64_t mask() const noexcept { return mask_; }
  int cardinality() const noexcept { return std::popcount(mask_); }
  bool contains(std::size_t index) const noexcept {
    return index < 64 && ((mask_ >> index) & 1u) != 0;
  }
  bool is_singleton() const noexcept { return std::has_single_bit(mask_); }

  friend auto operator<=>(const Subset&, const Subset&) = default;

 private:
  std::uint64_t mask_;
};

/// Throws UnknownLabel or EmptySubset. Repeated labels collapse.
Subset subset_from_labels(const Frame& frame, std::span<const std::string> labels);

/// Subset over all frame elements (Θ itself).
Subset whole_frame(const Frame& frame);

/// Labels of `subset` in frame order.
std::vector<std::string> subset_labels(const Frame& frame, const Subset& subset);

}  // namespace ifd
