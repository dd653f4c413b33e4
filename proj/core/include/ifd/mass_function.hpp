#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "ifd/frame.hpp"

namespace ifd {

inline constexpr double kDefaultMassTolerance = 1e-9;

struct FocalElement {
  Subset subset;
  double mass;

  friend bool operator==(const FocalElement&, const FocalElement&) = default;
};

/// Basic probability assignment over a frame. Only focal elements (strictly
/// positive mass) are stored, in the order they were supplied.
class MassFunction {
 public:
  const Frame& frame() const noexcept { return frame_; }
  const std::vector<FocalElement>& focal() const noexcept { return focal_; }
  std::size_t focal_count() const noexcept { return focal_.size(); }

  /// Mass of `subset`, 0 when it is not focal.
  double mass_of(const Subset& subset) const noexcept;

  /// Same frame, same focal sets with identical masses, regardless of order.
  bool same_as(const MassFunction& other) const;

 private:
  friend MassFunction mass_from_assignments(Frame, std::span<const FocalElement>, double);
  MassFunction(Frame frame, std::vector<FocalElement> focal)
      : frame_(std::move(frame)), focal_(std::move(focal)) {}

  Frame frame_;
  std::vector<FocalElement> focal_;
};

/// Validates m(empty) = 0 and total mass 1 within `tolerance`. Zero masses are
/// dropped. Throws NegativeMass, NonFiniteMass, DuplicateSubset, UnknownLabel
/// (subset outside the frame), NonUnitTotal or InvalidArgument (tolerance).
MassFunction mass_from_assignments(Frame frame, std::span<const FocalElement> assignments,
                                   double tolerance = kDefaultMassTolerance);

/// Probabilities over positive-probability outcomes.
class ProbabilityDistribution {
 public:
  /// Throws InvalidDistribution for empty input, nonpositive entries or a
  /// total off 1 by more than `tolerance`.
  explicit ProbabilityDistribution(std::vector<double> probabilities,
                                   double tolerance = kDefaultMassTolerance);

  static ProbabilityDistribution uniform(std::size_t n);

  std::size_t outcomes() const noexcept { return probabilities_.size(); }
  const std::vector<double>& probabilities() const noexcept { return probabilities_; }

 private:
  std::vector<double> probabilities_;
};

/// True iff every focal element is a singleton.
bool mass_is_bayesian(const MassFunction& mass) noexcept;

/// Focal singletons in frame order. Throws NotBayesian.
ProbabilityDistribution mass_as_probability(const MassFunction& mass);

/// Applies an index permutation to the frame: element i moves to
/// position permutation[i], labels travel with their elements.
MassFunction permute_frame(const MassFunction& mass, std::span<const std::size_t> permutation);

}  // namespace ifd
