#include "ifd/mass_function.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "ifd/error.hpp"

namespace ifd {
namespace {

std::string describe(const Frame& frame, const Subset& subset) {
  std::string out = "{";
  for (std::size_t i = 0; i < frame.size(); ++i) {
    if (!subset.contains(i)) continue;
    if (out.size() > 1) out += ",";
    out += frame.label(i);
  }
  return out + "}";
}

}  // namespace

double MassFunction::mass_of(const Subset& subset) const noexcept {
  for (const auto& f : focal_) {
    if (f.subset == subset) return f.mass;
  }
  return 0.0;
}

bool MassFunction::same_as(const MassFunction& other) const {
  if (!(frame_ == other.frame_) || focal_.size() != other.focal_.size()) return false;
  auto sorted = [](std::vector<FocalElement> v) {
    std::ranges::sort(v, {}, &FocalElement::subset);
    return v;
  };
  return sorted(focal_) == sorted(other.focal_);
}

MassFunction mass_from_assignments(Frame frame, std::span<const FocalElement> assignments,
                                   double tolerance) {
  if (!(tolerance > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "mass tolerance must be positive");
  }
  const std::uint64_t full = frame.full_mask();
  std::set<std::uint64_t> seen;
  std::vector<FocalElement> focal;
  focal.reserve(assignments.size());
  double total = 0.0;
  for (const auto& a : assignments) {
    if ((a.subset.mask() & ~full) != 0) {
      throw Error(ErrorCode::UnknownLabel, "subset refers to elements outside the frame");
    }
    if (!std::isfinite(a.mass)) {
      throw Error(ErrorCode::NonFiniteMass, "mass of " + describe(frame, a.subset) + " is not finite");
    }
    if (a.mass < 0.0) {
      throw Error(ErrorCode::NegativeMass,
                  "mass of " + describe(frame, a.subset) + " is " + std::to_string(a.mass));
    }
    if (!seen.insert(a.subset.mask()).second) {
      throw Error(ErrorCode::DuplicateSubset, describe(frame, a.subset) + " is assigned twice");
    }
    if (a.mass == 0.0) continue;
    total += a.mass;
    focal.push_back(a);
  }
  if (!(std::abs(total - 1.0) <= tolerance)) {
    throw Error(ErrorCode::NonUnitTotal,
                "total mass must equal 1, got " + std::to_string(total));
  }
  return MassFunction(std::move(frame), std::move(focal));
}

ProbabilityDistribution::ProbabilityDistribution(std::vector<double> probabilities,
                                                 double tolerance)
    : probabilities_(std::move(probabilities)) {
  if (probabilities_.empty()) {
    throw Error(ErrorCode::InvalidDistribution, "a distribution needs at least one outcome");
  }
  double total = 0.0;
  for (double p : probabilities_) {
    if (!(p > 0.0) || !std::isfinite(p)) {
      throw Error(ErrorCode::InvalidDistribution, "probabilities must be positive and finite");
    }
    total += p;
  }
  if (!(std::abs(total - 1.0) <= tolerance)) {
    throw Error(ErrorCode::InvalidDistribution,
                "probabilities must sum to 1, got " + std::to_string(total));
  }
}

ProbabilityDistribution ProbabilityDistribution::uniform(std::size_t n) {
  return ProbabilityDistribution(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

bool mass_is_bayesian(const MassFunction& mass) noexcept {
  return std::ranges::all_of(mass.focal(), [](const FocalElement& f) { return f.subset.is_singleton(); });
}

ProbabilityDistribution mass_as_probability(const MassFunction& mass) {
  if (!mass_is_bayesian(mass)) {
    throw Error(ErrorCode::NotBayesian, "mass function has a non-singleton focal element");
  }
  std::vector<FocalElement> focal = mass.focal();
  std::ranges::sort(focal, {}, &FocalElement::subset);
  std::vector<double> p;
  p.reserve(focal.size());
  for (const auto& f : focal) p.push_back(f.mass);
  return ProbabilityDistribution(std::move(p));
}

MassFunction permute_frame(const MassFunction& mass, std::span<const std::size_t> permutation) {
  const Frame& frame = mass.frame();
  const std::size_t n = frame.size();
  if (permutation.size() != n) {
    throw Error(ErrorCode::InvalidArgument, "permutation length differs from frame size");
  }
  std::vector<bool> hit(n, false);
  for (std::size_t target : permutation) {
    if (target >= n || hit[target]) throw Error(ErrorCode::InvalidArgument, "not a permutation");
    hit[target] = true;
  }
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[permutation[i]] = frame.label(i);

  std::vector<FocalElement> focal;
  focal.reserve(mass.focal_count());
  for (const auto& f : mass.focal()) {
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (f.subset.contains(i)) mask |= std::uint64_t{1} << permutation[i];
    }
    focal.push_back({Subset(mask), f.mass});
  }
  return mass_from_assignments(Frame(std::move(labels)), focal);
}

}  // namespace ifd
