#pragma once

#include <array>
#include <string_view>

#include "ifd/profile.hpp"

namespace ifd {

enum class Family {
  Vacuous,          // m(Θ) = 1
  UniformBayesian,  // m({w_i}) = 1/N
  UniformPowerset,  // m(A) = 1/(2^N - 1) for every nonempty A
  MaxDeng,          // m(A) = (2^|A| - 1)/(3^N - 2^N)
};

inline constexpr std::array kAllFamilies = {Family::Vacuous, Family::UniformBayesian,
                                            Family::UniformPowerset, Family::MaxDeng};

/// "vacuous", "uniform-bayesian", "uniform-powerset", "max-deng".
std::string_view family_name(Family family) noexcept;

/// Throws UnknownFamily.
Family parse_family(std::string_view name);

CardinalityProfile vacuous(int n);
CardinalityProfile uniform_bayesian(int n);
CardinalityProfile uniform_powerset(int n);
CardinalityProfile max_deng(int n);

/// Dispatches on `family`. Throws InvalidArgument for n < 1 and FrameTooLarge
/// above kDefaultProfileLimit.
CardinalityProfile make_family(Family family, int n);

}  // namespace ifd
