#include "ifd/families.hpp"

#include <cmath>
#include <string>

#include "ifd/combinatorics.hpp"
#include "ifd/error.hpp"

namespace ifd {
namespace {

void check_size(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "frame size must be >= 1, got " + std::to_string(n));
  if (n > kDefaultProfileLimit) {
    throw Error(ErrorCode::FrameTooLarge, "frame size " + std::to_string(n) + " exceeds " +
                                              std::to_string(kDefaultProfileLimit));
  }
}

SetCount layer_count(int n, int k) {
  if (auto exact = combinatorics::binomial_exact(n, k)) return SetCount::of(*exact);
  return SetCount::from_log(combinatorics::log_binomial(n, k));
}

}  // namespace

std::string_view family_name(Family family) noexcept {
  switch (family) {
    case Family::Vacuous: return "vacuous";
    case Family::UniformBayesian: return "uniform-bayesian";
    case Family::UniformPowerset: return "uniform-powerset";
    case Family::MaxDeng: return "max-deng";
  }
  return "unknown";
}

Family parse_family(std::string_view name) {
  for (Family f : kAllFamilies) {
    if (family_name(f) == name) return f;
  }
  throw Error(ErrorCode::UnknownFamily, "unknown family '" + std::string(name) + "'");
}

CardinalityProfile vacuous(int n) {
  check_size(n);
  return CardinalityProfile::make(n, {{n, SetCount::of(1), 1.0}});
}

CardinalityProfile uniform_bayesian(int n) {
  check_size(n);
  return CardinalityProfile::make(
      n, {{1, SetCount::of(static_cast<std::uint64_t>(n)), 1.0 / static_cast<double>(n)}});
}

CardinalityProfile uniform_powerset(int n) {
  check_size(n);
  if (n <= combinatorics::kExactBinomialLimit) {
    // 2^n - 1 is exact in binary64 up to n = 53; beyond that the rounding
    // is far below the validation tolerance.
    const double per_set = 1.0 / (std::ldexp(1.0, n) - 1.0);
    std::vector<CardinalityProfile::Layer> layers;
    for (int k = 1; k <= n; ++k) layers.push_back({k, layer_count(n, k), per_set});
    return CardinalityProfile::make(n, layers);
  }
  const double log_per_set = -combinatorics::log_pow2_minus_one(n);
  std::vector<ProfileRow> rows;
  for (int k = 1; k <= n; ++k) rows.push_back({k, layer_count(n, k), 0.0, log_per_set});
  return CardinalityProfile::make_log(n, std::move(rows));
}

CardinalityProfile max_deng(int n) {
  check_size(n);
  if (n <= combinatorics::kExactMaxDengLimit) {
    const double total = static_cast<double>(combinatorics::three_pow_minus_two_pow(n));
    std::vector<CardinalityProfile::Layer> layers;
    for (int k = 1; k <= n; ++k) {
      layers.push_back({k, layer_count(n, k), (std::ldexp(1.0, k) - 1.0) / total});
    }
    return CardinalityProfile::make(n, layers);
  }
  const double log_total = combinatorics::log_three_pow_minus_two_pow(n);
  std::vector<ProfileRow> rows;
  for (int k = 1; k <= n; ++k) {
    rows.push_back({k, layer_count(n, k), 0.0, combinatorics::log_pow2_minus_one(k) - log_total});
  }
  return CardinalityProfile::make_log(n, std::move(rows));
}

CardinalityProfile make_family(Family family, int n) {
  switch (family) {
    case Family::Vacuous: return vacuous(n);
    case Family::UniformBayesian: return uniform_bayesian(n);
    case Family::UniformPowerset: return uniform_powerset(n);
    case Family::MaxDeng: return max_deng(n);
  }
  throw Error(ErrorCode::UnknownFamily, "unhandled family");
}

}  // namespace ifd
