#include "ifd/combinatorics.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "ifd/error.hpp"

namespace ifd::combinatorics {
namespace {

using PascalTable =
    std::array<std::array<std::uint64_t, kExactBinomialLimit + 1>, kExactBinomialLimit + 1>;

constexpr PascalTable build_pascal() {
  PascalTable t{};
  for (int n = 0; n <= kExactBinomialLimit; ++n) {
    t[n][0] = 1;
    for (int k = 1; k <= n; ++k) t[n][k] = t[n - 1][k - 1] + (k < n ? t[n - 1][k] : 0);
  }
  return t;
}

constexpr PascalTable kPascal = build_pascal();

// C(64, 32) is the largest entry and must not have wrapped.
static_assert(kPascal[64][32] == 1832624140942590534ULL);

}  // namespace

std::optional<std::uint64_t> binomial_exact(int n, int k) {
  if (n < 0 || n > kExactBinomialLimit) return std::nullopt;
  if (k < 0 || k > n) return 0;
  return kPascal[n][k];
}

double log_binomial(int n, int k) {
  if (k < 0 || k > n) return -std::numeric_limits<double>::infinity();
  if (n <= kExactBinomialLimit) return std::log(static_cast<double>(kPascal[n][k]));
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

double log_pow2_minus_one(int k) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "log_pow2_minus_one needs k >= 1");
  // 2^k - 1 is exact in binary64 up to k = 53.
  if (k <= 53) return std::log(std::ldexp(1.0, k) - 1.0);
  return k * std::numbers::ln2 + std::log1p(-std::ldexp(1.0, -k));
}

std::uint64_t three_pow_minus_two_pow(int n) {
  if (n < 0 || n > kExactMaxDengLimit) {
    throw Error(ErrorCode::InvalidArgument,
                "3^n - 2^n exceeds 64 bits for n = " + std::to_string(n));
  }
  std::uint64_t three = 1;
  for (int i = 0; i < n; ++i) three *= 3;
  return three - (std::uint64_t{1} << n);
}

double log_three_pow_minus_two_pow(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "3^n - 2^n needs n >= 1");
  if (n <= kExactMaxDengLimit) return std::log(static_cast<double>(three_pow_minus_two_pow(n)));
  return n * std::log(3.0) + std::log1p(-std::pow(2.0 / 3.0, n));
}

}  // namespace ifd::combinatorics
