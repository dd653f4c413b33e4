#pragma once

#include <cstdint>
#include <optional>

namespace ifd::combinatorics {

/// Largest n for which every C(n, k) is tabulated exactly in 64 bits.
inline constexpr int kExactBinomialLimit = 64;

/// Largest n for which 3^n - 2^n fits in an unsigned 64-bit integer.
inline constexpr int kExactMaxDengLimit = 40;

/// Exact C(n, k) from Pascal's triangle; nullopt when n > kExactBinomialLimit.
std::optional<std::uint64_t> binomial_exact(int n, int k);

/// ln C(n, k); exact-table backed for small n, lgamma beyond. -inf when k > n.
double log_binomial(int n, int k);

/// ln(2^k - 1) for k >= 1, stable for large k.
double log_pow2_minus_one(int k);

/// 3^n - 2^n for 0 <= n <= kExactMaxDengLimit.
std::uint64_t three_pow_minus_two_pow(int n);

/// ln(3^n - 2^n) for n >= 1: exact integer evaluation up to
/// kExactMaxDengLimit, log-domain beyond.
double log_three_pow_minus_two_pow(int n);

}  // namespace ifd::combinatorics
