#pragma once

#include <cmath>
#include <numbers>
#include <string_view>

namespace ifd {

/// Logarithm base used for entropy-like quantities. The information
/// dimension itself is a ratio and does not depend on this choice.
class LogBase {
 public:
  /// Throws Error(InvalidBase) unless base > 1 and finite.
  explicit LogBase(double base);

  static LogBase two() { return LogBase(2.0); }
  static LogBase e() { return LogBase(std::numbers::e); }
  static LogBase ten() { return LogBase(10.0); }

  /// Accepts "2", "e", "10" or any decimal literal > 1.
  static LogBase parse(std::string_view text);

  double value() const noexcept { return base_; }

  /// ln(base)
  double ln() const noexcept { return ln_base_; }

  double log(double x) const noexcept;

  /// Converts a natural-log quantity into this base.
  double from_nats(double nats) const noexcept { return nats / ln_base_; }

 private:
  double base_;
  double ln_base_;
};

}  // namespace ifd
