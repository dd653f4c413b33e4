#include "ifd/log_base.hpp"

#include <charconv>
#include <string>

#include "ifd/error.hpp"

namespace ifd {

LogBase::LogBase(double base) : base_(base), ln_base_(std::log(base)) {
  if (!(base > 1.0) || !std::isfinite(base)) {
    throw Error(ErrorCode::InvalidBase, "logarithm base must be finite and > 1, got " +
                                            std::to_string(base));
  }
}

LogBase LogBase::parse(std::string_view text) {
  if (text == "e") return e();
  double value = 0.0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw Error(ErrorCode::InvalidBase, "cannot parse base '" + std::string(text) + "'");
  }
  return LogBase(value);
}

double LogBase::log(double x) const noexcept {
  if (base_ == 2.0) return std::log2(x);
  if (base_ == 10.0) return std::log10(x);
  return std::log(x) / ln_base_;
}

}  // namespace ifd
