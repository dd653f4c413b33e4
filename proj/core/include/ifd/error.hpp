#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ifd {

enum class ErrorCode {
  EmptyFrame,
  DuplicateLabel,
  EmptyLabel,
  UnknownLabel,
  EmptySubset,
  NegativeMass,
  NonFiniteMass,
  NonUnitTotal,
  DuplicateSubset,
  NotBayesian,
  NotCardinalitySymmetric,
  InvalidProfile,
  FrameTooLarge,
  PartialLayerUnsupported,
  InvalidDistribution,
  InvalidBase,
  UnknownFamily,
  InvalidRange,
  InsufficientRows,
  InvalidArgument,
  MalformedInput,
};

std::string_view error_code_name(ErrorCode code) noexcept;

/// Every precondition violation in the library is reported through this type.
/// `code()` is stable and machine-checkable; `what()` carries the detail.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ifd
