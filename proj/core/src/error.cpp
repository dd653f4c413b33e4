#include "ifd/error.hpp"

namespace ifd {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::EmptyFrame: return "EmptyFrame";
    case ErrorCode::DuplicateLabel: return "DuplicateLabel";
    case ErrorCode::EmptyLabel: return "EmptyLabel";
    case ErrorCode::UnknownLabel: return "UnknownLabel";
    case ErrorCode::EmptySubset: return "EmptySubset";
    case ErrorCode::NegativeMass: return "NegativeMass";
    case ErrorCode::NonFiniteMass: return "NonFiniteMass";
    case ErrorCode::NonUnitTotal: return "NonUnitTotal";
    case ErrorCode::DuplicateSubset: return "DuplicateSubset";
    case ErrorCode::NotBayesian: return "NotBayesian";
    case ErrorCode::NotCardinalitySymmetric: return "NotCardinalitySymmetric";
    case ErrorCode::InvalidProfile: return "InvalidProfile";
    case ErrorCode::FrameTooLarge: return "FrameTooLarge";
    case ErrorCode::PartialLayerUnsupported: return "PartialLayerUnsupported";
    case ErrorCode::InvalidDistribution: return "InvalidDistribution";
    case ErrorCode::InvalidBase: return "InvalidBase";
    case ErrorCode::UnknownFamily: return "UnknownFamily";
    case ErrorCode::InvalidRange: return "InvalidRange";
    case ErrorCode::InsufficientRows: return "InsufficientRows";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::MalformedInput: return "MalformedInput";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + detail), code_(code) {}

}  // namespace ifd
