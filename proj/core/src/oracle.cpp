#include "ifd/oracle.hpp"

#include <cmath>
#include <string>

#include "ifd/error.hpp"

namespace ifd::oracle {

DimensionReport brute_force_report(const MassFunction& mass) {
  const std::size_t n = mass.frame().size();
  if (n > static_cast<std::size_t>(kOracleFrameLimit)) {
    throw Error(ErrorCode::FrameTooLarge, "oracle accepts frames up to " +
                                              std::to_string(kOracleFrameLimit) + " elements, got " +
                                              std::to_string(n));
  }
  double entropy = 0.0;
  double split_sum = 0.0;
  for (const auto& focal : mass.focal()) {
    int members = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (focal.subset.contains(i)) ++members;
    }
    const double power_set_size = std::pow(2.0, members) - 1.0;
    entropy += -focal.mass * std::log2(focal.mass / power_set_size);
    split_sum += std::pow(power_set_size, focal.mass);
  }
  if (split_sum == 1.0) return DimensionReport{0.0, 0.0, 0.0, true};
  const double split = std::log2(split_sum);
  return DimensionReport{entropy, split, entropy / split, false};
}

bool compare_reports(const DimensionReport& a, const DimensionReport& b, double tol) {
  if (!(tol > 0.0)) throw Error(ErrorCode::InvalidArgument, "tolerance must be positive");
  return a.degenerate == b.degenerate && std::abs(a.entropy - b.entropy) <= tol &&
         std::abs(a.split_scale - b.split_scale) <= tol &&
         std::abs(a.dimension - b.dimension) <= tol;
}

}  // namespace ifd::oracle
