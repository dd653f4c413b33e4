#include "ifd/entropy.hpp"

#include <cmath>
#include <string>

#include "ifd/combinatorics.hpp"
#include "ifd/error.hpp"
#include "split_terms.hpp"

namespace ifd {

double shannon_entropy(const ProbabilityDistribution& dist, LogBase base) {
  double h = 0.0;
  for (double p : dist.probabilities()) h -= p * std::log(p);
  return base.from_nats(h);
}

double shannon_max(int n, LogBase base) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "shannon_max needs n >= 1");
  return base.from_nats(std::log(static_cast<double>(n)));
}

double deng_entropy(const MassFunction& mass, LogBase base) {
  return base.from_nats(detail::deng_entropy_nats(mass));
}

double deng_entropy_profile(const CardinalityProfile& profile, LogBase base) {
  return base.from_nats(detail::deng_entropy_nats(profile));
}

double max_deng_entropy(int n, LogBase base) {
  if (n < 1) {
    throw Error(ErrorCode::InvalidArgument, "max_deng_entropy needs n >= 1, got " + std::to_string(n));
  }
  return base.from_nats(combinatorics::log_three_pow_minus_two_pow(n));
}

}  // namespace ifd
