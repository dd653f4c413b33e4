#include "ifd/dimension.hpp"

#include <cmath>

#include "split_terms.hpp"

namespace ifd {
namespace {

// Every focal term (2^|A| - 1)^m(A) is >= 1, with equality only for a
// singleton. The split sum therefore reaches 1 (split scale 0) exactly when
// there is one focal element and it is a singleton: two or more focal
// elements give a sum >= 2, and a lone non-singleton carries m = 1 and gives
// 2^|A| - 1 >= 3. Degeneracy is decided on this structure, never on a
// near-zero denominator.
bool degenerate_structure(const MassFunction& mass) {
  return mass.focal_count() == 1 && mass.focal().front().subset.is_singleton();
}

DimensionReport make_report(double entropy_nats, double split_nats, LogBase base) {
  return DimensionReport{base.from_nats(entropy_nats), base.from_nats(split_nats),
                         entropy_nats / split_nats, false};
}

}  // namespace

double split_scale(const MassFunction& mass, LogBase base) {
  if (degenerate_structure(mass)) return 0.0;
  return base.from_nats(detail::split_scale_nats(mass));
}

double split_scale_profile(const CardinalityProfile& profile, LogBase base) {
  if (profile.is_single_singleton()) return 0.0;
  return base.from_nats(detail::split_scale_nats(profile));
}

DimensionReport information_dimension(const MassFunction& mass, LogBase base) {
  if (degenerate_structure(mass)) return DimensionReport{0.0, 0.0, 0.0, true};
  return make_report(detail::deng_entropy_nats(mass), detail::split_scale_nats(mass), base);
}

DimensionReport information_dimension_profile(const CardinalityProfile& profile, LogBase base) {
  if (profile.is_single_singleton()) return DimensionReport{0.0, 0.0, 0.0, true};
  return make_report(detail::deng_entropy_nats(profile), detail::split_scale_nats(profile), base);
}

DimensionReport probability_dimension(const ProbabilityDistribution& dist, LogBase base) {
  if (dist.outcomes() == 1) return DimensionReport{0.0, 0.0, 0.0, true};
  double h = 0.0;
  for (double p : dist.probabilities()) h -= p * std::log(p);
  return make_report(h, std::log(static_cast<double>(dist.outcomes())), base);
}

}  // namespace ifd
