#include "ifd/frame.hpp"

#include <string>
#include <unordered_set>

#include "ifd/error.hpp"

namespace ifd {

Frame::Frame(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) throw Error(ErrorCode::EmptyFrame, "a frame needs at least one element");
  if (labels_.size() > kMaxExplicitFrameSize) {
    throw Error(ErrorCode::FrameTooLarge, "explicit frames are limited to 64 elements, got " +
                                              std::to_string(labels_.size()));
  }
  std::unordered_set<std::string_view> seen;
  for (const auto& label : labels_) {
    if (label.empty()) throw Error(ErrorCode::EmptyLabel, "frame labels must be nonempty");
    if (!seen.insert(label).second) {
      throw Error(ErrorCode::DuplicateLabel, "label '" + label + "' appears twice");
    }
  }
}

Frame Frame::with_size(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) labels.push_back("w" + std::to_string(i));
  return Frame(std::move(labels));
}

std::size_t Frame::index_of(std::string_view label) const noexcept {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return i;
  }
  return labels_.size();
}

std::uint64_t Frame::full_mask() const noexcept {
  return size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << size()) - 1;
}

Frame frame_new(std::vector<std::string> labels) { return Frame(std::move(labels)); }

Subset::Subset(std::uint64_t mask) : mask_(mask) {
  if (mask == 0) throw Error(ErrorCode::EmptySubset, "the empty set cannot be a focal element");
}

Subset subset_from_labels(const Frame& frame, std::span<const std::string> labels) {
  std::uint64_t mask = 0;
  for (const auto& label : labels) {
    const std::size_t index = frame.index_of(label);
    if (index == frame.size()) {
      throw Error(ErrorCode::UnknownLabel, "label '" + label + "' is not in the frame");
    }
    mask |= std::uint64_t{1} << index;
  }
  return Subset(mask);
}

Subset whole_frame(const Frame& frame) { return Subset(frame.full_mask()); }

std::vector<std::string> subset_labels(const Frame& frame, const Subset& subset) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < frame.size(); ++i) {
    if (subset.contains(i)) out.push_back(frame.label(i));
  }
  return out;
}

}  // namespace ifd
