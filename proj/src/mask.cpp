#include "sepq/mask.hpp"

#include <algorithm>
#include <cmath>

#include "sepq/error.hpp"

namespace sepq {

SupportMask::SupportMask(std::vector<bool> bits)
    : bits_(std::move(bits)), popcount_(static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true))) {}

SupportMask SupportMask::from_string(std::string_view text) {
  std::vector<bool> bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') throw Error(ErrorKind::Parse, "mask characters must be 0 or 1");
    bits.push_back(c == '1');
  }
  return SupportMask(std::move(bits));
}

ZeroIndexList SupportMask::zero_indices() const {
  ZeroIndexList zeros;
  zeros.reserve(bits_.size() - popcount_);
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (!bits_[i]) zeros.push_back(i);
  return zeros;
}

std::string SupportMask::to_string() const {
  std::string s(bits_.size(), '0');
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i]) s[i] = '1';
  return s;
}

SupportMask amplitude_abstraction(std::span<const Amplitude> amplitudes, double tol_zero) {
  std::vector<bool> bits(amplitudes.size());
  for (std::size_t i = 0; i < amplitudes.size(); ++i) bits[i] = std::abs(amplitudes[i]) > tol_zero;
  return SupportMask(std::move(bits));
}

SupportMask amplitude_abstraction(const PureState& state, double tol_zero) {
  return amplitude_abstraction(state.amplitudes(), tol_zero);
}

}  // namespace sepq
