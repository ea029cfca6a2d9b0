#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sepq/state.hpp"

namespace sepq {

// Sorted, strictly increasing positions of zero amplitudes.
using ZeroIndexList = std::vector<std::uint64_t>;

// Which amplitudes are nonzero: bit i is set iff |a_i| exceeds the zero
// tolerance. popcount() is the number of set bits.
class SupportMask {
 public:
  SupportMask() = default;
  explicit SupportMask(std::vector<bool> bits);
  // Parses a string of '0'/'1'; bit 0 is the leftmost character.
  static SupportMask from_string(std::string_view text);
  static SupportMask full(std::size_t length) { return SupportMask(std::vector<bool>(length, true)); }

  std::size_t size() const noexcept { return bits_.size(); }
  std::size_t popcount() const noexcept { return popcount_; }
  bool test(std::size_t i) const { return bits_[i]; }
  const std::vector<bool>& bits() const noexcept { return bits_; }

  ZeroIndexList zero_indices() const;
  std::string to_string() const;

  friend bool operator==(const SupportMask& a, const SupportMask& b) { return a.bits_ == b.bits_; }
  friend bool operator<(const SupportMask& a, const SupportMask& b) { return a.bits_ < b.bits_; }

 private:
  std::vector<bool> bits_;
  std::size_t popcount_ = 0;
};

SupportMask amplitude_abstraction(const PureState& state, double tol_zero = kTolZero);
SupportMask amplitude_abstraction(std::span<const Amplitude> amplitudes, double tol_zero = kTolZero);

}  // namespace sepq
