#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "monolift/setcover.hpp"

namespace monolift {

inline constexpr int kMaxEll = 31;

/// j in [ell]^n: one 1-based position per block.
using IndexVector = std::vector<int>;

/// Largest n * ell that fits the packed 64-bit form used by the exact oracles.
inline constexpr int kMaxPackedBits = 64;

/// A point of ({0,1}^ell)^n: n blocks of ell bits. Within a block, bit (t-1)
/// holds coordinate t, so block text "110" has coordinates 1 and 2 set.
class LiftedPoint {
 public:
  LiftedPoint() = default;
  LiftedPoint(int ell, std::vector<std::uint32_t> blocks);

  /// Blocks as ell-bit strings joined by '.', e.g. "110.011".
  static LiftedPoint parse(std::string_view text);
  std::string to_string() const;

  int ell() const { return ell_; }
  int n() const { return static_cast<int>(blocks_.size()); }
  std::uint32_t block(int i) const { return blocks_[static_cast<std::size_t>(i)]; }
  const std::vector<std::uint32_t>& blocks() const { return blocks_; }
  int block_weight(int i) const;

  /// Coordinate (block, pos), both 1-based.
  bool bit(int block, int pos) const;
  LiftedPoint with_bit(int block, int pos, bool value) const;

  /// Packs into n * ell bits: coordinate (i, t) lands at bit (i-1)*ell + (t-1).
  std::uint64_t pack() const;
  static LiftedPoint unpack(std::uint64_t packed, int n, int ell);

  /// Coordinatewise <=.
  bool leq(const LiftedPoint& other) const;

  friend auto operator<=>(const LiftedPoint&, const LiftedPoint&) = default;
  friend bool operator==(const LiftedPoint&, const LiftedPoint&) = default;

 private:
  int ell_ = 1;
  std::vector<std::uint32_t> blocks_;
};

/// Bit i of the result is 1 iff block i has weight > ell/2.
BitVector majority_decode(const LiftedPoint& y);

}  // namespace monolift
