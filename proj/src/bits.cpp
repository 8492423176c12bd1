#include "monolift/bits.hpp"

#include <limits>

#include "monolift/errors.hpp"

namespace monolift {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  __extension__ typedef unsigned __int128 u128;
  u128 r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (r > std::numeric_limits<std::uint64_t>::max()) {
      throw Error(ErrorCode::OutOfRange, "binomial overflow");
    }
  }
  return static_cast<std::uint64_t>(r);
}

std::uint64_t mul_sat(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  if (__builtin_mul_overflow(a, b, &out)) return std::numeric_limits<std::uint64_t>::max();
  return out;
}

std::uint64_t pow_sat(std::uint64_t base, int exponent) {
  std::uint64_t out = 1;
  for (int i = 0; i < exponent; ++i) out = mul_sat(out, base);
  return out;
}

std::uint32_t unrank_fixed_weight(int width, int weight, std::uint64_t rank) {
  if (weight < 0 || weight > width || width > 32) {
    throw Error(ErrorCode::OutOfRange, "bad fixed-weight shape");
  }
  if (rank >= binomial(width, weight)) throw Error(ErrorCode::OutOfRange, "rank out of range");
  std::uint32_t mask = 0;
  int pos = 0;
  for (int remaining = weight; remaining > 0; ++pos) {
    // Combinations whose smallest remaining element is `pos`.
    const std::uint64_t with_pos = binomial(width - pos - 1, remaining - 1);
    if (rank < with_pos) {
      mask |= 1u << pos;
      --remaining;
    } else {
      rank -= with_pos;
    }
  }
  return mask;
}

std::uint64_t rank_fixed_weight(int width, std::uint32_t mask) {
  std::uint64_t rank = 0;
  int remaining = std::popcount(mask);
  for (int pos = 0; remaining > 0 && pos < width; ++pos) {
    if (mask & (1u << pos)) {
      --remaining;
    } else {
      rank += binomial(width - pos - 1, remaining - 1);
    }
  }
  return rank;
}

std::vector<std::uint32_t> fixed_weight_masks(int width, int weight) {
  const std::uint64_t count = binomial(width, weight);
  std::vector<std::uint32_t> out;
  out.reserve(count);
  for (std::uint64_t r = 0; r < count; ++r) out.push_back(unrank_fixed_weight(width, weight, r));
  return out;
}

std::vector<int> set_positions(std::uint64_t mask) {
  std::vector<int> out;
  while (mask) {
    out.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return out;
}

}  // namespace monolift
