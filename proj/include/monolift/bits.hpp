#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace monolift {

inline int popcount(std::uint64_t x) { return std::popcount(x); }

/// C(n, k) for the small arguments used by the lifted blocks. Throws on overflow.
std::uint64_t binomial(int n, int k);

/// Saturating product; returns UINT64_MAX on overflow.
std::uint64_t mul_sat(std::uint64_t a, std::uint64_t b);
std::uint64_t pow_sat(std::uint64_t base, int exponent);

// Fixed-weight masks over `width` bits, ordered as combinations of bit
// positions in lexicographic order: rank 0 is the lowest `weight` bits.

std::uint32_t unrank_fixed_weight(int width, int weight, std::uint64_t rank);
std::uint64_t rank_fixed_weight(int width, std::uint32_t mask);

/// All masks of the given weight, in rank order.
std::vector<std::uint32_t> fixed_weight_masks(int width, int weight);

/// Positions (0-based) of the set bits, ascending.
std::vector<int> set_positions(std::uint64_t mask);

}  // namespace monolift
