#include "monolift/lifted.hpp"

#include <bit>

#include "monolift/errors.hpp"

namespace monolift {

LiftedPoint::LiftedPoint(int ell, std::vector<std::uint32_t> blocks)
    : ell_(ell), blocks_(std::move(blocks)) {
  if (ell < 1 || ell > kMaxEll || ell % 2 == 0) {
    throw Error(ErrorCode::InvalidArgument, "ell must be odd and in [1," +
                                                std::to_string(kMaxEll) + "], got " +
                                                std::to_string(ell));
  }
  if (blocks_.empty() || blocks_.size() > static_cast<std::size_t>(kMaxSets)) {
    throw Error(ErrorCode::InvalidArgument, "a lifted point needs 1..31 blocks");
  }
  const std::uint32_t limit = (1u << ell) - 1u;
  for (auto b : blocks_) {
    if (b & ~limit) throw Error(ErrorCode::OutOfRange, "block has bits beyond ell");
  }
}

LiftedPoint LiftedPoint::parse(std::string_view text) {
  std::vector<std::uint32_t> blocks;
  int ell = -1;
  std::size_t start = 0;
  while (true) {
    const std::size_t dot = text.find('.', start);
    const std::string_view part =
        text.substr(start, dot == std::string_view::npos ? std::string_view::npos : dot - start);
    if (part.empty()) {
      throw Error(ErrorCode::ParseError,
                  "empty block at position " + std::to_string(start + 1) + " in '" +
                      std::string(text) + "'");
    }
    if (ell < 0) ell = static_cast<int>(part.size());
    if (static_cast<int>(part.size()) != ell) {
      throw Error(ErrorCode::ParseError, "blocks of unequal length in '" + std::string(text) + "'");
    }
    std::uint32_t b = 0;
    for (std::size_t t = 0; t < part.size(); ++t) {
      if (part[t] == '1') {
        b |= 1u << t;
      } else if (part[t] != '0') {
        throw Error(ErrorCode::ParseError, "bad character at position " +
                                               std::to_string(start + t + 1) + " in '" +
                                               std::string(text) + "'");
      }
    }
    blocks.push_back(b);
    if (dot == std::string_view::npos) break;
    start = dot + 1;
  }
  return LiftedPoint(ell, std::move(blocks));
}

std::string LiftedPoint::to_string() const {
  std::string out;
  out.reserve(blocks_.size() * static_cast<std::size_t>(ell_ + 1));
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i) out.push_back('.');
    for (int t = 0; t < ell_; ++t) out.push_back((blocks_[i] >> t) & 1u ? '1' : '0');
  }
  return out;
}

int LiftedPoint::block_weight(int i) const { return std::popcount(block(i)); }

bool LiftedPoint::bit(int block_index, int pos) const {
  if (block_index < 1 || block_index > n() || pos < 1 || pos > ell_) {
    throw Error(ErrorCode::OutOfRange, "coordinate (" + std::to_string(block_index) + "," +
                                           std::to_string(pos) + ") outside the point");
  }
  return (blocks_[static_cast<std::size_t>(block_index - 1)] >> (pos - 1)) & 1u;
}

LiftedPoint LiftedPoint::with_bit(int block_index, int pos, bool value) const {
  (void)bit(block_index, pos);
  LiftedPoint out = *this;
  auto& b = out.blocks_[static_cast<std::size_t>(block_index - 1)];
  if (value) {
    b |= 1u << (pos - 1);
  } else {
    b &= ~(1u << (pos - 1));
  }
  return out;
}

std::uint64_t LiftedPoint::pack() const {
  if (n() * ell_ > kMaxPackedBits) {
    throw Error(ErrorCode::OutOfRange, "n*ell exceeds the 64-bit packed form");
  }
  std::uint64_t out = 0;
  for (int i = 0; i < n(); ++i) out |= static_cast<std::uint64_t>(block(i)) << (i * ell_);
  return out;
}

LiftedPoint LiftedPoint::unpack(std::uint64_t packed, int n, int ell) {
  if (n * ell > kMaxPackedBits) throw Error(ErrorCode::OutOfRange, "n*ell exceeds 64 bits");
  const std::uint64_t mask = (std::uint64_t{1} << ell) - 1;
  std::vector<std::uint32_t> blocks(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    blocks[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>((packed >> (i * ell)) & mask);
  }
  return LiftedPoint(ell, std::move(blocks));
}

bool LiftedPoint::leq(const LiftedPoint& other) const {
  if (other.ell_ != ell_ || other.n() != n()) return false;
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (blocks_[i] & ~other.blocks_[i]) return false;
  }
  return true;
}

BitVector majority_decode(const LiftedPoint& y) {
  BitVector u = 0;
  for (int i = 0; i < y.n(); ++i) {
    if (2 * y.block_weight(i) > y.ell()) u |= 1u << i;
  }
  return u;
}

}  // namespace monolift
