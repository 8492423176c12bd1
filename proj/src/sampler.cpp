#include "monolift/sampler.hpp"

#include "monolift/bits.hpp"
#include "monolift/errors.hpp"

namespace monolift {

std::uint64_t OnePositions::size() const {
  std::uint64_t s = 1;
  for (const auto& b : per_block) s = mul_sat(s, b.size());
  return s;
}

IndexVector OnePositions::at(std::uint64_t index) const {
  IndexVector j(per_block.size());
  for (std::size_t i = per_block.size(); i-- > 0;) {
    const auto radix = per_block[i].size();
    j[i] = per_block[i][index % radix];
    index /= radix;
  }
  if (index != 0) throw Error(ErrorCode::OutOfRange, "index beyond one(z)");
  return j;
}

bool OnePositions::contains(const IndexVector& j) const {
  if (j.size() != per_block.size()) return false;
  for (std::size_t i = 0; i < j.size(); ++i) {
    bool found = false;
    for (int p : per_block[i]) found = found || p == j[i];
    if (!found) return false;
  }
  return true;
}

OnePositions one_positions(const LiftedPoint& z) {
  OnePositions out;
  out.per_block.reserve(static_cast<std::size_t>(z.n()));
  for (int i = 0; i < z.n(); ++i) {
    if (z.block(i) == 0) {
      throw Error(ErrorCode::EmptyBlock, "block " + std::to_string(i + 1) + " of " + z.to_string() + " is all zero");
    }
    std::vector<int> ones;
    for (int p : set_positions(z.block(i))) ones.push_back(p + 1);
    out.per_block.push_back(std::move(ones));
  }
  return out;
}

LiftedPoint substitute(const LiftedPoint& z, const IndexVector& j, BitVector a) {
  if (static_cast<int>(j.size()) != z.n()) {
    throw Error(ErrorCode::OutOfRange, "index vector has " + std::to_string(j.size()) + " entries, point has " +
                                           std::to_string(z.n()) + " blocks");
  }
  std::vector<std::uint32_t> blocks = z.blocks();
  for (int i = 0; i < z.n(); ++i) {
    const int t = j[static_cast<std::size_t>(i)];
    if (t < 1 || t > z.ell()) {
      throw Error(ErrorCode::OutOfRange, "j_" + std::to_string(i + 1) + " = " + std::to_string(t) + " outside [ell]");
    }
    const std::uint32_t bit = 1u << (t - 1);
    if ((a >> i) & 1u) {
      blocks[static_cast<std::size_t>(i)] |= bit;
    } else {
      blocks[static_cast<std::size_t>(i)] &= ~bit;
    }
  }
  return LiftedPoint(z.ell(), std::move(blocks));
}

std::vector<LiftedPoint> substitute_universe(const SetCoverInstance& inst, const LiftedPoint& w,
                                             const IndexVector& j) {
  if (w.n() != inst.n() || classify(inst, w).kind != SupportKind::Top) {
    throw Error(ErrorCode::PreconditionViolated, w.to_string() + " is not in the Top support");
  }
  if (!one_positions(w).contains(j)) {
    throw Error(ErrorCode::PreconditionViolated, "j is not in one(w)");
  }
  std::vector<LiftedPoint> out;
  out.reserve(inst.universe_size());
  for (BitVector u : inst.universe()) out.push_back(substitute(w, j, u));
  return out;
}

SamplerTrace draw(const SetCoverInstance& inst, int ell, CounterRng& rng) {
  require_valid_ell(ell);
  const int h = half_up(ell);
  const std::uint64_t delta = binomial(ell, h);
  SamplerTrace tr;
  tr.xi = rng.below(2) == 1;
  std::vector<std::uint32_t> blocks(static_cast<std::size_t>(inst.n()));
  for (auto& b : blocks) b = unrank_fixed_weight(ell, h, rng.below(delta));
  tr.w = LiftedPoint(ell, blocks);
  if (tr.xi) {
    tr.output = tr.w;
    return tr;
  }
  IndexVector j(blocks.size());
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const auto ones = set_positions(blocks[i]);
    j[i] = ones[rng.below(ones.size())] + 1;
  }
  const BitVector u = inst.universe()[rng.below(inst.universe_size())];
  tr.output = substitute(tr.w, j, u);
  tr.j = std::move(j);
  tr.u = u;
  return tr;
}

SamplerTrace draw_indexed(const SetCoverInstance& inst, int ell, std::uint64_t seed, std::uint64_t index) {
  CounterRng rng(seed, index);
  return draw(inst, ell, rng);
}

std::vector<LiftedPoint> sample_points(const SetCoverInstance& inst, int ell, std::uint64_t count,
                                       std::uint64_t seed) {
  std::vector<LiftedPoint> out;
  out.reserve(count);
  for (std::uint64_t k = 0; k < count; ++k) out.push_back(draw_indexed(inst, ell, seed, k).output);
  return out;
}

Pmf sampler_exact_pmf(const SetCoverInstance& inst, int ell, std::uint64_t budget) {
  require_valid_ell(ell);
  const int n = inst.n();
  const int h = half_up(ell);
  const std::uint64_t tops = pow_sat(binomial(ell, h), n);
  const std::uint64_t js = pow_sat(static_cast<std::uint64_t>(h), n);
  const std::uint64_t per_w = mul_sat(js, inst.universe_size());
  const std::uint64_t paths = mul_sat(tops, per_w + 1);
  if (paths > budget) {
    throw Error(ErrorCode::BudgetExceeded,
                "sampler has " + std::to_string(paths) + " paths, budget is " + std::to_string(budget));
  }
  // Integer path weights over the common denominator 2 |Delta^1|^n h^n |U|:
  // an xi = 1 path weighs h^n |U|, an xi = 0 path weighs 1.
  std::map<LiftedPoint, std::uint64_t> weight;
  const auto masks = fixed_weight_masks(ell, h);
  for (std::uint64_t r = 0; r < tops; ++r) {
    std::vector<std::uint32_t> blocks(static_cast<std::size_t>(n));
    std::uint64_t rest = r;
    for (int i = n; i-- > 0;) {
      blocks[static_cast<std::size_t>(i)] = masks[rest % masks.size()];
      rest /= masks.size();
    }
    const LiftedPoint w(ell, blocks);
    weight[w] += per_w;
    const OnePositions ones = one_positions(w);
    for (std::uint64_t k = 0; k < js; ++k) {
      const IndexVector j = ones.at(k);
      for (BitVector u : inst.universe()) weight[substitute(w, j, u)] += 1;
    }
  }
  const BigInt denom = BigInt(2) * BigInt(tops) * BigInt(per_w);
  Pmf out;
  for (const auto& [y, c] : weight) {
    Rational q{BigInt(c), denom};
    q.canonicalize();
    out.emplace(y.to_string(), q);
  }
  return out;
}

Pmf definition_pmf(const SetCoverInstance& inst, int ell, std::uint64_t budget) {
  Pmf out;
  for (const auto& p : support_enumerate(inst, ell, budget)) out.emplace(p.point.to_string(), p.mass);
  return out;
}

Rational pmf_total(const Pmf& pmf) {
  Rational s(0);
  for (const auto& [k, v] : pmf) s += v;
  return s;
}

std::optional<PmfMismatch> compare_pmf(const Pmf& lhs, const Pmf& rhs) {
  auto a = lhs.begin();
  auto b = rhs.begin();
  const Rational zero(0);
  while (a != lhs.end() || b != rhs.end()) {
    if (b == rhs.end() || (a != lhs.end() && a->first < b->first)) {
      if (a->second != zero) return PmfMismatch{a->first, a->second, zero};
      ++a;
    } else if (a == lhs.end() || b->first < a->first) {
      if (b->second != zero) return PmfMismatch{b->first, zero, b->second};
      ++b;
    } else {
      if (a->second != b->second) return PmfMismatch{a->first, a->second, b->second};
      ++a;
      ++b;
    }
  }
  return std::nullopt;
}

std::uint64_t count_top_above(const LiftedPoint& z) {
  const int h = half_up(z.ell());
  const auto masks = fixed_weight_masks(z.ell(), h);
  // Blocks are independent, so count per block and multiply.
  std::uint64_t total = 1;
  for (int i = 0; i < z.n(); ++i) {
    std::uint64_t c = 0;
    for (std::uint32_t m : masks) c += (z.block(i) & ~m) == 0 ? 1 : 0;
    total = mul_sat(total, c);
  }
  return total;
}

std::uint64_t top_above_formula(int ell, int n, BitVector u) {
  return pow_sat(static_cast<std::uint64_t>(half_up(ell)), n - popcount(u));
}

Rational hit_fraction(const SetCoverInstance& inst, const LiftedPoint& w, const LiftedPoint& z) {
  const OnePositions ones = one_positions(w);
  const std::uint64_t total = ones.size();
  std::uint64_t hits = 0;
  for (std::uint64_t k = 0; k < total; ++k) {
    for (const auto& y : substitute_universe(inst, w, ones.at(k))) {
      if (y == z) {
        ++hits;
        break;
      }
    }
  }
  Rational q{BigInt(hits), BigInt(total)};
  q.canonicalize();
  return q;
}

}  // namespace monolift
