#include "monolift/construction.hpp"

#include "monolift/bits.hpp"
#include "monolift/errors.hpp"

namespace monolift {

void require_valid_ell(int ell) {
  if (ell < 3 || ell > kMaxEll || ell % 2 == 0) {
    throw Error(ErrorCode::InvalidArgument,
                "ell must be odd and in [3," + std::to_string(kMaxEll) + "], got " + std::to_string(ell));
  }
}

int half_down(int ell) { return ell / 2; }
int half_up(int ell) { return (ell + 1) / 2; }

int gamma_base(const SetCoverInstance& inst, BitVector x) {
  if (x == inst.all_ones()) return 1;
  if (inst.contains(x)) return 0;
  throw Error(ErrorCode::OffSupport, vector_to_string(x, inst.n()) + " is outside the base support");
}

Rational base_pmf(const SetCoverInstance& inst, BitVector x) {
  if (x == inst.all_ones()) return Rational(1, 2);
  if (inst.contains(x)) return Rational(1, 2 * inst.universe_size());
  return Rational(0);
}

Rational base_distance_to_conjunction(const SetCoverInstance& inst, SetMask chosen) {
  // The conjunction is 1 on the all-ones vector, so only elements can disagree.
  const BitVector c = chosen & inst.all_ones();
  Rational dist(0);
  for (BitVector u : inst.universe()) {
    if ((u & c) == c) dist += Rational(1, 2 * inst.universe_size());
  }
  return dist;
}

bool check_factopt(const SetCoverInstance& inst, SetMask chosen) {
  return base_distance_to_conjunction(inst, chosen) == 0;
}

std::uint64_t delta_count(int ell) {
  require_valid_ell(ell);
  return binomial(ell, half_down(ell));
}

std::uint64_t SupportSize::total() const {
  const std::uint64_t sum = top + bottom;
  return sum < top ? UINT64_MAX : sum;
}

SupportSize support_size(const SetCoverInstance& inst, int ell) {
  const std::uint64_t d = delta_count(ell);
  const std::uint64_t per_cell = pow_sat(d, inst.n());
  return {per_cell, mul_sat(inst.universe_size(), per_cell)};
}

SupportClass classify(const SetCoverInstance& inst, const LiftedPoint& y) {
  if (y.n() != inst.n()) {
    throw Error(ErrorCode::InvalidArgument, "point has " + std::to_string(y.n()) +
                                                " blocks, instance has n=" + std::to_string(inst.n()));
  }
  require_valid_ell(y.ell());
  const int lo = half_down(y.ell());
  const int hi = half_up(y.ell());
  for (int i = 0; i < y.n(); ++i) {
    const int w = y.block_weight(i);
    if (w != lo && w != hi) return SupportClass::off();
  }
  const BitVector u = majority_decode(y);
  if (u == inst.all_ones()) return SupportClass::top();
  if (inst.contains(u)) return SupportClass::bottom(u);
  return SupportClass::off();
}

int gamma_lift(const SetCoverInstance& inst, const LiftedPoint& y) {
  const SupportClass c = classify(inst, y);
  if (c.kind == SupportKind::Top) return 1;
  if (c.kind == SupportKind::Bottom) return 0;
  throw Error(ErrorCode::OffSupport, y.to_string() + " is outside the lifted support");
}

Rational top_point_mass(const SetCoverInstance& inst, int ell) {
  return Rational(BigInt(1), 2 * pow_big(BigInt(delta_count(ell)), inst.n()));
}

Rational bottom_point_mass(const SetCoverInstance& inst, int ell) {
  return Rational(BigInt(1),
                  2 * BigInt(inst.universe_size()) * pow_big(BigInt(delta_count(ell)), inst.n()));
}

Rational d_lift_pmf(const SetCoverInstance& inst, const LiftedPoint& y) {
  const SupportClass c = classify(inst, y);
  switch (c.kind) {
    case SupportKind::Top: return top_point_mass(inst, y.ell());
    case SupportKind::Bottom: return bottom_point_mass(inst, y.ell());
    case SupportKind::Off: break;
  }
  return Rational(0);
}

namespace {

// Odometer over a product of per-block choice lists, block 0 most significant.
template <typename Visit>
void for_each_product(const std::vector<const std::vector<std::uint32_t>*>& choices, int ell, Visit&& visit) {
  const std::size_t n = choices.size();
  std::vector<std::size_t> idx(n, 0);
  std::vector<std::uint32_t> blocks(n);
  for (;;) {
    for (std::size_t i = 0; i < n; ++i) blocks[i] = (*choices[i])[idx[i]];
    visit(LiftedPoint(ell, blocks));
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (++idx[i] < choices[i]->size()) break;
      idx[i] = 0;
      if (i == 0) return;
    }
  }
}

}  // namespace

void for_each_support_point(const SetCoverInstance& inst, int ell, std::uint64_t budget,
                            const std::function<void(const LiftedPoint&, const SupportClass&)>& visit) {
  require_valid_ell(ell);
  const SupportSize size = support_size(inst, ell);
  if (size.total() > budget) {
    throw Error(ErrorCode::BudgetExceeded, "support has " + std::to_string(size.total()) +
                                               " points, budget is " + std::to_string(budget));
  }
  const auto delta0 = fixed_weight_masks(ell, half_down(ell));
  const auto delta1 = fixed_weight_masks(ell, half_up(ell));
  const auto n = static_cast<std::size_t>(inst.n());

  std::vector<const std::vector<std::uint32_t>*> choices(n, &delta1);
  const SupportClass top = SupportClass::top();
  for_each_product(choices, ell, [&](const LiftedPoint& y) { visit(y, top); });

  for (BitVector u : inst.universe()) {
    for (std::size_t i = 0; i < n; ++i) choices[i] = (u >> i) & 1u ? &delta1 : &delta0;
    const SupportClass cell = SupportClass::bottom(u);
    for_each_product(choices, ell, [&](const LiftedPoint& y) { visit(y, cell); });
  }
}

std::vector<SupportPoint> support_enumerate(const SetCoverInstance& inst, int ell, std::uint64_t budget) {
  const Rational top_mass = top_point_mass(inst, ell);
  const Rational bottom_mass = bottom_point_mass(inst, ell);
  std::vector<SupportPoint> out;
  for_each_support_point(inst, ell, budget, [&](const LiftedPoint& y, const SupportClass& c) {
    out.push_back({y, c, c.kind == SupportKind::Top ? top_mass : bottom_mass});
  });
  return out;
}

PackedSupport pack_support(const SetCoverInstance& inst, int ell, std::uint64_t budget) {
  require_valid_ell(ell);
  if (inst.n() * ell > kMaxPackedBits) {
    throw Error(ErrorCode::BudgetExceeded, "n*ell exceeds the packed 64-bit form");
  }
  PackedSupport s;
  s.n = inst.n();
  s.ell = ell;
  const SupportSize size = support_size(inst, ell);
  if (size.total() <= budget) {
    s.top.reserve(size.top);
    s.bottom.reserve(size.bottom);
    s.bottom_element.reserve(size.bottom);
  }
  for_each_support_point(inst, ell, budget, [&](const LiftedPoint& y, const SupportClass& c) {
    if (c.kind == SupportKind::Top) {
      s.top.push_back(y.pack());
    } else {
      s.bottom.push_back(y.pack());
      s.bottom_element.push_back(static_cast<std::uint32_t>(*inst.index_of(c.element)));
    }
  });
  return s;
}

Dnf monotone_junta_form(const SetCoverInstance& inst, int ell, SetMask cover) {
  require_valid_ell(ell);
  if ((cover & ~inst.all_ones()) != 0) throw Error(ErrorCode::OutOfRange, "cover index beyond n");
  if (!is_cover(inst, cover)) {
    throw Error(ErrorCode::NotACover, "the chosen sets do not cover the universe");
  }
  const auto minimal = fixed_weight_masks(ell, half_up(ell));
  const std::vector<int> blocks = mask_to_indices(cover);
  Dnf out;
  std::vector<std::size_t> idx(blocks.size(), 0);
  for (;;) {
    std::vector<VarId> pos;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      for (int p : set_positions(minimal[idx[b]])) pos.push_back({blocks[b], p + 1});
    }
    out.add(Term(std::move(pos), {}));
    std::size_t b = blocks.size();
    bool done = true;
    while (b > 0) {
      --b;
      if (++idx[b] < minimal.size()) {
        done = false;
        break;
      }
      idx[b] = 0;
    }
    if (done) break;
  }
  return out;
}

}  // namespace monolift
