#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "monolift/dnf.hpp"
#include "monolift/lifted.hpp"
#include "monolift/rational.hpp"
#include "monolift/setcover.hpp"

namespace monolift {

inline constexpr std::uint64_t kDefaultEnumerationBudget = 1'000'000;

/// Rejects even ell and ell outside [3, kMaxEll].
void require_valid_ell(int ell);
int half_down(int ell);
int half_up(int ell);

// --- base pair over {0,1}^n -------------------------------------------------

/// 1 on the all-ones vector, 0 on universe elements, OffSupport elsewhere.
int gamma_base(const SetCoverInstance& inst, BitVector x);
/// 1/2 on all-ones, 1/(2|U|) on each element, 0 elsewhere.
Rational base_pmf(const SetCoverInstance& inst, BitVector x);

/// Exact distance under the base distribution between the base target and
/// the conjunction of the chosen coordinates.
Rational base_distance_to_conjunction(const SetCoverInstance& inst, SetMask chosen);
/// True iff that distance is exactly 0; agrees with is_cover.
bool check_factopt(const SetCoverInstance& inst, SetMask chosen);

// --- lifted pair over ({0,1}^ell)^n ----------------------------------------

enum class SupportKind { Top, Bottom, Off };

struct SupportClass {
  SupportKind kind = SupportKind::Off;
  /// The universe element whose cell holds the point; meaningful for Bottom only.
  BitVector element = 0;

  static SupportClass top() { return {SupportKind::Top, 0}; }
  static SupportClass bottom(BitVector u) { return {SupportKind::Bottom, u}; }
  static SupportClass off() { return {SupportKind::Off, 0}; }
  friend bool operator==(const SupportClass&, const SupportClass&) = default;
};

/// |Delta^0| = |Delta^1| = C(ell, floor(ell/2)).
std::uint64_t delta_count(int ell);

struct SupportSize {
  std::uint64_t top = 0;     // |Delta^1|^n
  std::uint64_t bottom = 0;  // |U| * |Delta^0|^n
  std::uint64_t total() const;  // saturating
};
SupportSize support_size(const SetCoverInstance& inst, int ell);

/// Top iff every block has weight ceil(ell/2); Bottom(u) iff the block weight
/// pattern decodes to some u in U; Off otherwise.
SupportClass classify(const SetCoverInstance& inst, const LiftedPoint& y);

/// 1 on Top, 0 on Bottom, OffSupport otherwise.
int gamma_lift(const SetCoverInstance& inst, const LiftedPoint& y);

/// Exact mass of y: 1/(2|Delta^1|^n) on Top, 1/(2|U||Delta^0|^n) on Bottom, else 0.
Rational d_lift_pmf(const SetCoverInstance& inst, const LiftedPoint& y);
Rational top_point_mass(const SetCoverInstance& inst, int ell);
Rational bottom_point_mass(const SetCoverInstance& inst, int ell);

struct SupportPoint {
  LiftedPoint point;
  SupportClass cls;
  Rational mass;
};

/// Visits each support point exactly once: Top points first, then the Bottom
/// cells in universe order. Throws BudgetExceeded before visiting anything if
/// the support is larger than `budget`.
void for_each_support_point(const SetCoverInstance& inst, int ell, std::uint64_t budget,
                            const std::function<void(const LiftedPoint&, const SupportClass&)>& visit);

std::vector<SupportPoint> support_enumerate(const SetCoverInstance& inst, int ell,
                                            std::uint64_t budget = kDefaultEnumerationBudget);

/// The support in 64-bit packed form (requires n*ell <= 64).
struct PackedSupport {
  int n = 0;
  int ell = 0;
  std::vector<std::uint64_t> top;
  std::vector<std::uint64_t> bottom;
  /// Universe index of each bottom point's cell.
  std::vector<std::uint32_t> bottom_element;
};
PackedSupport pack_support(const SetCoverInstance& inst, int ell,
                           std::uint64_t budget = kDefaultEnumerationBudget);

/// The DNF of AND_{i in C} Majority(y_i): the product of the minimal
/// ceil(ell/2)-subsets of each chosen block. Throws NotACover.
Dnf monotone_junta_form(const SetCoverInstance& inst, int ell, SetMask cover);

}  // namespace monolift
