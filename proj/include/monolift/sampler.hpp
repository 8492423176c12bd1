#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "monolift/construction.hpp"
#include "monolift/lifted.hpp"
#include "monolift/rational.hpp"
#include "monolift/rng.hpp"
#include "monolift/setcover.hpp"

namespace monolift {

/// one(z) as a product set: per_block[i] lists the 1-based positions where
/// block i is 1. Index order is mixed radix with block 0 most significant.
struct OnePositions {
  std::vector<std::vector<int>> per_block;

  std::uint64_t size() const;  // saturating
  IndexVector at(std::uint64_t index) const;
  bool contains(const IndexVector& j) const;
};

/// Throws EmptyBlock if some block of z is all zero.
OnePositions one_positions(const LiftedPoint& z);

/// z^{j<-a}: coordinate (i, j_i) set to bit i of a. Throws OutOfRange on a bad j.
LiftedPoint substitute(const LiftedPoint& z, const IndexVector& j, BitVector a);

/// w^{j<-U}, one point per universe element in universe order.
/// Requires w in the Top support and j in one(w) (PreconditionViolated).
std::vector<LiftedPoint> substitute_universe(const SetCoverInstance& inst, const LiftedPoint& w,
                                             const IndexVector& j);

struct SamplerTrace {
  bool xi = true;
  LiftedPoint w;
  std::optional<IndexVector> j;
  std::optional<BitVector> u;
  LiftedPoint output;
};

/// One run of the two-phase sampler. Draw order: xi, then w block by block,
/// then (if xi = 0) j block by block, then the universe index.
SamplerTrace draw(const SetCoverInstance& inst, int ell, CounterRng& rng);

/// Draw number `index` of the stream keyed by `seed`; independent of any other draw.
SamplerTrace draw_indexed(const SetCoverInstance& inst, int ell, std::uint64_t seed, std::uint64_t index);

std::vector<LiftedPoint> sample_points(const SetCoverInstance& inst, int ell, std::uint64_t count,
                                       std::uint64_t seed);

using Pmf = std::map<std::string, Rational>;

/// Aggregates every (xi, w, j, u) path of the sampler with its exact probability.
/// BudgetExceeded when the path count is above `budget`.
Pmf sampler_exact_pmf(const SetCoverInstance& inst, int ell,
                      std::uint64_t budget = 50 * kDefaultEnumerationBudget);

/// d_lift_pmf over the support, keyed like sampler_exact_pmf.
Pmf definition_pmf(const SetCoverInstance& inst, int ell,
                   std::uint64_t budget = kDefaultEnumerationBudget);

Rational pmf_total(const Pmf& pmf);

struct PmfMismatch {
  std::string point;
  Rational lhs;
  Rational rhs;
};

/// First key (in text order) where the two maps differ; absent keys count as 0.
std::optional<PmfMismatch> compare_pmf(const Pmf& lhs, const Pmf& rhs);

// --- counting identities behind the sampler's correctness -----------------

/// |{w in Delta^1_n : z <= w}| by enumeration.
std::uint64_t count_top_above(const LiftedPoint& z);

/// ceil(ell/2)^(n - wt(u)).
std::uint64_t top_above_formula(int ell, int n, BitVector u);

/// Fraction of j in one(w) with z in w^{j<-U}, by enumeration over one(w).
Rational hit_fraction(const SetCoverInstance& inst, const LiftedPoint& w, const LiftedPoint& z);

}  // namespace monolift
