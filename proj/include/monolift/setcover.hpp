#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace monolift {

/// An n-bit vector with bit (i-1) holding coordinate i.
using BitVector = std::uint32_t;
/// A subset of the sets [n]; bit (i-1) set iff set i is chosen.
using SetMask = std::uint32_t;

inline constexpr int kMaxSets = 31;

/// Coordinate string "110" <-> vector (index 1 is the leftmost character).
std::string vector_to_string(BitVector v, int n);
BitVector vector_from_string(std::string_view text);

std::vector<int> mask_to_indices(SetMask mask);
SetMask indices_to_mask(std::span<const int> indices, int n);

/// A set-cover instance S = ([n], U, E) in vector form: element u has u_i = 0
/// iff set i covers it. Immutable after construction.
class SetCoverInstance {
 public:
  /// Deduplicates (first occurrence wins). Rejects all-ones vectors, bits
  /// beyond n, and an empty result.
  static SetCoverInstance from_vectors(int n, std::span<const BitVector> vectors);
  static SetCoverInstance from_strings(int n, std::span<const std::string> vectors);

  int n() const { return n_; }
  const std::vector<BitVector>& universe() const { return universe_; }
  std::size_t universe_size() const { return universe_.size(); }
  /// Vertex count n + |U|.
  int vertex_count() const { return n_ + static_cast<int>(universe_.size()); }
  int duplicates_removed() const { return duplicates_removed_; }
  BitVector all_ones() const { return all_ones_; }

  bool contains(BitVector x) const;
  std::optional<std::size_t> index_of(BitVector x) const;

  /// Elements set i (1-based) covers, as a bitset over universe indices.
  std::vector<std::uint64_t> coverage_of(int set_index) const;

  /// Same n and same universe in the same order.
  friend bool operator==(const SetCoverInstance& a, const SetCoverInstance& b) {
    return a.n_ == b.n_ && a.universe_ == b.universe_;
  }

 private:
  SetCoverInstance(int n, std::vector<BitVector> universe, int removed);

  int n_ = 0;
  std::vector<BitVector> universe_;
  int duplicates_removed_ = 0;
  BitVector all_ones_ = 0;
  std::vector<std::pair<BitVector, std::size_t>> lookup_;  // sorted by vector
};

bool is_cover(const SetCoverInstance& inst, SetMask cover);

struct CoverSolution {
  int size = 0;
  SetMask witness = 0;
};

/// Minimum cover by iterative deepening on the cover size. Among minimum
/// covers the witness is the lexicographically smallest sorted index list.
CoverSolution opt_exact(const SetCoverInstance& inst);

/// Repeatedly takes the set covering the most uncovered elements (lowest index on ties).
SetMask greedy_cover(const SetCoverInstance& inst);

enum class GapSource { LemmaLin, Conjecture };

struct GapParams {
  int k = 1;
  /// Irrational in general; carried as a double and only used to shape budgets.
  double k_prime = 1.0;
  int ell = 3;
  GapSource source = GapSource::LemmaLin;
  double alpha = 0.0;
  double beta = 0.0;
  /// Set when ell < 5: constructions work, lemma checkers will refuse.
  bool below_lemma_range = false;
};

/// k = max(1, round-half-up(loglog N / (2 logloglog N))), k' = (log N / loglog N)^(1/k) / 2,
/// ell = smallest odd integer >= max(3, log N / k). Logs base 2; requires N >= 16.
GapParams gap_params_lin(double vertex_count);

/// The conjecture regime: k' = (1 - beta) k ln N, ell fixed at 5.
GapParams gap_params_conjecture(double vertex_count, int k, double alpha, double beta);

/// m distinct non-all-ones vectors; each coordinate is 0 with probability zero_density.
SetCoverInstance random_instance(int n, int m, double zero_density, std::uint64_t seed);

struct PlantedInstance {
  SetCoverInstance instance;
  SetMask planted_cover = 0;
};

/// Every element is covered by exactly one planted set, so opt <= opt_target.
/// m defaults to max(n, opt_target) elements, capped at the number that exist.
PlantedInstance planted_instance(int n, int opt_target, std::uint64_t seed, int m = 0);

}  // namespace monolift
