#include "monolift/setcover.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <unordered_set>

#include "monolift/errors.hpp"
#include "monolift/rng.hpp"

namespace monolift {

std::string vector_to_string(BitVector v, int n) {
  std::string out(static_cast<std::size_t>(n), '0');
  for (int i = 0; i < n; ++i) {
    if (v & (1u << i)) out[static_cast<std::size_t>(i)] = '1';
  }
  return out;
}

BitVector vector_from_string(std::string_view text) {
  if (text.empty() || text.size() > static_cast<std::size_t>(kMaxSets)) {
    throw Error(ErrorCode::ParseError, "bit vector must have 1.." + std::to_string(kMaxSets) +
                                           " characters: '" + std::string(text) + "'");
  }
  BitVector v = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '1') {
      v |= 1u << i;
    } else if (text[i] != '0') {
      throw Error(ErrorCode::ParseError, "bad character in bit vector '" + std::string(text) +
                                             "' at position " + std::to_string(i + 1));
    }
  }
  return v;
}

std::vector<int> mask_to_indices(SetMask mask) {
  std::vector<int> out;
  for (int i = 0; i < kMaxSets; ++i) {
    if (mask & (1u << i)) out.push_back(i + 1);
  }
  return out;
}

SetMask indices_to_mask(std::span<const int> indices, int n) {
  SetMask mask = 0;
  for (int i : indices) {
    if (i < 1 || i > n) {
      throw Error(ErrorCode::OutOfRange, "set index " + std::to_string(i) + " outside [1," +
                                             std::to_string(n) + "]");
    }
    mask |= 1u << (i - 1);
  }
  return mask;
}

SetCoverInstance::SetCoverInstance(int n, std::vector<BitVector> universe, int removed)
    : n_(n),
      universe_(std::move(universe)),
      duplicates_removed_(removed),
      all_ones_(n == 32 ? ~0u : (1u << n) - 1u) {
  lookup_.reserve(universe_.size());
  for (std::size_t i = 0; i < universe_.size(); ++i) lookup_.emplace_back(universe_[i], i);
  std::sort(lookup_.begin(), lookup_.end());
}

SetCoverInstance SetCoverInstance::from_vectors(int n, std::span<const BitVector> vectors) {
  if (n < 1 || n > kMaxSets) {
    throw Error(ErrorCode::InvalidArgument, "n must be in [1," + std::to_string(kMaxSets) + "]");
  }
  const BitVector ones = (1u << n) - 1u;
  std::vector<BitVector> universe;
  std::unordered_set<BitVector> seen;
  int removed = 0;
  for (BitVector v : vectors) {
    if (v & ~ones) {
      throw Error(ErrorCode::OutOfRange, "vector has bits beyond n=" + std::to_string(n));
    }
    if (v == ones) {
      throw Error(ErrorCode::AllOnesElement,
                  "element " + vector_to_string(v, n) + " is covered by no set");
    }
    if (seen.insert(v).second) {
      universe.push_back(v);
    } else {
      ++removed;
    }
  }
  if (universe.empty()) throw Error(ErrorCode::EmptyUniverse, "universe is empty");
  return SetCoverInstance(n, std::move(universe), removed);
}

SetCoverInstance SetCoverInstance::from_strings(int n, std::span<const std::string> vectors) {
  std::vector<BitVector> parsed;
  parsed.reserve(vectors.size());
  for (const auto& s : vectors) {
    if (static_cast<int>(s.size()) != n) {
      throw Error(ErrorCode::ParseError,
                  "element '" + s + "' does not have n=" + std::to_string(n) + " coordinates");
    }
    parsed.push_back(vector_from_string(s));
  }
  return from_vectors(n, parsed);
}

bool SetCoverInstance::contains(BitVector x) const { return index_of(x).has_value(); }

std::optional<std::size_t> SetCoverInstance::index_of(BitVector x) const {
  auto it = std::lower_bound(lookup_.begin(), lookup_.end(), std::make_pair(x, std::size_t{0}));
  if (it == lookup_.end() || it->first != x) return std::nullopt;
  return it->second;
}

std::vector<std::uint64_t> SetCoverInstance::coverage_of(int set_index) const {
  if (set_index < 1 || set_index > n_) throw Error(ErrorCode::OutOfRange, "set index");
  std::vector<std::uint64_t> bits((universe_.size() + 63) / 64, 0);
  const BitVector b = 1u << (set_index - 1);
  for (std::size_t e = 0; e < universe_.size(); ++e) {
    if (!(universe_[e] & b)) bits[e / 64] |= std::uint64_t{1} << (e % 64);
  }
  return bits;
}

bool is_cover(const SetCoverInstance& inst, SetMask cover) {
  return std::all_of(inst.universe().begin(), inst.universe().end(),
                     [&](BitVector u) { return (~u & cover & inst.all_ones()) != 0; });
}

namespace {

using Words = std::vector<std::uint64_t>;

bool any(const Words& w) {
  return std::any_of(w.begin(), w.end(), [](std::uint64_t x) { return x != 0; });
}

int count(const Words& w) {
  int c = 0;
  for (auto x : w) c += std::popcount(x);
  return c;
}

int lowest(const Words& w) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i]) return static_cast<int>(i * 64) + std::countr_zero(w[i]);
  }
  return -1;
}

bool subset_of(const Words& a, const Words& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] & ~b[i]) return false;
  }
  return true;
}

int overlap(const Words& a, const Words& b) {
  int c = 0;
  for (std::size_t i = 0; i < a.size(); ++i) c += std::popcount(a[i] & b[i]);
  return c;
}

Words minus(const Words& a, const Words& b) {
  Words out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] & ~b[i];
  return out;
}

struct CoverSearch {
  int n = 0;
  std::vector<Words> cov;        // cov[i] for 0-based set i
  std::vector<bool> candidate;   // survives dominance pruning
  std::vector<int> chosen;

  // Size phase: branch on who covers the lowest uncovered element.
  bool exists(const Words& uncovered, int slots) const {
    if (!any(uncovered)) return true;
    if (slots == 0) return false;
    const int need = count(uncovered);
    int best = 0;
    for (int i = 0; i < n; ++i) {
      if (candidate[i]) best = std::max(best, overlap(cov[i], uncovered));
    }
    if (best * slots < need) return false;
    const int e = lowest(uncovered);
    for (int i = 0; i < n; ++i) {
      if (!candidate[i] || !(cov[i][e / 64] >> (e % 64) & 1)) continue;
      if (exists(minus(uncovered, cov[i]), slots - 1)) return true;
    }
    return false;
  }

  // Witness phase: lexicographic DFS over increasing indices, first hit is smallest.
  bool lex_first(const Words& uncovered, int start, int slots) {
    if (!any(uncovered)) return true;
    if (slots == 0) return false;
    const int need = count(uncovered);
    int best = 0;
    Words reachable(uncovered.size(), 0);
    for (int i = start; i < n; ++i) {
      if (!candidate[i]) continue;
      best = std::max(best, overlap(cov[i], uncovered));
      for (std::size_t w = 0; w < reachable.size(); ++w) reachable[w] |= cov[i][w];
    }
    if (best * slots < need || !subset_of(uncovered, reachable)) return false;
    for (int i = start; i < n; ++i) {
      if (!candidate[i]) continue;
      chosen.push_back(i);
      if (lex_first(minus(uncovered, cov[i]), i + 1, slots - 1)) return true;
      chosen.pop_back();
    }
    return false;
  }
};

}  // namespace

CoverSolution opt_exact(const SetCoverInstance& inst) {
  CoverSearch search;
  search.n = inst.n();
  for (int i = 1; i <= inst.n(); ++i) search.cov.push_back(inst.coverage_of(i));
  // Set a is never in the lexicographically smallest minimum cover when some
  // b < a covers a superset of it: swapping a for b keeps a minimum cover and
  // makes the sorted index list smaller.
  search.candidate.assign(static_cast<std::size_t>(inst.n()), true);
  for (int a = 0; a < inst.n(); ++a) {
    if (!any(search.cov[a])) {
      search.candidate[a] = false;
      continue;
    }
    for (int b = 0; b < a; ++b) {
      if (search.candidate[b] && subset_of(search.cov[a], search.cov[b])) {
        search.candidate[a] = false;
        break;
      }
    }
  }
  Words all(search.cov.front().size(), 0);
  for (std::size_t e = 0; e < inst.universe_size(); ++e) all[e / 64] |= std::uint64_t{1} << (e % 64);

  for (int k = 1; k <= inst.n(); ++k) {
    if (!search.exists(all, k)) continue;
    search.chosen.clear();
    search.lex_first(all, 0, k);
    SetMask witness = 0;
    for (int i : search.chosen) witness |= 1u << i;
    return {k, witness};
  }
  // Unreachable for a valid instance: [n] is always a cover.
  throw Error(ErrorCode::PreconditionViolated, "instance has no cover");
}

SetMask greedy_cover(const SetCoverInstance& inst) {
  std::vector<bool> covered(inst.universe_size(), false);
  std::size_t remaining = inst.universe_size();
  SetMask chosen = 0;
  while (remaining > 0) {
    int best = -1;
    std::size_t best_gain = 0;
    for (int i = 0; i < inst.n(); ++i) {
      if (chosen & (1u << i)) continue;
      std::size_t gain = 0;
      for (std::size_t e = 0; e < inst.universe_size(); ++e) {
        if (!covered[e] && !(inst.universe()[e] & (1u << i))) ++gain;
      }
      if (gain > best_gain) {
        best_gain = gain;
        best = i;
      }
    }
    chosen |= 1u << best;
    for (std::size_t e = 0; e < inst.universe_size(); ++e) {
      if (!covered[e] && !(inst.universe()[e] & (1u << best))) {
        covered[e] = true;
        --remaining;
      }
    }
  }
  return chosen;
}

namespace {

int smallest_odd_at_least(double value) {
  int ell = static_cast<int>(std::ceil(value - 1e-9));
  if (ell < 3) ell = 3;
  if (ell % 2 == 0) ++ell;
  return ell;
}

}  // namespace

GapParams gap_params_lin(double vertex_count) {
  if (!(vertex_count >= 16)) {
    throw Error(ErrorCode::InvalidArgument, "gap parameters need N >= 16");
  }
  const double lg = std::log2(vertex_count);
  const double lglg = std::log2(lg);
  const double lglglg = std::log2(lglg);
  GapParams p;
  p.source = GapSource::LemmaLin;
  p.k = std::max(1, static_cast<int>(std::floor(0.5 * lglg / lglglg + 0.5)));
  p.k_prime = 0.5 * std::pow(lg / lglg, 1.0 / p.k);
  p.ell = smallest_odd_at_least(lg / p.k);
  p.below_lemma_range = p.ell < 5;
  return p;
}

GapParams gap_params_conjecture(double vertex_count, int k, double alpha, double beta) {
  if (!(vertex_count > 1) || k < 1 || !(alpha > 0 && alpha < 1) || !(beta > 0 && beta < 1)) {
    throw Error(ErrorCode::InvalidArgument, "conjecture parameters out of range");
  }
  GapParams p;
  p.source = GapSource::Conjecture;
  p.k = k;
  p.k_prime = (1.0 - beta) * k * std::log(vertex_count);
  p.ell = 5;
  p.alpha = alpha;
  p.beta = beta;
  return p;
}

SetCoverInstance random_instance(int n, int m, double zero_density, std::uint64_t seed) {
  if (n < 1 || n > 30 || m < 1) throw Error(ErrorCode::InvalidArgument, "need 1<=n<=30, m>=1");
  if (!(zero_density > 0.0 && zero_density <= 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "zero_density must be in (0,1]");
  }
  const std::uint64_t available = (std::uint64_t{1} << n) - 1;
  if (static_cast<std::uint64_t>(m) > available) {
    throw Error(ErrorCode::Unsatisfiable, "only " + std::to_string(available) +
                                              " distinct non-all-ones vectors exist for n=" +
                                              std::to_string(n));
  }
  CounterRng rng(seed, 0x5e7c0e7);
  const BitVector ones = static_cast<BitVector>(available);
  std::vector<BitVector> out;
  std::unordered_set<BitVector> seen;
  const std::uint64_t max_attempts = 1'000'000 + 1000 * static_cast<std::uint64_t>(m);
  for (std::uint64_t attempt = 0; static_cast<int>(out.size()) < m; ++attempt) {
    if (attempt >= max_attempts) {
      throw Error(ErrorCode::Unsatisfiable, "could not draw enough distinct vectors at density " +
                                                std::to_string(zero_density));
    }
    BitVector v = 0;
    for (int i = 0; i < n; ++i) {
      if (rng.unit() >= zero_density) v |= 1u << i;
    }
    if (v != ones && seen.insert(v).second) out.push_back(v);
  }
  return SetCoverInstance::from_vectors(n, out);
}

PlantedInstance planted_instance(int n, int opt_target, std::uint64_t seed, int m) {
  if (n < 1 || n > 30 || opt_target < 1 || opt_target > n) {
    throw Error(ErrorCode::InvalidArgument, "need 1 <= opt_target <= n <= 30");
  }
  // Distinct vectors with exactly one planted zero: opt_target * 2^(n - opt_target).
  const std::uint64_t available = static_cast<std::uint64_t>(opt_target)
                                  << (n - opt_target);
  if (m == 0) m = static_cast<int>(std::min<std::uint64_t>(std::max(n, opt_target), available));
  if (m < opt_target || static_cast<std::uint64_t>(m) > available) {
    throw Error(ErrorCode::Unsatisfiable,
                "m must lie in [opt_target, " + std::to_string(available) + "]");
  }
  CounterRng rng(seed, 0x91a47ed);
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
  for (int i = n - 1; i > 0; --i) {
    std::swap(order[static_cast<std::size_t>(i)],
              order[static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(i) + 1))]);
  }
  std::vector<int> planted(order.begin(), order.begin() + opt_target);
  std::sort(planted.begin(), planted.end());
  SetMask planted_mask = 0;
  for (int p : planted) planted_mask |= 1u << p;

  const BitVector ones = (1u << n) - 1u;
  std::vector<BitVector> out;
  std::unordered_set<BitVector> seen;
  const std::uint64_t max_attempts = 1'000'000 + 1000 * static_cast<std::uint64_t>(m);
  for (std::uint64_t attempt = 0; static_cast<int>(out.size()) < m; ++attempt) {
    if (attempt >= max_attempts) throw Error(ErrorCode::Unsatisfiable, "planted draw stalled");
    // The first opt_target elements cycle through the planted sets so each one is needed.
    const int owner = out.size() < planted.size()
                          ? planted[out.size()]
                          : planted[rng.below(planted.size())];
    BitVector v = ones & ~(1u << owner);
    for (int i = 0; i < n; ++i) {
      if (!(planted_mask & (1u << i)) && rng.below(2) == 0) v &= ~(1u << i);
    }
    if (seen.insert(v).second) out.push_back(v);
  }
  return {SetCoverInstance::from_vectors(n, out), planted_mask};
}

}  // namespace monolift
