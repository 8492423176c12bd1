#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "monolift/oracle.hpp"
#include "monolift/setcover.hpp"

namespace monolift {

struct CheckResult {
  std::string name;
  bool pass = true;
  std::uint64_t cases = 0;
  std::uint64_t skipped = 0;  // cases whose preconditions did not hold
  std::string detail;
  std::string counterexample;  // first failure
};

// Facts about the construction.
CheckResult verify_sampler_pmf(const SetCoverInstance& inst, int ell);
CheckResult verify_half_mass(const SetCoverInstance& inst, int ell);
CheckResult verify_factopt(const SetCoverInstance& inst);
/// Random (w, j, a, T) with T(w) = 1: the cell w^{j<-U} lies in Bottom with
/// |U| distinct points, and T(w^{j<-a}) equals the projected term at a.
CheckResult verify_substitution(const SetCoverInstance& inst, int ell, std::uint64_t tuples, std::uint64_t seed);
CheckResult verify_counting(const SetCoverInstance& inst, int ell);
CheckResult verify_junta_form(const SetCoverInstance& inst, int ell);

// Claims, over a hypothesis corpus.
/// Every per-block count vector with n <= max_blocks blocks, 1 <= sum, b_i <= ceil(ell/2).
CheckResult verify_term_tail(int ell, int max_blocks);
CheckResult verify_truncate(const SetCoverInstance& inst, int ell, const std::vector<Dnf>& corpus);
CheckResult verify_coor(const SetCoverInstance& inst, int ell, const std::vector<Dnf>& corpus);
CheckResult verify_pop(const SetCoverInstance& inst, int ell, const std::vector<Dnf>& corpus);
CheckResult verify_jkl(const SetCoverInstance& inst, int ell, const std::vector<Dnf>& corpus);

/// Confirmed and Vacuous pass, Refuted fails, BestEffort passes with a note.
CheckResult verify_error_lemma(const SetCoverInstance& inst, int ell, LemmaVariant variant,
                               const FalsifyOptions& options);

struct VerifyConfig {
  std::uint64_t seed = 0;
  std::size_t corpus_size = 200;
  std::uint64_t substitution_tuples = 200;
  int workers = 1;
  /// Lemma sweeps are skipped above this many single-term candidates.
  std::uint64_t lemma_candidate_limit = 2'000'000;
};

/// "facts", "claims" or "lemmas" on one instance at one ell.
std::vector<CheckResult> verify_suite(const std::string& suite, const SetCoverInstance& inst, int ell,
                                      const VerifyConfig& config);

}  // namespace monolift
