#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "monolift/construction.hpp"
#include "monolift/dnf.hpp"
#include "monolift/rational.hpp"
#include "monolift/setcover.hpp"

namespace monolift {

struct DistReport {
  Rational dist;
  Rational err_given_1;  // Pr[F != target | target = 1]
  Rational err_given_0;
  std::uint64_t support_size = 0;
  std::uint64_t top_errors = 0;
  std::uint64_t bottom_errors = 0;
};

/// Exact computations over the packed support of one (instance, ell) pair.
class ExactOracle {
 public:
  ExactOracle(SetCoverInstance inst, int ell, std::uint64_t budget = kDefaultEnumerationBudget);

  const SetCoverInstance& instance() const { return inst_; }
  int ell() const { return ell_; }
  const PackedSupport& support() const { return support_; }

  DistReport dist(const Dnf& f) const;
  DistReport dist(const CompiledDnf& f) const;
  /// Builds the report from raw error counts.
  DistReport report(std::uint64_t top_errors, std::uint64_t bottom_errors) const;

  /// Omega = Top points where F is 1.
  std::vector<std::uint64_t> omega(const CompiledDnf& f) const;
  /// Average mwidth over Omega; EmptyOmega if Omega is empty.
  Rational expected_mwidth_omega(const Dnf& f) const;

 private:
  SetCoverInstance inst_;
  int ell_;
  PackedSupport support_;
};

DistReport dist_exact(const SetCoverInstance& inst, int ell, const Dnf& f,
                      std::uint64_t budget = kDefaultEnumerationBudget);
Rational expected_mwidth_omega(const SetCoverInstance& inst, int ell, const Dnf& f,
                               std::uint64_t budget = kDefaultEnumerationBudget);

/// ell must be odd and at least 5 for the lemma-level checkers.
void require_lemma_ell(int ell);

// --- per-block term tail ---------------------------------------------------

struct TermTailReport {
  Rational probability;  // prod C(ell-b_i, h-b_i) / C(ell, h)
  int total = 0;         // sum of b_i; the bound is 2^(-total/2)
  bool pass = false;
};

/// Probability that a uniform Top point satisfies a monotone term with b_i
/// positive literals in block i. Throws LemmaRequiresEll5 for ell < 5.
TermTailReport check_term_tail(int ell, const std::vector<int>& per_block);

// --- truncation -------------------------------------------------------------

struct TruncateReport {
  int opt = 0;
  int bound = 0;  // floor(opt * ell / 5)
  Dnf truncated;
  int removed = 0;
  Rational dist_before;
  Rational dist_after;
  /// Pr over Top of F != F'; each removed term contributes < 2^(-opt*ell/10).
  Rational top_change;
  bool union_bound_holds = false;
  bool size_precondition_holds = false;
  /// dist_after <= dist_before + 2^(-opt*ell/20).
  bool inequality_holds = false;
  bool pass = false;
};

/// With require_size_precondition the size condition |F| < 2^(opt*ell/20) is
/// enforced (SizePreconditionViolated); otherwise it is only reported and the
/// final inequality is informational.
TruncateReport check_truncate(const SetCoverInstance& inst, int ell, const Dnf& f,
                              bool require_size_precondition = true);

// --- the two projection claims ---------------------------------------------

struct ProbabilityReport {
  Rational probability;
  Rational bound;  // 1/(2|U|)
  bool pass = false;
};

/// Pr over j in one(z), u in U of F(z^{j<-u}) = 1, by full enumeration.
/// Requires opt >= 2, z in Top, F(z) = 1 and every term of monotone size at
/// most ceil(ell/2)(opt-1)/2.
ProbabilityReport check_claim_coor(const SetCoverInstance& inst, int ell, const Dnf& f, const LiftedPoint& z);

struct CoorAReport {
  Rational expectation;  // E over Omega of mwidth
  ProbabilityReport result;
};

/// Same probability with z uniform over Omega. Requires E[mwidth] <= opt*ell/4.
CoorAReport check_claim_coorA(const SetCoverInstance& inst, int ell, const Dnf& f);

struct PopReport {
  bool applicable = false;  // Omega nonempty and E[mwidth] <= opt*ell/4
  Rational expectation;
  Rational dist;
  Rational bound;  // 1/(8|U|)
  bool pass = false;  // vacuously true when not applicable
};

PopReport check_claim_pop(const ExactOracle& oracle, int opt, const Dnf& f);

struct JklReport {
  Rational expectation;
  double bound = 0.0;  // 4 log2 |F|, display only
  bool pass = false;   // decided exactly as 2^E <= |F|^4
};

/// Requires |F| >= 2 (SizeTooSmall) and dist <= 1/4 (DistTooLarge).
JklReport check_claim_jkl(const ExactOracle& oracle, const Dnf& f);
JklReport check_claim_jkl(const SetCoverInstance& inst, int ell, const Dnf& f);

// --- error-lemma falsifier --------------------------------------------------

enum class LemmaVariant { V16, V20 };
enum class SearchStrategy { ExhaustiveSingleTerm, ExhaustiveUpToK, RandomizedLocalSearch };
enum class FalsifyVerdict { Confirmed, Refuted, BestEffort, Vacuous };

std::string to_string(LemmaVariant v);
std::string to_string(SearchStrategy s);
std::string to_string(FalsifyVerdict v);
LemmaVariant parse_variant(const std::string& text);
SearchStrategy parse_strategy(const std::string& text);

struct FalsifyOptions {
  SearchStrategy strategy = SearchStrategy::ExhaustiveSingleTerm;
  /// ExhaustiveUpToK: maximum number of terms and the variables terms may use
  /// (empty window = all variables).
  int max_terms = 1;
  std::vector<VarId> window;
  /// RandomizedLocalSearch.
  std::uint64_t seed = 0;
  std::uint64_t iterations = 20000;
  /// Cap on candidate DNFs for exhaustive strategies.
  std::uint64_t candidate_budget = 100'000'000;
  int workers = 1;
};

struct FalsifyReport {
  LemmaVariant variant = LemmaVariant::V16;
  SearchStrategy strategy = SearchStrategy::ExhaustiveSingleTerm;
  int opt = 0;
  std::uint64_t size_budget = 0;  // largest size strictly below the lemma's threshold
  std::string bound_text;         // exact form of the distance bound
  double bound_approx = 0.0;
  Dnf best;
  Rational best_dist;
  std::uint64_t candidates = 0;
  /// True when the strategy enumerated every DNF within the size budget.
  bool exhaustive = false;
  FalsifyVerdict verdict = FalsifyVerdict::BestEffort;
  std::string note;
};

/// Searches for a DNF under the size budget whose distance falls below the
/// lemma's bound. Requires ell >= 5.
FalsifyReport falsify_error_lemma(const SetCoverInstance& inst, int ell, LemmaVariant variant,
                                  const FalsifyOptions& options = {});

/// dist >= bound for the variant, decided exactly.
bool meets_lemma_bound(const Rational& dist, LemmaVariant variant, std::size_t universe_size, int opt, int ell);

// --- corpus and suite --------------------------------------------------------

/// At least `count` hypotheses: junta forms of every cover, their
/// truncations and random sub-DNFs, constants, single terms and random DNFs.
std::vector<Dnf> hypothesis_corpus(const SetCoverInstance& inst, int ell, std::uint64_t seed,
                                   std::size_t count = 200);

struct SuiteInstance {
  std::string name;
  SetCoverInstance instance;
};

/// The six named small instances (n <= 3, |U| <= 3).
std::vector<SuiteInstance> desk_suite();

}  // namespace monolift
