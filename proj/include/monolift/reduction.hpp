#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "monolift/learners.hpp"
#include "monolift/rational.hpp"
#include "monolift/setcover.hpp"

namespace monolift {

enum class DistanceMode { Exact, Sampled };

struct ReductionParams {
  int ell = 5;
  std::uint64_t step_budget = 10'000'000;
  /// Learner sample size; 0 selects default_sample_size.
  std::uint64_t examples = 0;
  /// Defaults to 1/(16N) with N the vertex count.
  std::optional<Rational> eta_threshold;
  std::optional<std::uint64_t> size_cap;
  DistanceMode mode = DistanceMode::Exact;
  std::uint64_t sample_count = 10'000;
  std::uint64_t seed = 0;
  /// Exact mode switches to sampling when the support is too large.
  bool fallback_to_sampled = false;
};

enum class Answer { Yes, No };

enum class VerdictReason { EtaBelowThreshold, EtaAboveThreshold, StepBudgetExceeded, SizeCapExceeded, LearnerFailed };

std::string to_string(Answer a);
std::string to_string(VerdictReason r);
std::string to_string(DistanceMode m);
DistanceMode parse_distance_mode(const std::string& text);

struct EtaEstimate {
  Rational estimate;  // disagreements / count
  double radius = 0;  // Hoeffding radius at confidence 2/3
  bool low_power = false;
  std::uint64_t count = 0;
};

struct Verdict {
  Answer answer = Answer::No;
  VerdictReason reason = VerdictReason::EtaAboveThreshold;
  Rational threshold;
  std::optional<Rational> eta;  // exact, or the sampled estimate
  std::optional<double> radius;  // set in sampled mode
  bool low_power = false;
  std::optional<Dnf> hypothesis;
  std::uint64_t steps_used = 0;
  std::string learner;
};

/// 1/(16N).
Rational default_eta_threshold(const SetCoverInstance& inst);
/// 1/(16n), the accuracy the learners are run at. Pass it as eta_threshold to use it.
Rational learner_eta_threshold(const SetCoverInstance& inst);

/// Disagreement frequency of F over `count` lifted draws. The radius is
/// sqrt(ln 6 / (2 count)); low_power is set when it reaches 1/4.
EtaEstimate eta_sampled(const SetCoverInstance& inst, int ell, const Dnf& f, std::uint64_t count, std::uint64_t seed);

/// learn -> size gate (when size_cap is set) -> distance -> threshold.
Verdict algorithm_b(const SetCoverInstance& inst, const Learner& learner, const ReductionParams& params);

/// algorithm_b with a mandatory size cap.
Verdict algorithm_b_proper(const SetCoverInstance& inst, const Learner& learner, const ReductionParams& params);

/// 2^(5k), saturating.
std::uint64_t strict_proper_size_cap(int k);
/// N^(factor * c * k), saturating; factor is 4 for general ell, 5 for ell = 5.
std::uint64_t step_schedule(double vertex_count, double c, int k, int factor);

struct BenchRow {
  std::string instance;
  int opt = 0;
  int ell = 0;
  std::string learner;
  std::optional<int> hyp_size;
  std::optional<Rational> eta;
  std::string verdict;
  std::uint64_t steps_used = 0;
};

struct BenchConfig {
  std::vector<int> ells{3, 5};
  std::vector<int> n_values{2, 3};
  int seeds = 2;
  std::uint64_t seed = 0;
  std::uint64_t step_budget = 5'000'000;
};

const std::string& bench_csv_header();
std::string to_csv(const BenchRow& row);
/// Planted instances of each n and seed, run through the junta learner with
/// m = opt*ell and the greedy learner with cap 1.
std::vector<BenchRow> run_bench(const BenchConfig& config);

}  // namespace monolift
