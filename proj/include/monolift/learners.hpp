#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "monolift/dnf.hpp"
#include "monolift/lifted.hpp"
#include "monolift/setcover.hpp"

namespace monolift {

struct Example {
  LiftedPoint point;
  bool label = false;
  friend bool operator==(const Example&, const Example&) = default;
};

/// Labeled draws from the lifted distribution. Draw k is a pure function of
/// (seed, k), so two oracles with the same seed produce the same stream.
class SampleOracle {
 public:
  SampleOracle(SetCoverInstance inst, int ell, std::uint64_t seed);

  const SetCoverInstance& instance() const { return inst_; }
  int ell() const { return ell_; }
  std::uint64_t drawn() const { return next_; }

  Example draw();
  std::vector<Example> draw_many(std::uint64_t count);

 private:
  SetCoverInstance inst_;
  int ell_;
  std::uint64_t seed_;
  std::uint64_t next_ = 0;
};

/// ceil(8 S ln S) for support size S (at least 1).
std::uint64_t default_sample_size(const SetCoverInstance& inst, int ell);

/// Drops repeated points, keeping first occurrences in order.
std::vector<Example> dedupe(const std::vector<Example>& sample);

struct LearnerBudget {
  std::uint64_t examples = 0;  // 0 selects default_sample_size
  std::uint64_t steps = 1'000'000;
};

struct LearnerOutput {
  std::optional<Dnf> hypothesis;  // absent iff aborted
  std::uint64_t steps_used = 0;
  bool aborted = false;
  /// Whether the hypothesis labels every training example correctly.
  bool consistent = false;
  std::uint64_t sample_size = 0;  // distinct examples
  std::optional<DecisionTree> tree;
  std::vector<VarId> junta;
};

class Learner {
 public:
  virtual ~Learner() = default;
  virtual std::string name() const = 0;

  /// Runs on a fixed sample. Throws the learner's own failure codes.
  virtual LearnerOutput fit(const std::vector<Example>& sample, int n, int ell, std::uint64_t step_budget) const = 0;

  /// Draws the sample from the oracle (deduplicated) and fits it.
  LearnerOutput learn(SampleOracle& oracle, const LearnerBudget& budget) const;
};

/// Tries m-subsets of the n*ell variables in lexicographic order; the first
/// subset whose projected truth table is consistent wins. Unseen rows are 0.
/// One step per subset probe plus one per example in the final check.
class JuntaEnumLearner : public Learner {
 public:
  explicit JuntaEnumLearner(int m) : m_(m) {}
  std::string name() const override { return "junta"; }
  LearnerOutput fit(const std::vector<Example>& sample, int n, int ell, std::uint64_t step_budget) const override;

 private:
  int m_;
};

/// Guesses the root variable and which child is built with parameter
/// floor(s/2); the other child keeps s. Succeeds iff some consistent tree has
/// rank <= floor(log2 s), so every tree of at most s leaves is reachable, but
/// the returned tree may have more than s leaves. Memoized on
/// (example subset, s). One step per search call.
class EhDecisionTreeLearner : public Learner {
 public:
  explicit EhDecisionTreeLearner(int s) : s_(s) {}
  std::string name() const override { return "ehdt"; }
  LearnerOutput fit(const std::vector<Example>& sample, int n, int ell, std::uint64_t step_budget) const override;

 private:
  int s_;
};

/// Covers positives greedily with monotone terms that capture no negative,
/// stopping at `cap` terms. May return an inconsistent hypothesis.
/// One step per term-example evaluation.
class CappedGreedyLearner : public Learner {
 public:
  explicit CappedGreedyLearner(int cap) : cap_(cap) {}
  std::string name() const override { return "greedy"; }
  LearnerOutput fit(const std::vector<Example>& sample, int n, int ell, std::uint64_t step_budget) const override;

 private:
  int cap_;
};

/// "junta", "ehdt" or "greedy" with its size parameter.
std::unique_ptr<Learner> make_learner(const std::string& algo, int param);

}  // namespace monolift
