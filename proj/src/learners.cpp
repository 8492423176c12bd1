#include "monolift/learners.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <set>
#include <unordered_map>

#include "monolift/construction.hpp"
#include "monolift/errors.hpp"
#include "monolift/sampler.hpp"

namespace monolift {

namespace {

struct OutOfSteps {};

class StepMeter {
 public:
  explicit StepMeter(std::uint64_t limit) : limit_(limit) {}
  void charge(std::uint64_t k = 1) {
    if (k > limit_ - used_) {
      used_ = limit_;
      throw OutOfSteps{};
    }
    used_ += k;
  }
  std::uint64_t used() const { return used_; }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

void require_packable(int n, int ell) {
  if (n < 1 || ell < 1 || n * ell > kMaxPackedBits) {
    throw Error(ErrorCode::OutOfRange, "learners need 1 <= n*ell <= 64");
  }
}

VarId var_of_bit(int bit, int ell) { return {bit / ell + 1, bit % ell + 1}; }

struct PackedSample {
  std::vector<std::uint64_t> points;
  std::vector<bool> labels;
};

PackedSample pack_sample(const std::vector<Example>& sample, int n, int ell) {
  PackedSample out;
  for (const auto& e : sample) {
    if (e.point.n() != n || e.point.ell() != ell) {
      throw Error(ErrorCode::InvalidArgument, "example " + e.point.to_string() + " has the wrong shape");
    }
    out.points.push_back(e.point.pack());
    out.labels.push_back(e.label);
  }
  return out;
}

bool consistent_with(const Dnf& f, const std::vector<Example>& sample) {
  for (const auto& e : sample) {
    if (eval(f, e.point) != e.label) return false;
  }
  return true;
}

}  // namespace

SampleOracle::SampleOracle(SetCoverInstance inst, int ell, std::uint64_t seed)
    : inst_(std::move(inst)), ell_(ell), seed_(seed) {
  require_valid_ell(ell_);
}

Example SampleOracle::draw() {
  const auto trace = draw_indexed(inst_, ell_, seed_, next_++);
  return {trace.output, gamma_lift(inst_, trace.output) == 1};
}

std::vector<Example> SampleOracle::draw_many(std::uint64_t count) {
  std::vector<Example> out;
  out.reserve(count);
  for (std::uint64_t k = 0; k < count; ++k) out.push_back(draw());
  return out;
}

std::uint64_t default_sample_size(const SetCoverInstance& inst, int ell) {
  const double s = static_cast<double>(std::max<std::uint64_t>(support_size(inst, ell).total(), 2));
  return static_cast<std::uint64_t>(std::ceil(8.0 * s * std::log(s)));
}

std::vector<Example> dedupe(const std::vector<Example>& sample) {
  std::vector<Example> out;
  std::set<LiftedPoint> seen;
  for (const auto& e : sample) {
    if (seen.insert(e.point).second) out.push_back(e);
  }
  return out;
}

LearnerOutput Learner::learn(SampleOracle& oracle, const LearnerBudget& budget) const {
  const std::uint64_t count = budget.examples == 0 ? default_sample_size(oracle.instance(), oracle.ell()) : budget.examples;
  const auto sample = dedupe(oracle.draw_many(count));
  return fit(sample, oracle.instance().n(), oracle.ell(), budget.steps);
}

// ---------------------------------------------------------------- junta

LearnerOutput JuntaEnumLearner::fit(const std::vector<Example>& sample, int n, int ell,
                                    std::uint64_t step_budget) const {
  require_packable(n, ell);
  const int vars = n * ell;
  if (m_ < 0 || m_ > vars) throw Error(ErrorCode::InvalidArgument, "junta size must lie in [0, n*ell]");
  const auto packed = pack_sample(sample, n, ell);

  LearnerOutput out;
  out.sample_size = sample.size();
  StepMeter meter(step_budget);

  std::vector<int> pick(static_cast<std::size_t>(m_));
  for (int k = 0; k < m_; ++k) pick[static_cast<std::size_t>(k)] = k;

  auto row_of = [&](std::uint64_t y) {
    std::uint64_t r = 0;
    for (int k = 0; k < m_; ++k) r |= ((y >> pick[static_cast<std::size_t>(k)]) & 1u) << k;
    return r;
  };

  try {
    for (;;) {
      meter.charge();
      std::unordered_map<std::uint64_t, bool> table;
      bool ok = true;
      for (std::size_t e = 0; e < packed.points.size() && ok; ++e) {
        const auto [it, fresh] = table.emplace(row_of(packed.points[e]), packed.labels[e]);
        ok = fresh || it->second == packed.labels[e];
      }
      if (ok) {
        std::vector<std::uint64_t> ones;
        for (const auto& [row, label] : table) {
          if (label) ones.push_back(row);
        }
        std::sort(ones.begin(), ones.end());
        std::vector<VarId> chosen;
        for (int b : pick) chosen.push_back(var_of_bit(b, ell));
        Dnf f;
        for (std::uint64_t r : ones) {
          std::vector<VarId> pos;
          std::vector<VarId> neg;
          for (int k = 0; k < m_; ++k) ((r >> k) & 1u ? pos : neg).push_back(chosen[static_cast<std::size_t>(k)]);
          f.add(Term(std::move(pos), std::move(neg)));
        }
        meter.charge(sample.size());
        out.consistent = consistent_with(f, sample);
        if (!out.consistent) throw Error(ErrorCode::PreconditionViolated, "junta hypothesis disagrees with its sample");
        out.hypothesis = std::move(f);
        out.junta = std::move(chosen);
        out.steps_used = meter.used();
        return out;
      }
      // Next combination in lexicographic order.
      int k = m_ - 1;
      while (k >= 0 && pick[static_cast<std::size_t>(k)] == vars - m_ + k) --k;
      if (k < 0) break;
      ++pick[static_cast<std::size_t>(k)];
      for (int t = k + 1; t < m_; ++t) pick[static_cast<std::size_t>(t)] = pick[static_cast<std::size_t>(t - 1)] + 1;
    }
  } catch (const OutOfSteps&) {
    out.aborted = true;
    out.steps_used = meter.used();
    return out;
  }
  throw Error(ErrorCode::NoConsistentSubset, "no " + std::to_string(m_) + "-junta fits the sample");
}

// ---------------------------------------------------------------- decision trees

namespace {

using Subset = std::vector<std::uint64_t>;

class TreeSearch {
 public:
  TreeSearch(const PackedSample& s, int n, int ell, StepMeter& meter) : s_(s), vars_(n * ell), ell_(ell), meter_(meter) {}

  std::optional<DecisionTree> search(const Subset& e, int s) {
    meter_.charge();
    const auto key = std::make_pair(e, s);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    auto result = compute(e, s);
    memo_.emplace(key, result);
    return result;
  }

 private:
  std::optional<DecisionTree> compute(const Subset& e, int s) {
    int ones = 0;
    int total = 0;
    for_each(e, [&](std::size_t i) {
      ++total;
      ones += s_.labels[i] ? 1 : 0;
    });
    if (ones == 0 || ones == total) return DecisionTree::leaf(ones > 0);
    if (s < 2) return std::nullopt;

    for (int v = 0; v < vars_; ++v) {
      Subset zero(e.size());
      Subset one(e.size());
      bool any0 = false;
      bool any1 = false;
      for_each(e, [&](std::size_t i) {
        const bool b = (s_.points[i] >> v) & 1u;
        (b ? one : zero)[i / 64] |= std::uint64_t{1} << (i % 64);
        (b ? any1 : any0) = true;
      });
      if (!any0 || !any1) continue;
      for (bool small_is_one : {false, true}) {
        const Subset& small_side = small_is_one ? one : zero;
        const Subset& big_side = small_is_one ? zero : one;
        auto small = search(small_side, s / 2);
        if (!small) continue;
        auto big = search(big_side, s);
        if (!big) continue;
        return build(v, small_is_one, *small, *big);
      }
    }
    return std::nullopt;
  }

  DecisionTree build(int v, bool small_is_one, const DecisionTree& small, const DecisionTree& big) const {
    const VarId var = var_of_bit(v, ell_);
    return small_is_one ? DecisionTree::node(var, big, small) : DecisionTree::node(var, small, big);
  }

  template <class F>
  void for_each(const Subset& e, F&& f) const {
    for (std::size_t w = 0; w < e.size(); ++w) {
      for (std::uint64_t bits = e[w]; bits != 0; bits &= bits - 1) f(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
    }
  }

 private:
  const PackedSample& s_;
  int vars_;
  int ell_;
  StepMeter& meter_;
  std::map<std::pair<Subset, int>, std::optional<DecisionTree>> memo_;
};

}  // namespace

LearnerOutput EhDecisionTreeLearner::fit(const std::vector<Example>& sample, int n, int ell,
                                         std::uint64_t step_budget) const {
  require_packable(n, ell);
  if (s_ < 1) throw Error(ErrorCode::InvalidArgument, "tree size must be at least 1");
  const auto packed = pack_sample(sample, n, ell);

  LearnerOutput out;
  out.sample_size = sample.size();
  StepMeter meter(step_budget);
  TreeSearch search(packed, n, ell, meter);

  Subset all((sample.size() + 63) / 64);
  for (std::size_t i = 0; i < sample.size(); ++i) all[i / 64] |= std::uint64_t{1} << (i % 64);

  std::optional<DecisionTree> tree;
  try {
    tree = search.search(all, s_);
  } catch (const OutOfSteps&) {
    out.aborted = true;
    out.steps_used = meter.used();
    return out;
  }
  out.steps_used = meter.used();
  if (!tree) throw Error(ErrorCode::NoConsistentTree, "no tree of size parameter " + std::to_string(s_) + " fits the sample");
  out.hypothesis = dt_to_dnf(*tree);
  out.consistent = consistent_with(*out.hypothesis, sample);
  out.tree = std::move(tree);
  return out;
}

// ---------------------------------------------------------------- greedy

LearnerOutput CappedGreedyLearner::fit(const std::vector<Example>& sample, int n, int ell,
                                       std::uint64_t step_budget) const {
  require_packable(n, ell);
  if (cap_ < 0) throw Error(ErrorCode::InvalidArgument, "term cap must be non-negative");
  const auto packed = pack_sample(sample, n, ell);
  std::vector<std::uint64_t> pos;
  std::vector<std::uint64_t> neg;
  for (std::size_t i = 0; i < packed.points.size(); ++i) (packed.labels[i] ? pos : neg).push_back(packed.points[i]);

  LearnerOutput out;
  out.sample_size = sample.size();
  StepMeter meter(step_budget);

  // Monotone term given as a mask of required ones.
  auto captures_negative = [&](std::uint64_t mask) {
    for (std::uint64_t y : neg) {
      meter.charge();
      if ((y & mask) == mask) return true;
    }
    return false;
  };

  std::vector<bool> covered(pos.size(), false);
  std::vector<bool> hopeless(pos.size(), false);
  std::vector<std::uint64_t> chosen;
  try {
    while (static_cast<int>(chosen.size()) < cap_) {
      std::uint64_t best_mask = 0;
      std::size_t best_gain = 0;
      for (std::size_t p = 0; p < pos.size(); ++p) {
        if (covered[p] || hopeless[p]) continue;
        std::uint64_t mask = pos[p];
        if (captures_negative(mask)) {
          hopeless[p] = true;
          continue;
        }
        for (std::uint64_t bits = pos[p]; bits != 0; bits &= bits - 1) {
          const std::uint64_t smaller = mask & ~(bits & -bits);
          if (!captures_negative(smaller)) mask = smaller;
        }
        std::size_t gain = 0;
        for (std::size_t q = 0; q < pos.size(); ++q) {
          if (covered[q]) continue;
          meter.charge();
          gain += (pos[q] & mask) == mask ? 1 : 0;
        }
        if (gain > best_gain) {
          best_gain = gain;
          best_mask = mask;
        }
      }
      if (best_gain == 0) break;
      chosen.push_back(best_mask);
      for (std::size_t q = 0; q < pos.size(); ++q) covered[q] = covered[q] || (pos[q] & best_mask) == best_mask;
    }
  } catch (const OutOfSteps&) {
    out.aborted = true;
    out.steps_used = meter.used();
    return out;
  }

  Dnf f;
  for (std::uint64_t mask : chosen) {
    std::vector<VarId> vars;
    for (std::uint64_t bits = mask; bits != 0; bits &= bits - 1) vars.push_back(var_of_bit(std::countr_zero(bits), ell));
    f.add(Term(std::move(vars), {}));
  }
  out.steps_used = meter.used();
  out.consistent = consistent_with(f, sample);
  out.hypothesis = std::move(f);
  return out;
}

std::unique_ptr<Learner> make_learner(const std::string& algo, int param) {
  if (algo == "junta") return std::make_unique<JuntaEnumLearner>(param);
  if (algo == "ehdt") return std::make_unique<EhDecisionTreeLearner>(param);
  if (algo == "greedy") return std::make_unique<CappedGreedyLearner>(param);
  throw Error(ErrorCode::ParseError, "unknown learner '" + algo + "' (junta, ehdt, greedy)");
}

}  // namespace monolift
