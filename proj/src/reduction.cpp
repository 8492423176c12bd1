#include "monolift/reduction.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "monolift/errors.hpp"
#include "monolift/oracle.hpp"
#include "monolift/rng.hpp"

namespace monolift {

namespace {

constexpr std::uint64_t kEtaStream = 0x657461;

Verdict no(VerdictReason reason, Verdict v) {
  v.answer = Answer::No;
  v.reason = reason;
  return v;
}

}  // namespace

std::string to_string(Answer a) { return a == Answer::Yes ? "Yes" : "No"; }

std::string to_string(VerdictReason r) {
  switch (r) {
    case VerdictReason::EtaBelowThreshold: return "EtaBelowThreshold";
    case VerdictReason::EtaAboveThreshold: return "EtaAboveThreshold";
    case VerdictReason::StepBudgetExceeded: return "StepBudgetExceeded";
    case VerdictReason::SizeCapExceeded: return "SizeCapExceeded";
    case VerdictReason::LearnerFailed: return "LearnerFailed";
  }
  return "?";
}

std::string to_string(DistanceMode m) { return m == DistanceMode::Exact ? "exact" : "sampled"; }

DistanceMode parse_distance_mode(const std::string& text) {
  if (text == "exact") return DistanceMode::Exact;
  if (text == "sampled") return DistanceMode::Sampled;
  throw Error(ErrorCode::ParseError, "unknown distance mode '" + text + "' (exact, sampled)");
}

Rational default_eta_threshold(const SetCoverInstance& inst) {
  return Rational(1, 16UL * static_cast<unsigned long>(inst.vertex_count()));
}

Rational learner_eta_threshold(const SetCoverInstance& inst) {
  return Rational(1, 16UL * static_cast<unsigned long>(inst.n()));
}

EtaEstimate eta_sampled(const SetCoverInstance& inst, int ell, const Dnf& f, std::uint64_t count, std::uint64_t seed) {
  if (count == 0) throw Error(ErrorCode::InvalidArgument, "sample count must be positive");
  SampleOracle oracle(inst, ell, seed);
  std::uint64_t wrong = 0;
  for (std::uint64_t k = 0; k < count; ++k) {
    const auto e = oracle.draw();
    wrong += eval(f, e.point) != e.label ? 1 : 0;
  }
  EtaEstimate out;
  out.count = count;
  out.estimate = Rational(BigInt(static_cast<unsigned long>(wrong)), BigInt(static_cast<unsigned long>(count)));
  out.estimate.canonicalize();
  out.radius = std::sqrt(std::log(6.0) / (2.0 * static_cast<double>(count)));
  out.low_power = out.radius >= 0.25;
  return out;
}

Verdict algorithm_b(const SetCoverInstance& inst, const Learner& learner, const ReductionParams& params) {
  if (params.step_budget == 0) throw Error(ErrorCode::InvalidArgument, "step budget must be at least 1");
  Verdict v;
  v.learner = learner.name();
  v.threshold = params.eta_threshold.value_or(default_eta_threshold(inst));
  if (v.threshold <= 0 || v.threshold >= 1) throw Error(ErrorCode::InvalidArgument, "eta threshold must lie in (0, 1)");

  SampleOracle oracle(inst, params.ell, params.seed);
  LearnerOutput out;
  try {
    out = learner.learn(oracle, LearnerBudget{params.examples, params.step_budget});
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NoConsistentSubset && e.code() != ErrorCode::NoConsistentTree) throw;
    return no(VerdictReason::LearnerFailed, std::move(v));
  }
  v.steps_used = out.steps_used;
  if (out.aborted) return no(VerdictReason::StepBudgetExceeded, std::move(v));
  v.hypothesis = out.hypothesis;

  if (params.size_cap && static_cast<std::uint64_t>(v.hypothesis->size()) > *params.size_cap) {
    return no(VerdictReason::SizeCapExceeded, std::move(v));
  }

  bool sampled = params.mode == DistanceMode::Sampled;
  if (!sampled) {
    try {
      v.eta = dist_exact(inst, params.ell, *v.hypothesis).dist;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::BudgetExceeded || !params.fallback_to_sampled) throw;
      sampled = true;
    }
  }
  if (sampled) {
    const auto est = eta_sampled(inst, params.ell, *v.hypothesis, params.sample_count, derive_seed(params.seed, kEtaStream));
    v.eta = est.estimate;
    v.radius = est.radius;
    v.low_power = est.low_power;
  }

  if (*v.eta <= v.threshold) {
    v.answer = Answer::Yes;
    v.reason = VerdictReason::EtaBelowThreshold;
  } else {
    v.answer = Answer::No;
    v.reason = VerdictReason::EtaAboveThreshold;
  }
  return v;
}

Verdict algorithm_b_proper(const SetCoverInstance& inst, const Learner& learner, const ReductionParams& params) {
  if (!params.size_cap) throw Error(ErrorCode::InvalidArgument, "strict-proper mode needs a size cap");
  return algorithm_b(inst, learner, params);
}

std::uint64_t strict_proper_size_cap(int k) {
  if (k < 0) throw Error(ErrorCode::InvalidArgument, "k must be non-negative");
  return 5 * k >= 64 ? UINT64_MAX : std::uint64_t{1} << (5 * k);
}

std::uint64_t step_schedule(double vertex_count, double c, int k, int factor) {
  const double exponent = static_cast<double>(factor) * c * static_cast<double>(k) * std::log2(vertex_count);
  if (!(exponent < 64.0)) return UINT64_MAX;
  return static_cast<std::uint64_t>(std::max(1.0, std::floor(std::exp2(exponent))));
}

const std::string& bench_csv_header() {
  static const std::string header = "instance,opt,ell,learner,hyp_size,eta_num,eta_den,verdict,steps_used";
  return header;
}

std::string to_csv(const BenchRow& r) {
  std::ostringstream os;
  os << r.instance << ',' << r.opt << ',' << r.ell << ',' << r.learner << ',';
  if (r.hyp_size) os << *r.hyp_size;
  os << ',';
  if (r.eta) os << r.eta->get_num().get_str() << ',' << r.eta->get_den().get_str();
  else os << ',';
  os << ',' << r.verdict << ',' << r.steps_used;
  return os.str();
}

std::vector<BenchRow> run_bench(const BenchConfig& config) {
  std::vector<BenchRow> rows;
  for (int n : config.n_values) {
    for (int s = 0; s < config.seeds; ++s) {
      const std::uint64_t seed = derive_seed(config.seed, static_cast<std::uint64_t>(n) * 1000 + static_cast<std::uint64_t>(s));
      const auto planted = planted_instance(n, std::min(n, 2), seed);
      const int opt = opt_exact(planted.instance).size;
      const std::string name = "planted-n" + std::to_string(n) + "-" + std::to_string(s);
      for (int ell : config.ells) {
        ReductionParams params;
        params.ell = ell;
        params.step_budget = config.step_budget;
        params.seed = seed;
        const JuntaEnumLearner junta(opt * ell);
        const CappedGreedyLearner greedy(1);
        for (const Learner* learner : {static_cast<const Learner*>(&junta), static_cast<const Learner*>(&greedy)}) {
          const auto v = algorithm_b(planted.instance, *learner, params);
          BenchRow row{name, opt, ell, learner->name(), std::nullopt, v.eta, to_string(v.answer), v.steps_used};
          if (v.answer == Answer::No) row.verdict += ":" + to_string(v.reason);
          if (v.hypothesis) row.hyp_size = v.hypothesis->size();
          rows.push_back(std::move(row));
        }
      }
    }
  }
  return rows;
}

}  // namespace monolift
