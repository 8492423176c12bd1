#include <cmath>

#include "monolift/oracle.hpp"
#include "monolift/reduction.hpp"
#include "support.hpp"

using namespace monolift;
using testing::error_of;
using testing::q;

namespace {

SetCoverInstance pair_disjoint() { return SetCoverInstance::from_strings(2, std::vector<std::string>{"01", "10"}); }

ReductionParams params_for(int ell, std::uint64_t seed = 3) {
  ReductionParams p;
  p.ell = ell;
  p.seed = seed;
  return p;
}

}  // namespace

TEST_CASE("junta learner with m = k*ell gives Yes with eta 0") {
  const auto s = pair_disjoint();
  for (int ell : {3, 5}) {
    const auto v = algorithm_b(s, JuntaEnumLearner(2 * ell), params_for(ell));
    CHECK(v.answer == Answer::Yes);
    CHECK(v.reason == VerdictReason::EtaBelowThreshold);
    REQUIRE(v.eta.has_value());
    CHECK(*v.eta == 0);
    CHECK(v.threshold == q(1, 64));
  }
  CHECK(learner_eta_threshold(s) == q(1, 32));
  auto p = params_for(5);
  p.eta_threshold = learner_eta_threshold(s);
  const auto v = algorithm_b(s, CappedGreedyLearner(1), p);
  CHECK(v.threshold == q(1, 32));
  CHECK(v.answer == Answer::No);
}

TEST_CASE("Yes on every suite instance with the matching junta") {
  for (const auto& [name, s] : desk_suite()) {
    const int opt = opt_exact(s).size;
    for (int ell : {3, 5}) {
      CAPTURE(name);
      CAPTURE(ell);
      const auto v = algorithm_b(s, JuntaEnumLearner(opt * ell), params_for(ell, 11));
      CHECK(v.answer == Answer::Yes);
      CHECK(*v.eta == 0);
    }
  }
}

TEST_CASE("greedy cap 1 lands in the confirmed regime and gets No") {
  for (const char* name : {"single", "pair-disjoint"}) {
    CAPTURE(name);
    SetCoverInstance s = pair_disjoint();
    for (const auto& e : desk_suite()) {
      if (e.name == name) s = e.instance;
    }
    FalsifyOptions opts;
    const auto f = falsify_error_lemma(s, 5, LemmaVariant::V16, opts);
    REQUIRE(f.verdict == FalsifyVerdict::Confirmed);
    REQUIRE(f.size_budget == 1);
    const auto v = algorithm_b(s, CappedGreedyLearner(1), params_for(5));
    REQUIRE(v.hypothesis.has_value());
    CHECK(v.hypothesis->size() <= 1);
    CHECK(v.answer == Answer::No);
    CHECK(v.reason == VerdictReason::EtaAboveThreshold);
    CHECK(*v.eta >= f.best_dist);
    CHECK(*v.eta >= Rational(1, 8 * static_cast<unsigned long>(s.universe_size())));
  }
}

TEST_CASE("step budget exhaustion answers No") {
  const auto s = pair_disjoint();
  auto p = params_for(3);
  p.step_budget = 1;
  const auto v = algorithm_b(s, JuntaEnumLearner(5), p);
  CHECK(v.answer == Answer::No);
  CHECK(v.reason == VerdictReason::StepBudgetExceeded);
  CHECK_FALSE(v.eta.has_value());
  p.step_budget = 0;
  CHECK(error_of([&] { algorithm_b(s, JuntaEnumLearner(5), p); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("learner failure answers No") {
  auto p = params_for(3);
  const auto v = algorithm_b(pair_disjoint(), JuntaEnumLearner(0), p);
  CHECK(v.answer == Answer::No);
  CHECK(v.reason == VerdictReason::LearnerFailed);
}

TEST_CASE("strict-proper size gate runs before the distance") {
  const auto s = pair_disjoint();
  auto p = params_for(3);
  // The junta hypothesis has one term per Top point: 3^2 = 9.
  const auto open = algorithm_b(s, JuntaEnumLearner(6), p);
  REQUIRE(open.hypothesis->size() == 9);
  p.size_cap = 8;
  const auto gated = algorithm_b_proper(s, JuntaEnumLearner(6), p);
  CHECK(gated.answer == Answer::No);
  CHECK(gated.reason == VerdictReason::SizeCapExceeded);
  CHECK_FALSE(gated.eta.has_value());
  p.size_cap = 9;
  CHECK(algorithm_b_proper(s, JuntaEnumLearner(6), p).answer == Answer::Yes);
  p.size_cap.reset();
  CHECK(error_of([&] { algorithm_b_proper(s, JuntaEnumLearner(6), p); }) == ErrorCode::InvalidArgument);

  // ell = 5, k = 2: the junta output has at most 2^(k ell) terms, under 2^(5k).
  auto p5 = params_for(5);
  p5.size_cap = strict_proper_size_cap(2);
  CHECK(*p5.size_cap == 1024);
  const auto v = algorithm_b_proper(s, JuntaEnumLearner(10), p5);
  CHECK(v.answer == Answer::Yes);
  CHECK(v.hypothesis->size() <= 1024);
}

TEST_CASE("eta_sampled") {
  const auto s = pair_disjoint();
  const auto exact = eta_sampled(s, 3, monotone_junta_form(s, 3, 3u), 500, 1);
  CHECK(exact.estimate == 0);
  const auto one = eta_sampled(s, 3, Dnf{}, 1, 1);
  CHECK(one.radius >= 0.5);
  CHECK(one.low_power);
  CHECK(error_of([&] { eta_sampled(s, 3, Dnf{}, 0, 1); }) == ErrorCode::InvalidArgument);

  // A single positive literal: compare against its exact distance.
  const Dnf f = parse_dnf("+1.1");
  const double truth = to_double(dist_exact(s, 3, f).dist);
  int inside = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto e = eta_sampled(s, 3, f, 400, seed);
    CHECK_FALSE(e.low_power);
    inside += std::abs(to_double(e.estimate) - truth) <= e.radius ? 1 : 0;
  }
  CHECK(inside >= 67);
}

TEST_CASE("sampled mode and determinism") {
  const auto s = pair_disjoint();
  auto p = params_for(3, 9);
  p.mode = DistanceMode::Sampled;
  p.sample_count = 2000;
  const auto a = algorithm_b(s, CappedGreedyLearner(1), p);
  const auto b = algorithm_b(s, CappedGreedyLearner(1), p);
  REQUIRE(a.radius.has_value());
  CHECK(a.eta == b.eta);
  CHECK(a.steps_used == b.steps_used);
  CHECK(a.hypothesis == b.hypothesis);
  CHECK(a.answer == Answer::No);
  CHECK(parse_distance_mode("sampled") == DistanceMode::Sampled);
  CHECK(error_of([] { parse_distance_mode("fast"); }) == ErrorCode::ParseError);
}

TEST_CASE("schedules") {
  CHECK(strict_proper_size_cap(1) == 32);
  CHECK(strict_proper_size_cap(13) == UINT64_MAX);
  CHECK(step_schedule(16, 0.5, 1, 4) == 256);  // 16^(4*0.5*1)
  CHECK(step_schedule(16, 1.0, 5, 5) == UINT64_MAX);
}

TEST_CASE("bench rows") {
  CHECK(bench_csv_header() == "instance,opt,ell,learner,hyp_size,eta_num,eta_den,verdict,steps_used");
  BenchRow r{"x", 2, 5, "greedy", 1, q(3, 40), "No", 77};
  CHECK(to_csv(r) == "x,2,5,greedy,1,3,40,No,77");
  r.hyp_size.reset();
  r.eta.reset();
  CHECK(to_csv(r) == "x,2,5,greedy,,,,No,77");

  BenchConfig cfg;
  cfg.ells = {3};
  cfg.n_values = {2};
  cfg.seeds = 1;
  const auto rows = run_bench(cfg);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].learner == "junta");
  CHECK(rows[0].verdict == "Yes");
  CHECK(rows[1].learner == "greedy");
  CHECK(to_csv(rows[0]) == to_csv(run_bench(cfg)[0]));
}
