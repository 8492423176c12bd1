#include <cmath>
#include <vector>

#include "monolift/bits.hpp"
#include "monolift/oracle.hpp"
#include "monolift/sampler.hpp"
#include "support.hpp"

using namespace monolift;
using testing::error_of;
using testing::pt;
using testing::q;

namespace {

SetCoverInstance inst(int n, std::vector<std::string> u) { return SetCoverInstance::from_strings(n, u); }

Term pos(std::vector<VarId> v) { return Term(std::move(v), {}); }

// Distance by walking the unpacked support with the reference evaluator.
Rational slow_dist(const SetCoverInstance& s, int ell, const Dnf& f) {
  Rational d(0);
  for (const auto& p : support_enumerate(s, ell)) {
    if (eval(f, p.point) != (gamma_lift(s, p.point) == 1)) d += p.mass;
  }
  return d;
}

// Minimum distance over the empty DNF and every single term, counting states
// in plain base-3 order.
Rational slow_single_term_min(const SetCoverInstance& s, int ell) {
  const int vars = s.n() * ell;
  Rational best = slow_dist(s, ell, Dnf{});
  std::uint64_t states = 1;
  for (int v = 0; v < vars; ++v) states *= 3;
  const ExactOracle oracle(s, ell);
  for (std::uint64_t code = 0; code < states; ++code) {
    std::vector<VarId> p;
    std::vector<VarId> n;
    std::uint64_t rest = code;
    for (int v = 0; v < vars; ++v) {
      const auto st = rest % 3;
      rest /= 3;
      if (st == 1) p.push_back({v / ell + 1, v % ell + 1});
      if (st == 2) n.push_back({v / ell + 1, v % ell + 1});
    }
    const Rational d = oracle.dist(Dnf({Term(p, n)})).dist;
    if (d < best) best = d;
  }
  return best;
}

}  // namespace

TEST_CASE("dist_exact examples") {
  const auto s = inst(2, {"01", "10"});
  CHECK(dist_exact(s, 3, monotone_junta_form(s, 3, 3u)).dist == 0);
  const auto empty = dist_exact(s, 3, Dnf{});
  CHECK(empty.dist == q(1, 2));
  CHECK(empty.err_given_1 == 1);
  CHECK(empty.err_given_0 == 0);
  CHECK(empty.support_size == 9 + 18);
  const auto constant = dist_exact(s, 3, Dnf({Term{}}));
  CHECK(constant.dist == q(1, 2));
  CHECK(constant.err_given_0 == 1);
}

TEST_CASE("dist report identity and agreement with the reference evaluator") {
  for (const auto& [name, s] : desk_suite()) {
    for (int ell : {3, 5}) {
      const ExactOracle oracle(s, ell);
      const auto corpus = hypothesis_corpus(s, ell, 3, 60);
      for (std::size_t k = 0; k < corpus.size(); k += 7) {
        const auto r = oracle.dist(corpus[k]);
        CHECK(r.dist == (r.err_given_1 + r.err_given_0) / 2);
        CHECK(r.dist == slow_dist(s, ell, corpus[k]));
      }
    }
  }
}

TEST_CASE("expected_mwidth_omega examples") {
  const auto s = inst(2, {"01", "10"});
  CHECK(expected_mwidth_omega(s, 5, Dnf({Term{}})) == 0);
  CHECK(expected_mwidth_omega(s, 5, monotone_junta_form(s, 5, 3u)) == 6);
  CHECK(expected_mwidth_omega(inst(3, {"110", "101"}), 3, monotone_junta_form(inst(3, {"110", "101"}), 3, 6u)) == 4);
  CHECK(error_of([&] { expected_mwidth_omega(s, 5, Dnf{}); }) == ErrorCode::EmptyOmega);
  CHECK(error_of([&] { expected_mwidth_omega(s, 5, Dnf({Term({}, {{1, 1}, {1, 2}, {1, 3}})})); }) ==
        ErrorCode::EmptyOmega);
}

TEST_CASE("check_term_tail examples") {
  const auto a = check_term_tail(5, {2});
  CHECK(a.probability == q(3, 10));
  CHECK(a.pass);
  const auto b = check_term_tail(5, {0});
  CHECK(b.probability == 1);
  CHECK(b.pass);
  CHECK(error_of([] { check_term_tail(3, {1}); }) == ErrorCode::LemmaRequiresEll5);
  CHECK(error_of([] { check_term_tail(5, {4}); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("term tail closed form equals the fraction of Top points") {
  for (int ell : {5, 7}) {
    const int h = (ell + 1) / 2;
    const auto masks = fixed_weight_masks(ell, h);
    for (int b1 = 0; b1 <= h; ++b1) {
      for (int b2 = 0; b2 <= h; ++b2) {
        // Positive literals on the first b_i positions of each block.
        const std::uint32_t m1 = (1u << b1) - 1;
        const std::uint32_t m2 = (1u << b2) - 1;
        std::uint64_t hit = 0;
        for (auto x : masks) {
          for (auto y : masks) hit += ((x & m1) == m1 && (y & m2) == m2) ? 1 : 0;
        }
        const auto r = check_term_tail(ell, {b1, b2});
        CHECK(r.probability == q(static_cast<long>(hit), static_cast<long>(masks.size() * masks.size())));
        CHECK(r.pass);
      }
    }
  }
}

TEST_CASE("the tail checker refuses ell = 3") {
  for (int b = 0; b <= 2; ++b) CHECK(error_of([b] { check_term_tail(3, {b}); }) == ErrorCode::LemmaRequiresEll5);
  CHECK(error_of([] { check_term_tail(4, {1}); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("check_truncate") {
  const auto s = inst(2, {"01", "10"});
  const Dnf small({pos({{1, 1}})});
  const auto a = check_truncate(s, 5, small);
  CHECK(a.truncated == small);
  CHECK(a.removed == 0);
  CHECK(a.pass);
  CHECK(a.inequality_holds);

  Dnf junk = monotone_junta_form(s, 5, 3u);
  std::vector<VarId> wide;
  for (int i = 1; i <= 2; ++i) {
    for (int t = 1; t <= 5; ++t) wide.push_back({i, t});
  }
  junk.add(pos(wide));
  CHECK(error_of([&] { check_truncate(s, 5, junk); }) == ErrorCode::SizePreconditionViolated);
  const auto b = check_truncate(s, 5, junk, false);
  CHECK_FALSE(b.size_precondition_holds);
  CHECK(b.union_bound_holds);
  CHECK(b.inequality_holds);
  CHECK(b.dist_before == 0);
  CHECK(b.pass);
  CHECK(error_of([&] { check_truncate(s, 3, small); }) == ErrorCode::LemmaRequiresEll5);
}

TEST_CASE("check_claim_coor") {
  const auto s = inst(2, {"01", "10"});
  const auto z = pt("11100.11100");
  const auto a = check_claim_coor(s, 5, Dnf({Term{}}), z);
  CHECK(a.probability == 1);
  CHECK(a.pass);

  const auto b = check_claim_coor(s, 5, Dnf({pos({{1, 1}})}), z);
  // z_{1,1} survives unless j_1 = 1 and u_1 = 0: 1 - (1/3)(1/2).
  CHECK(b.probability == q(5, 6));
  CHECK(b.bound == q(1, 4));
  CHECK(b.pass);

  CHECK(error_of([&] { check_claim_coor(s, 5, Dnf({pos({{1, 1}, {1, 2}})}), z); }) ==
        ErrorCode::MonotoneSizeTooLarge);
  CHECK(error_of([&] { check_claim_coor(s, 5, Dnf({pos({{1, 4}})}), z); }) == ErrorCode::FalseAtPoint);
  CHECK(error_of([&] { check_claim_coor(s, 5, Dnf({Term{}}), pt("11000.11100")); }) ==
        ErrorCode::NotInTopSupport);
  CHECK(error_of([&] { check_claim_coor(inst(1, {"0"}), 5, Dnf({Term{}}), pt("11100")); }) ==
        ErrorCode::DegenerateOpt);
}

TEST_CASE("check_claim_coorA") {
  const auto s = inst(2, {"01", "10"});
  const auto a = check_claim_coorA(s, 5, Dnf({Term{}}));
  CHECK(a.expectation == 0);
  CHECK(a.result.probability == 1);
  CHECK(a.result.pass);

  const auto b = check_claim_coorA(s, 5, Dnf({pos({{1, 1}}), pos({{2, 2}})}));
  CHECK(b.result.pass);
  CHECK(b.result.probability > 0);
  CHECK(b.result.probability < 1);

  CHECK(error_of([&] { check_claim_coorA(s, 5, monotone_junta_form(s, 5, 3u)); }) ==
        ErrorCode::ExpectationTooLarge);
  CHECK(error_of([&] { check_claim_coorA(s, 5, Dnf{}); }) == ErrorCode::EmptyOmega);
}

TEST_CASE("check_claim_jkl") {
  const auto s = inst(2, {"01", "10"});
  const ExactOracle oracle(s, 5);
  const auto a = check_claim_jkl(oracle, monotone_junta_form(s, 5, 3u));
  CHECK(a.expectation == 6);
  CHECK(a.bound == doctest::Approx(4 * std::log2(100.0)));
  CHECK(a.pass);
  CHECK(error_of([&] { check_claim_jkl(oracle, Dnf({Term{}, Term{}})); }) == ErrorCode::DistTooLarge);
  CHECK(error_of([&] { check_claim_jkl(oracle, Dnf({Term{}})); }) == ErrorCode::SizeTooSmall);
}

TEST_CASE("claims pop and jkl hold across the corpus") {
  for (const auto& [name, s] : desk_suite()) {
    for (int ell : {3, 5}) {
      const ExactOracle oracle(s, ell);
      const int opt = opt_exact(s).size;
      const auto corpus = hypothesis_corpus(s, ell, 77, 200);
      CHECK(corpus.size() >= 200);
      for (const auto& f : corpus) {
        CHECK(check_claim_pop(oracle, opt, f).pass);
        if (f.size() >= 2 && oracle.dist(f).dist <= q(1, 4)) CHECK(check_claim_jkl(oracle, f).pass);
      }
    }
  }
}

TEST_CASE("lemma bound comparison") {
  // v16 bound for |U| = 2 is 1/16.
  CHECK(meets_lemma_bound(q(1, 16), LemmaVariant::V16, 2, 2, 5));
  CHECK_FALSE(meets_lemma_bound(q(1, 17), LemmaVariant::V16, 2, 2, 5));
  // v20 with opt*ell = 10: 1/16 - 2^(-1/2) < 0, so every distance meets it.
  CHECK(meets_lemma_bound(Rational(0), LemmaVariant::V20, 2, 2, 5));
  // opt*ell = 200: 1/16 - 2^-10 = 63/1024.
  CHECK(meets_lemma_bound(q(63, 1024), LemmaVariant::V20, 2, 40, 5));
  CHECK_FALSE(meets_lemma_bound(q(62, 1024), LemmaVariant::V20, 2, 40, 5));
}

TEST_CASE("falsify_error_lemma on the two-element instance") {
  const auto s = inst(2, {"01", "10"});
  const auto r = falsify_error_lemma(s, 5, LemmaVariant::V16);
  CHECK(r.opt == 2);
  CHECK(r.size_budget == 1);
  CHECK(r.candidates == 59049 + 1);
  CHECK(r.exhaustive);
  CHECK(r.verdict == FalsifyVerdict::Confirmed);
  CHECK(r.best_dist >= q(1, 16));
  CHECK(r.best_dist == slow_single_term_min(s, 5));
  CHECK(dist_exact(s, 5, r.best).dist == r.best_dist);

  FalsifyOptions par;
  par.workers = 3;
  const auto p = falsify_error_lemma(s, 5, LemmaVariant::V16, par);
  CHECK(p.best_dist == r.best_dist);
  CHECK(p.best == r.best);

  FalsifyOptions rnd;
  rnd.strategy = SearchStrategy::RandomizedLocalSearch;
  rnd.seed = 4;
  rnd.iterations = 3000;
  const auto g = falsify_error_lemma(s, 5, LemmaVariant::V16, rnd);
  CHECK(g.verdict == FalsifyVerdict::BestEffort);
  CHECK(g.best_dist >= r.best_dist);

  const auto v = falsify_error_lemma(s, 5, LemmaVariant::V20);
  CHECK(v.verdict == FalsifyVerdict::Vacuous);
  CHECK(error_of([&] { falsify_error_lemma(s, 3, LemmaVariant::V16); }) == ErrorCode::LemmaRequiresEll5);
}

TEST_CASE("bounded-window sweep agrees with the single-term sweep") {
  const auto s = inst(1, {"0"});
  FalsifyOptions k;
  k.strategy = SearchStrategy::ExhaustiveUpToK;
  k.max_terms = 3;
  const auto a = falsify_error_lemma(s, 5, LemmaVariant::V16, k);
  const auto b = falsify_error_lemma(s, 5, LemmaVariant::V16);
  CHECK(a.size_budget == 1);
  CHECK(a.exhaustive);
  CHECK(a.candidates == 243 + 1);
  CHECK(a.best_dist == b.best_dist);
  CHECK(b.best_dist == slow_single_term_min(s, 5));

  k.window = {{1, 1}, {1, 2}};
  const auto c = falsify_error_lemma(s, 5, LemmaVariant::V16, k);
  CHECK_FALSE(c.exhaustive);
  CHECK(c.best_dist >= b.best_dist);
}
