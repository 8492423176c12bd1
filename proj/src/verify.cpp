#include "monolift/verify.hpp"

#include <functional>
#include <set>

#include "monolift/bits.hpp"
#include "monolift/construction.hpp"
#include "monolift/errors.hpp"
#include "monolift/rng.hpp"
#include "monolift/sampler.hpp"

namespace monolift {

namespace {

CheckResult named(const std::string& name) {
  CheckResult r;
  r.name = name;
  return r;
}

void fail(CheckResult& r, const std::string& what) {
  if (r.pass) r.counterexample = what;
  r.pass = false;
}

std::vector<Dnf> corpus_for(const SetCoverInstance& inst, int ell, const VerifyConfig& c) {
  return hypothesis_corpus(inst, ell, c.seed, c.corpus_size);
}

LiftedPoint random_top(CounterRng& rng, int n, int ell) {
  const auto masks = fixed_weight_masks(ell, half_up(ell));
  std::vector<std::uint32_t> blocks(static_cast<std::size_t>(n));
  for (auto& b : blocks) b = masks[rng.below(masks.size())];
  return LiftedPoint(ell, blocks);
}

bool outside_claim_preconditions(ErrorCode c) {
  return c == ErrorCode::DegenerateOpt || c == ErrorCode::MonotoneSizeTooLarge || c == ErrorCode::ExpectationTooLarge ||
         c == ErrorCode::EmptyOmega;
}

// Runs a check; budget and ell refusals become a skipped, passing result.
CheckResult guarded(const std::string& name, const std::function<CheckResult()>& run) {
  try {
    return run();
  } catch (const Error& e) {
    if (e.code() != ErrorCode::BudgetExceeded && e.code() != ErrorCode::LemmaRequiresEll5) throw;
    CheckResult r = named(name);
    r.skipped = 1;
    r.detail = std::string("skipped: ") + e.what();
    return r;
  }
}

}  // namespace

CheckResult verify_sampler_pmf(const SetCoverInstance& inst, int ell) {
  CheckResult r = named("sampler-pmf");
  const Pmf sampled = sampler_exact_pmf(inst, ell);
  const Pmf defined = definition_pmf(inst, ell);
  if (auto m = compare_pmf(sampled, defined)) {
    fail(r, m->point + ": sampler " + to_pq(m->lhs) + " vs definition " + to_pq(m->rhs));
  }
  for (const auto& [key, mass] : sampled) {
    ++r.cases;
    const Rational direct = d_lift_pmf(inst, LiftedPoint::parse(key));
    if (direct != mass) fail(r, key + ": sampler " + to_pq(mass) + " vs pmf " + to_pq(direct));
  }
  if (pmf_total(sampled) != 1) fail(r, "sampler total " + to_pq(pmf_total(sampled)));
  if (pmf_total(defined) != 1) fail(r, "definition total " + to_pq(pmf_total(defined)));
  r.detail = std::to_string(r.cases) + " support points";
  return r;
}

CheckResult verify_half_mass(const SetCoverInstance& inst, int ell) {
  CheckResult r = named("half-mass");
  Rational top(0);
  Rational bottom(0);
  const Rational top_mass = top_point_mass(inst, ell);
  const Rational bottom_mass = bottom_point_mass(inst, ell);
  for_each_support_point(inst, ell, kDefaultEnumerationBudget, [&](const LiftedPoint&, const SupportClass& c) {
    ++r.cases;
    if (c.kind == SupportKind::Top) {
      top += top_mass;
    } else {
      bottom += bottom_mass;
    }
  });
  const Rational half(1, 2);
  if (top != half || bottom != half) fail(r, "top " + to_pq(top) + ", bottom " + to_pq(bottom));
  r.detail = "top " + to_pq(top) + ", bottom " + to_pq(bottom);
  return r;
}

CheckResult verify_factopt(const SetCoverInstance& inst) {
  CheckResult r = named("factopt");
  for (SetMask c = 0; c <= inst.all_ones(); ++c) {
    ++r.cases;
    if (check_factopt(inst, c) != is_cover(inst, c)) fail(r, "subset " + vector_to_string(c, inst.n()));
    if (c == inst.all_ones()) break;
  }
  r.detail = std::to_string(r.cases) + " subsets";
  return r;
}

CheckResult verify_substitution(const SetCoverInstance& inst, int ell, std::uint64_t tuples, std::uint64_t seed) {
  CheckResult r = named("substitution");
  CounterRng rng(seed, 0x7a);
  const int n = inst.n();
  for (std::uint64_t k = 0; k < tuples; ++k) {
    ++r.cases;
    const auto w = random_top(rng, n, ell);
    const auto ones = one_positions(w);
    const IndexVector j = ones.at(rng.below(ones.size()));
    const auto cell = substitute_universe(inst, w, j);
    std::set<LiftedPoint> distinct(cell.begin(), cell.end());
    if (cell.size() != inst.universe_size() || distinct.size() != cell.size()) {
      fail(r, "cell of " + w.to_string() + " has " + std::to_string(distinct.size()) + " distinct points");
    }
    for (std::size_t a = 0; a < cell.size(); ++a) {
      if (!(classify(inst, cell[a]) == SupportClass::bottom(inst.universe()[a]))) {
        fail(r, cell[a].to_string() + " is not in the Bottom cell of its element");
      }
    }
    std::vector<VarId> pos;
    std::vector<VarId> neg;
    for (int i = 1; i <= n; ++i) {
      for (int t = 1; t <= ell; ++t) {
        if (rng.below(3) != 0) continue;
        (w.bit(i, t) ? pos : neg).push_back({i, t});
      }
    }
    const Term term(pos, neg);
    const Term proj = project_term(term, j);
    const BitVector a = static_cast<BitVector>(rng.below(std::uint64_t{1} << n));
    if (term.eval(substitute(w, j, a)) != eval_projected(proj, j, a)) {
      fail(r, "term " + serialize(term) + " at " + w.to_string() + " with a=" + vector_to_string(a, n));
    }
  }
  r.detail = std::to_string(tuples) + " tuples";
  return r;
}

CheckResult verify_counting(const SetCoverInstance& inst, int ell) {
  CheckResult r = named("counting");
  const auto support = support_enumerate(inst, ell);
  const int h = half_up(ell);
  for (const auto& z : support) {
    if (z.cls.kind != SupportKind::Bottom) continue;
    ++r.cases;
    const BitVector u = z.cls.element;
    const std::uint64_t expected = pow_sat(static_cast<std::uint64_t>(h), inst.n() - std::popcount(u));
    std::uint64_t above = 0;
    for (const auto& w : support) {
      if (w.cls.kind != SupportKind::Top || !z.point.leq(w.point)) continue;
      ++above;
      const Rational frac = hit_fraction(inst, w.point, z.point);
      if (frac != Rational(1, static_cast<unsigned long>(expected))) {
        fail(r, "hit fraction " + to_pq(frac) + " for z=" + z.point.to_string() + ", w=" + w.point.to_string());
      }
    }
    if (above != expected || count_top_above(z.point) != expected) {
      fail(r, z.point.to_string() + ": " + std::to_string(above) + " Top points above, expected " +
                  std::to_string(expected));
    }
  }
  r.detail = std::to_string(r.cases) + " Bottom points";
  return r;
}

CheckResult verify_junta_form(const SetCoverInstance& inst, int ell) {
  CheckResult r = named("junta-form");
  const auto packed = pack_support(inst, ell);
  for (SetMask c = 1; c <= inst.all_ones(); ++c) {
    if (is_cover(inst, c)) {
      ++r.cases;
      const CompiledDnf f(monotone_junta_form(inst, ell, c), inst.n(), ell);
      for (auto y : packed.top) {
        if (!f.eval(y)) fail(r, "cover " + vector_to_string(c, inst.n()) + " rejects Top point");
      }
      for (auto y : packed.bottom) {
        if (f.eval(y)) fail(r, "cover " + vector_to_string(c, inst.n()) + " accepts Bottom point");
      }
    }
    if (c == inst.all_ones()) break;
  }
  r.detail = std::to_string(r.cases) + " covers";
  return r;
}

CheckResult verify_term_tail(int ell, int max_blocks) {
  CheckResult r = named("term-tail");
  require_lemma_ell(ell);
  const int h = half_up(ell);
  for (int n = 1; n <= max_blocks; ++n) {
    std::vector<int> b(static_cast<std::size_t>(n), 0);
    for (;;) {
      int i = 0;
      while (i < n && b[static_cast<std::size_t>(i)] == h) b[static_cast<std::size_t>(i++)] = 0;
      if (i == n) break;
      ++b[static_cast<std::size_t>(i)];
      ++r.cases;
      const auto rep = check_term_tail(ell, b);
      if (!rep.pass) {
        std::string text;
        for (int x : b) text += std::to_string(x) + " ";
        fail(r, "counts " + text + "give " + to_pq(rep.probability));
      }
    }
  }
  r.detail = std::to_string(r.cases) + " count vectors at ell=" + std::to_string(ell);
  return r;
}

CheckResult verify_truncate(const SetCoverInstance& inst, int ell, const std::vector<Dnf>& corpus) {
  CheckResult r = named("truncate");
  require_lemma_ell(ell);
  std::uint64_t with_precondition = 0;
  for (const auto& f : corpus) {
    ++r.cases;
    const auto rep = check_truncate(inst, ell, f, false);
    with_precondition += rep.size_precondition_holds ? 1 : 0;
    if (!rep.pass) fail(r, "F = " + serialize(f));
  }
  r.detail = std::to_string(with_precondition) + " of " + std::to_string(r.cases) + " meet the size precondition";
  return r;
}

CheckResult verify_coor(const SetCoverInstance& inst, int ell, const std::vector<Dnf>& corpus) {
  CheckResult r = named("coor");
  const ExactOracle oracle(inst, ell);
  constexpr std::size_t kPointsPerDnf = 32;
  for (const auto& f : corpus) {
    try {
      const auto rep = check_claim_coorA(inst, ell, f);
      ++r.cases;
      if (!rep.result.pass) fail(r, "averaged over Omega of F = " + serialize(f));
    } catch (const Error& e) {
      if (!outside_claim_preconditions(e.code())) throw;
      ++r.skipped;
    }
    const auto omega = oracle.omega(CompiledDnf(f, inst.n(), ell));
    for (std::size_t k = 0; k < omega.size() && k < kPointsPerDnf; ++k) {
      const auto z = LiftedPoint::unpack(omega[k], inst.n(), ell);
      try {
        const auto rep = check_claim_coor(inst, ell, f, z);
        ++r.cases;
        if (!rep.pass) fail(r, "F = " + serialize(f) + " at z = " + z.to_string());
      } catch (const Error& e) {
        if (!outside_claim_preconditions(e.code())) throw;
        ++r.skipped;
        break;  // the preconditions on F fail for every z alike
      }
    }
  }
  r.detail = std::to_string(r.cases) + " applicable, " + std::to_string(r.skipped) + " outside the preconditions";
  return r;
}

CheckResult verify_pop(const SetCoverInstance& inst, int ell, const std::vector<Dnf>& corpus) {
  CheckResult r = named("pop");
  const ExactOracle oracle(inst, ell);
  const int opt = opt_exact(inst).size;
  for (const auto& f : corpus) {
    const auto rep = check_claim_pop(oracle, opt, f);
    if (!rep.applicable) {
      ++r.skipped;
      continue;
    }
    ++r.cases;
    if (!rep.pass) fail(r, "F = " + serialize(f) + " has dist " + to_pq(rep.dist));
  }
  r.detail = std::to_string(r.cases) + " applicable of " + std::to_string(corpus.size());
  return r;
}

CheckResult verify_jkl(const SetCoverInstance& inst, int ell, const std::vector<Dnf>& corpus) {
  CheckResult r = named("jkl");
  const ExactOracle oracle(inst, ell);
  for (const auto& f : corpus) {
    if (f.size() < 2 || oracle.dist(f).dist > Rational(1, 4)) {
      ++r.skipped;
      continue;
    }
    ++r.cases;
    const auto rep = check_claim_jkl(oracle, f);
    if (!rep.pass) fail(r, "F = " + serialize(f) + " has E[mwidth] = " + to_pq(rep.expectation));
  }
  r.detail = std::to_string(r.cases) + " applicable of " + std::to_string(corpus.size());
  return r;
}

CheckResult verify_error_lemma(const SetCoverInstance& inst, int ell, LemmaVariant variant,
                               const FalsifyOptions& options) {
  CheckResult r = named("error-lemma-" + to_string(variant));
  const auto rep = falsify_error_lemma(inst, ell, variant, options);
  r.cases = rep.candidates;
  r.detail = to_string(rep.verdict) + ": budget " + std::to_string(rep.size_budget) + ", min dist " +
             to_pq(rep.best_dist) + ", bound " + rep.bound_text;
  if (rep.verdict == FalsifyVerdict::Refuted) fail(r, "F = " + serialize(rep.best) + " at dist " + to_pq(rep.best_dist));
  return r;
}

std::vector<CheckResult> verify_suite(const std::string& suite, const SetCoverInstance& inst, int ell,
                                      const VerifyConfig& config) {
  require_valid_ell(ell);
  std::vector<CheckResult> out;
  if (suite == "facts") {
    out.push_back(guarded("sampler-pmf", [&] { return verify_sampler_pmf(inst, ell); }));
    out.push_back(guarded("half-mass", [&] { return verify_half_mass(inst, ell); }));
    out.push_back(verify_factopt(inst));
    out.push_back(verify_substitution(inst, ell, config.substitution_tuples, config.seed));
    out.push_back(guarded("counting", [&] { return verify_counting(inst, ell); }));
    out.push_back(guarded("junta-form", [&] { return verify_junta_form(inst, ell); }));
  } else if (suite == "claims") {
    out.push_back(guarded("term-tail", [&] { return verify_term_tail(ell, 3); }));
    const auto corpus = corpus_for(inst, ell, config);
    out.push_back(guarded("truncate", [&] { return verify_truncate(inst, ell, corpus); }));
    out.push_back(guarded("coor", [&] { return verify_coor(inst, ell, corpus); }));
    out.push_back(guarded("pop", [&] { return verify_pop(inst, ell, corpus); }));
    out.push_back(guarded("jkl", [&] { return verify_jkl(inst, ell, corpus); }));
  } else if (suite == "lemmas") {
    for (auto variant : {LemmaVariant::V16, LemmaVariant::V20}) {
      FalsifyOptions opts;
      opts.workers = config.workers;
      opts.seed = config.seed;
      if (pow_sat(3, inst.n() * ell) > config.lemma_candidate_limit) opts.strategy = SearchStrategy::RandomizedLocalSearch;
      out.push_back(guarded("error-lemma-" + to_string(variant), [&] { return verify_error_lemma(inst, ell, variant, opts); }));
    }
  } else {
    throw Error(ErrorCode::ParseError, "unknown suite '" + suite + "' (facts, claims, lemmas)");
  }
  return out;
}

}  // namespace monolift
