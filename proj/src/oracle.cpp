#include "monolift/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "monolift/bits.hpp"
#include "monolift/errors.hpp"
#include "monolift/rng.hpp"

namespace monolift {

namespace {

Rational ratio(std::uint64_t num, std::uint64_t den) {
  Rational q{BigInt(num), BigInt(den)};
  q.canonicalize();
  return q;
}

Rational ratio(const BigInt& num, const BigInt& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Number of (j, u) pairs, j in one(z) and u in U, with F(z^{j<-u}) = 1.
// z is packed and lies in the Top support.
std::uint64_t projection_hits(const CompiledDnf& f, std::uint64_t z, const SetCoverInstance& inst, int ell) {
  const int n = inst.n();
  std::vector<std::vector<int>> ones(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const auto block = static_cast<std::uint32_t>((z >> (i * ell)) & ((1ULL << ell) - 1));
    for (int p : set_positions(block)) ones[static_cast<std::size_t>(i)].push_back(i * ell + p);
  }
  std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
  std::uint64_t hits = 0;
  for (;;) {
    for (BitVector u : inst.universe()) {
      std::uint64_t y = z;
      for (int i = 0; i < n; ++i) {
        if (((u >> i) & 1u) == 0) y &= ~(1ULL << ones[static_cast<std::size_t>(i)][idx[static_cast<std::size_t>(i)]]);
      }
      if (f.eval(y)) ++hits;
    }
    int i = n;
    while (i > 0) {
      --i;
      if (++idx[static_cast<std::size_t>(i)] < ones[static_cast<std::size_t>(i)].size()) break;
      idx[static_cast<std::size_t>(i)] = 0;
      if (i == 0) return hits;
    }
  }
}

std::uint64_t projections_per_point(const SetCoverInstance& inst, int ell) {
  return pow_sat(static_cast<std::uint64_t>(half_up(ell)), inst.n()) * inst.universe_size();
}

}  // namespace

// --- ExactOracle ------------------------------------------------------------

ExactOracle::ExactOracle(SetCoverInstance inst, int ell, std::uint64_t budget)
    : inst_(std::move(inst)), ell_(ell), support_(pack_support(inst_, ell, budget)) {}

DistReport ExactOracle::report(std::uint64_t top_errors, std::uint64_t bottom_errors) const {
  DistReport r;
  r.top_errors = top_errors;
  r.bottom_errors = bottom_errors;
  r.support_size = support_.top.size() + support_.bottom.size();
  r.err_given_1 = ratio(top_errors, support_.top.size());
  r.err_given_0 = ratio(bottom_errors, support_.bottom.size());
  r.dist = (r.err_given_1 + r.err_given_0) / 2;
  return r;
}

DistReport ExactOracle::dist(const CompiledDnf& f) const {
  std::uint64_t top_errors = 0;
  std::uint64_t bottom_errors = 0;
  for (std::uint64_t y : support_.top) top_errors += f.eval(y) ? 0 : 1;
  for (std::uint64_t y : support_.bottom) bottom_errors += f.eval(y) ? 1 : 0;
  return report(top_errors, bottom_errors);
}

DistReport ExactOracle::dist(const Dnf& f) const { return dist(CompiledDnf(f, inst_.n(), ell_)); }

std::vector<std::uint64_t> ExactOracle::omega(const CompiledDnf& f) const {
  std::vector<std::uint64_t> out;
  for (std::uint64_t y : support_.top) {
    if (f.eval(y)) out.push_back(y);
  }
  return out;
}

Rational ExactOracle::expected_mwidth_omega(const Dnf& f) const {
  const CompiledDnf c(f, inst_.n(), ell_);
  std::uint64_t count = 0;
  std::uint64_t total = 0;
  for (std::uint64_t y : support_.top) {
    if (!c.eval(y)) continue;
    ++count;
    total += static_cast<std::uint64_t>(c.mwidth(y));
  }
  if (count == 0) throw Error(ErrorCode::EmptyOmega, "F is 0 on every Top point");
  return ratio(total, count);
}

DistReport dist_exact(const SetCoverInstance& inst, int ell, const Dnf& f, std::uint64_t budget) {
  return ExactOracle(inst, ell, budget).dist(f);
}

Rational expected_mwidth_omega(const SetCoverInstance& inst, int ell, const Dnf& f, std::uint64_t budget) {
  return ExactOracle(inst, ell, budget).expected_mwidth_omega(f);
}

void require_lemma_ell(int ell) {
  require_valid_ell(ell);
  if (ell < 5) throw Error(ErrorCode::LemmaRequiresEll5, "this check needs ell >= 5, got " + std::to_string(ell));
}

// --- term tail ---------------------------------------------------------------

TermTailReport check_term_tail(int ell, const std::vector<int>& per_block) {
  require_lemma_ell(ell);
  const int h = half_up(ell);
  TermTailReport r;
  r.probability = 1;
  const BigInt all(binomial(ell, h));
  for (int b : per_block) {
    if (b < 0 || b > h) {
      throw Error(ErrorCode::InvalidArgument, "block count " + std::to_string(b) + " outside [0," + std::to_string(h) + "]");
    }
    r.total += b;
    r.probability *= ratio(BigInt(binomial(ell - b, h - b)), all);
  }
  r.pass = leq_pow2_neg(r.probability, static_cast<unsigned long>(r.total), 2);
  return r;
}

// --- truncation ----------------------------------------------------------------

TruncateReport check_truncate(const SetCoverInstance& inst, int ell, const Dnf& f, bool require_size_precondition) {
  require_lemma_ell(ell);
  TruncateReport r;
  r.opt = opt_exact(inst).size;
  const auto opt_ell = static_cast<unsigned long>(r.opt * ell);
  r.size_precondition_holds = less_than_pow2(BigInt(f.size()), opt_ell, 20);
  if (require_size_precondition && !r.size_precondition_holds) {
    throw Error(ErrorCode::SizePreconditionViolated,
                "|F| = " + std::to_string(f.size()) + " is not below 2^(" + std::to_string(opt_ell) + "/20)");
  }
  r.bound = r.opt * ell / 5;
  r.truncated = truncate_monotone(f, r.bound, ell);
  r.removed = f.size() - r.truncated.size();

  const ExactOracle oracle(inst, ell);
  const CompiledDnf before(f, inst.n(), ell);
  const CompiledDnf after(r.truncated, inst.n(), ell);
  r.dist_before = oracle.dist(before).dist;
  r.dist_after = oracle.dist(after).dist;
  std::uint64_t changed = 0;
  for (std::uint64_t y : oracle.support().top) changed += before.eval(y) != after.eval(y) ? 1 : 0;
  r.top_change = ratio(changed, oracle.support().top.size());

  const bool per_term = r.removed == 0 ? changed == 0
                                       : leq_pow2_neg(r.top_change / r.removed, opt_ell, 10);
  r.union_bound_holds = per_term && r.dist_after <= r.dist_before + r.top_change / 2;
  r.inequality_holds = leq_pow2_neg(r.dist_after - r.dist_before, opt_ell, 20);
  r.pass = r.union_bound_holds && (!r.size_precondition_holds || r.inequality_holds);
  return r;
}

// --- projection claims --------------------------------------------------------

ProbabilityReport check_claim_coor(const SetCoverInstance& inst, int ell, const Dnf& f, const LiftedPoint& z) {
  require_valid_ell(ell);
  const int opt = opt_exact(inst).size;
  if (opt < 2) throw Error(ErrorCode::DegenerateOpt, "opt = 1 leaves no monotone budget");
  if (z.ell() != ell || classify(inst, z).kind != SupportKind::Top) {
    throw Error(ErrorCode::NotInTopSupport, z.to_string() + " is not a Top point");
  }
  if (!f.eval(z)) throw Error(ErrorCode::FalseAtPoint, "F(" + z.to_string() + ") = 0");
  const int h = half_up(ell);
  for (const auto& t : f.terms()) {
    if (2 * t.monotone_size() > h * (opt - 1)) {
      throw Error(ErrorCode::MonotoneSizeTooLarge,
                  "term " + serialize(t) + " exceeds monotone size ceil(ell/2)(opt-1)/2");
    }
  }
  const CompiledDnf c(f, inst.n(), ell);
  ProbabilityReport r;
  r.probability = ratio(projection_hits(c, z.pack(), inst, ell), projections_per_point(inst, ell));
  r.bound = ratio(1, 2 * inst.universe_size());
  r.pass = r.probability >= r.bound;
  return r;
}

CoorAReport check_claim_coorA(const SetCoverInstance& inst, int ell, const Dnf& f) {
  const int opt = opt_exact(inst).size;
  const ExactOracle oracle(inst, ell);
  CoorAReport r;
  r.expectation = oracle.expected_mwidth_omega(f);
  if (4 * r.expectation > opt * ell) {
    throw Error(ErrorCode::ExpectationTooLarge, "E[mwidth] = " + to_pq(r.expectation) + " exceeds opt*ell/4");
  }
  const CompiledDnf c(f, inst.n(), ell);
  const auto om = oracle.omega(c);
  BigInt hits(0);
  for (std::uint64_t z : om) hits += BigInt(projection_hits(c, z, inst, ell));
  r.result.probability = ratio(hits, BigInt(om.size()) * BigInt(projections_per_point(inst, ell)));
  r.result.bound = ratio(1, 2 * inst.universe_size());
  r.result.pass = r.result.probability >= r.result.bound;
  return r;
}

PopReport check_claim_pop(const ExactOracle& oracle, int opt, const Dnf& f) {
  const auto& inst = oracle.instance();
  PopReport r;
  r.bound = ratio(1, 8 * inst.universe_size());
  const CompiledDnf c(f, inst.n(), oracle.ell());
  r.dist = oracle.dist(c).dist;
  if (oracle.omega(c).empty()) {
    r.pass = true;
    return r;
  }
  r.expectation = oracle.expected_mwidth_omega(f);
  r.applicable = 4 * r.expectation <= opt * oracle.ell();
  r.pass = !r.applicable || r.dist >= r.bound;
  return r;
}

JklReport check_claim_jkl(const ExactOracle& oracle, const Dnf& f) {
  if (f.size() < 2) throw Error(ErrorCode::SizeTooSmall, "the claim needs |F| >= 2");
  const Rational d = oracle.dist(f).dist;
  if (d > Rational(1, 4)) throw Error(ErrorCode::DistTooLarge, "dist = " + to_pq(d) + " exceeds 1/4");
  JklReport r;
  r.expectation = oracle.expected_mwidth_omega(f);
  r.bound = 4.0 * std::log2(static_cast<double>(f.size()));
  r.pass = pow2_leq_power(r.expectation, BigInt(f.size()), 4);
  return r;
}

JklReport check_claim_jkl(const SetCoverInstance& inst, int ell, const Dnf& f) {
  return check_claim_jkl(ExactOracle(inst, ell), f);
}

// --- falsifier ------------------------------------------------------------------

std::string to_string(LemmaVariant v) { return v == LemmaVariant::V16 ? "v16" : "v20"; }

std::string to_string(SearchStrategy s) {
  switch (s) {
    case SearchStrategy::ExhaustiveSingleTerm: return "exhaustive1";
    case SearchStrategy::ExhaustiveUpToK: return "exhaustivek";
    case SearchStrategy::RandomizedLocalSearch: return "random";
  }
  return "?";
}

std::string to_string(FalsifyVerdict v) {
  switch (v) {
    case FalsifyVerdict::Confirmed: return "Confirmed";
    case FalsifyVerdict::Refuted: return "Refuted";
    case FalsifyVerdict::BestEffort: return "BestEffort";
    case FalsifyVerdict::Vacuous: return "Vacuous";
  }
  return "?";
}

LemmaVariant parse_variant(const std::string& text) {
  if (text == "v16") return LemmaVariant::V16;
  if (text == "v20") return LemmaVariant::V20;
  throw Error(ErrorCode::ParseError, "unknown lemma variant '" + text + "'");
}

SearchStrategy parse_strategy(const std::string& text) {
  if (text == "exhaustive1") return SearchStrategy::ExhaustiveSingleTerm;
  if (text == "exhaustivek") return SearchStrategy::ExhaustiveUpToK;
  if (text == "random") return SearchStrategy::RandomizedLocalSearch;
  throw Error(ErrorCode::ParseError, "unknown strategy '" + text + "'");
}

bool meets_lemma_bound(const Rational& dist, LemmaVariant variant, std::size_t universe_size, int opt, int ell) {
  const Rational base = ratio(1, 8 * universe_size);
  if (variant == LemmaVariant::V16) return dist >= base;
  return leq_pow2_neg(base - dist, static_cast<unsigned long>(opt * ell), 20);
}

namespace {

// Literal state per variable: 0 absent, 1 positive, 2 negative.
struct MaskTerm {
  std::uint64_t pos = 0;
  std::uint64_t neg = 0;
};

// Scores a hypothesis by an integer proportional to its distance:
// dist = key / (2 |Top| |Bottom|) with key = topErr*|Bottom| + bottomErr*|Top|.
struct Scorer {
  const PackedSupport* s;
  std::uint64_t key(std::uint64_t top_errors, std::uint64_t bottom_errors) const {
    return top_errors * s->bottom.size() + bottom_errors * s->top.size();
  }
  std::uint64_t key_of(const std::vector<MaskTerm>& f) const {
    auto sat = [&](std::uint64_t y) {
      for (const auto& t : f) {
        if ((y & t.pos) == t.pos && (y & t.neg) == 0) return true;
      }
      return false;
    };
    std::uint64_t te = 0;
    std::uint64_t be = 0;
    for (std::uint64_t y : s->top) te += sat(y) ? 0 : 1;
    for (std::uint64_t y : s->bottom) be += sat(y) ? 1 : 0;
    return key(te, be);
  }
  Rational dist(std::uint64_t key) const {
    return ratio(BigInt(key), BigInt(2) * BigInt(s->top.size()) * BigInt(s->bottom.size()));
  }
};

Dnf to_dnf(const std::vector<MaskTerm>& f, int ell) {
  Dnf out;
  auto vars = [&](std::uint64_t mask) {
    std::vector<VarId> v;
    for (int b : set_positions(mask)) v.push_back({b / ell + 1, b % ell + 1});
    return v;
  };
  for (const auto& t : f) out.add(Term(vars(t.pos), vars(t.neg)));
  return out;
}

std::uint64_t pow3(int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) r = mul_sat(r, 3);
  return r;
}

struct Best {
  std::uint64_t key = UINT64_MAX;
  std::vector<MaskTerm> dnf;
};

// Reflected ternary Gray code over `vars` digits (digit i drives packed bit i).
// Visits indices [begin, end); consecutive codes differ in one digit by +-1.
Best sweep_single_terms(const Scorer& sc, int vars, std::uint64_t begin, std::uint64_t end) {
  std::vector<int> d(static_cast<std::size_t>(vars));
  std::vector<int> g(static_cast<std::size_t>(vars));
  MaskTerm t;
  std::uint64_t rest = begin;
  for (int i = 0; i < vars; ++i) {
    d[static_cast<std::size_t>(i)] = static_cast<int>(rest % 3);
    rest /= 3;
  }
  auto apply = [&](int i, int state) {
    const std::uint64_t bit = 1ULL << i;
    t.pos &= ~bit;
    t.neg &= ~bit;
    if (state == 1) t.pos |= bit;
    if (state == 2) t.neg |= bit;
    g[static_cast<std::size_t>(i)] = state;
  };
  int parity = 0;
  for (int i = vars; i-- > 0;) {
    const int di = d[static_cast<std::size_t>(i)];
    apply(i, parity % 2 == 0 ? di : 2 - di);
    parity += di;
  }
  Best best;
  for (std::uint64_t index = begin; index < end; ++index) {
    const std::uint64_t k = sc.key_of({t});
    if (k < best.key) {
      best.key = k;
      best.dnf = {t};
    }
    if (index + 1 == end) break;
    int p = 0;
    while (d[static_cast<std::size_t>(p)] == 2) d[static_cast<std::size_t>(p++)] = 0;
    ++d[static_cast<std::size_t>(p)];
    int above = 0;
    for (int i = p + 1; i < vars; ++i) above += d[static_cast<std::size_t>(i)];
    const int dp = d[static_cast<std::size_t>(p)];
    apply(p, above % 2 == 0 ? dp : 2 - dp);
  }
  return best;
}

Best exhaustive_single(const Scorer& sc, int vars, int workers, std::uint64_t& candidates) {
  const std::uint64_t total = pow3(vars);
  candidates = total + 1;
  Best best;
  best.key = sc.key_of({});  // the empty DNF
  const auto chunks = static_cast<std::uint64_t>(std::max(1, workers));
  std::vector<Best> parts(chunks);
  auto run = [&](std::uint64_t c) {
    const std::uint64_t lo = total * c / chunks;
    const std::uint64_t hi = total * (c + 1) / chunks;
    if (lo < hi) parts[c] = sweep_single_terms(sc, vars, lo, hi);
  };
  if (chunks == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (std::uint64_t c = 0; c < chunks; ++c) pool.emplace_back(run, c);
    for (auto& th : pool) th.join();
  }
  // Chunk order is enumeration order, so strict < keeps the first minimum.
  for (const auto& part : parts) {
    if (part.key < best.key) best = part;
  }
  return best;
}

Best exhaustive_up_to_k(const Scorer& sc, const std::vector<int>& window, int k, std::uint64_t budget,
                        std::uint64_t& candidates) {
  const auto& s = *sc.s;
  const std::uint64_t nterms = pow3(static_cast<int>(window.size()));
  // Candidate count sum_{i<=k} C(nterms, i), saturating.
  std::uint64_t count = 0;
  {
    std::uint64_t c = 1;
    __extension__ typedef unsigned __int128 u128;
    for (int i = 0; i <= k; ++i) {
      count = count + c < count ? UINT64_MAX : count + c;
      if (static_cast<std::uint64_t>(i) >= nterms) break;
      const u128 next = static_cast<u128>(c) * (nterms - static_cast<std::uint64_t>(i)) /
                                     static_cast<std::uint64_t>(i + 1);
      c = next > UINT64_MAX ? UINT64_MAX : static_cast<std::uint64_t>(next);
    }
  }
  if (count > budget) {
    throw Error(ErrorCode::BudgetExceeded,
                std::to_string(count) + " candidate DNFs exceed the budget of " + std::to_string(budget));
  }
  candidates = count;

  const std::size_t top_words = (s.top.size() + 63) / 64;
  const std::size_t bottom_words = (s.bottom.size() + 63) / 64;
  std::vector<MaskTerm> terms(nterms);
  std::vector<std::uint64_t> sat(nterms * (top_words + bottom_words), 0);
  for (std::uint64_t r = 0; r < nterms; ++r) {
    std::uint64_t rest = r;
    MaskTerm t;
    for (int v : window) {
      const auto state = rest % 3;
      rest /= 3;
      if (state == 1) t.pos |= 1ULL << v;
      if (state == 2) t.neg |= 1ULL << v;
    }
    terms[r] = t;
    std::uint64_t* row = &sat[r * (top_words + bottom_words)];
    for (std::size_t p = 0; p < s.top.size(); ++p) {
      if ((s.top[p] & t.pos) == t.pos && (s.top[p] & t.neg) == 0) row[p / 64] |= 1ULL << (p % 64);
    }
    for (std::size_t p = 0; p < s.bottom.size(); ++p) {
      if ((s.bottom[p] & t.pos) == t.pos && (s.bottom[p] & t.neg) == 0) {
        row[top_words + p / 64] |= 1ULL << (p % 64);
      }
    }
  }

  const std::size_t words = top_words + bottom_words;
  std::vector<std::vector<std::uint64_t>> acc(static_cast<std::size_t>(k) + 1, std::vector<std::uint64_t>(words, 0));
  std::vector<std::uint64_t> chosen;
  Best best;
  auto score = [&](const std::vector<std::uint64_t>& bits) {
    std::uint64_t top_sat = 0;
    std::uint64_t bottom_sat = 0;
    for (std::size_t w = 0; w < top_words; ++w) top_sat += static_cast<std::uint64_t>(popcount(bits[w]));
    for (std::size_t w = top_words; w < words; ++w) bottom_sat += static_cast<std::uint64_t>(popcount(bits[w]));
    return sc.key(s.top.size() - top_sat, bottom_sat);
  };
  auto rec = [&](auto&& self, std::uint64_t from, int depth) -> void {
    const std::uint64_t key = score(acc[static_cast<std::size_t>(depth)]);
    if (key < best.key) {
      best.key = key;
      best.dnf.clear();
      for (std::uint64_t c : chosen) best.dnf.push_back(terms[c]);
    }
    if (depth == k) return;
    for (std::uint64_t r = from; r < nterms; ++r) {
      const std::uint64_t* row = &sat[r * words];
      auto& next = acc[static_cast<std::size_t>(depth) + 1];
      const auto& cur = acc[static_cast<std::size_t>(depth)];
      for (std::size_t w = 0; w < words; ++w) next[w] = cur[w] | row[w];
      chosen.push_back(r);
      self(self, r + 1, depth + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0, 0);
  return best;
}

Best local_search(const Scorer& sc, int vars, std::uint64_t size_budget, std::uint64_t seed, std::uint64_t iters) {
  CounterRng rng(seed, 0x6c73);
  const std::uint64_t max_terms = std::min<std::uint64_t>(size_budget, 64);
  auto random_term = [&]() {
    MaskTerm t;
    for (int v = 0; v < vars; ++v) {
      const auto roll = rng.below(10);
      if (roll < 2) t.pos |= 1ULL << v;
      if (roll == 2) t.neg |= 1ULL << v;
    }
    return t;
  };
  std::vector<MaskTerm> cur{random_term()};
  std::uint64_t cur_key = sc.key_of(cur);
  Best best;
  best.key = sc.key_of({});
  if (cur_key < best.key) {
    best.key = cur_key;
    best.dnf = cur;
  }
  for (std::uint64_t it = 0; it < iters; ++it) {
    std::vector<MaskTerm> next = cur;
    const auto move = rng.below(4);
    if (move == 0 && next.size() < max_terms) {
      next.push_back(random_term());
    } else if (move == 1 && next.size() > 1) {
      next.erase(next.begin() + static_cast<std::ptrdiff_t>(rng.below(next.size())));
    } else {
      auto& t = next[rng.below(next.size())];
      const int v = static_cast<int>(rng.below(static_cast<std::uint64_t>(vars)));
      const std::uint64_t bit = 1ULL << v;
      t.pos &= ~bit;
      t.neg &= ~bit;
      const auto state = rng.below(3);
      if (state == 1) t.pos |= bit;
      if (state == 2) t.neg |= bit;
    }
    const std::uint64_t k = sc.key_of(next);
    if (k <= cur_key) {
      cur = std::move(next);
      cur_key = k;
      if (k < best.key) {
        best.key = k;
        best.dnf = cur;
      }
    }
  }
  return best;
}

}  // namespace

FalsifyReport falsify_error_lemma(const SetCoverInstance& inst, int ell, LemmaVariant variant,
                                  const FalsifyOptions& options) {
  require_lemma_ell(ell);
  FalsifyReport r;
  r.variant = variant;
  r.strategy = options.strategy;
  r.opt = opt_exact(inst).size;
  const auto opt_ell = static_cast<unsigned long>(r.opt * ell);
  const auto u = inst.universe_size();
  const unsigned long den = variant == LemmaVariant::V16 ? 16 : 20;
  r.size_budget = max_size_below_pow2(opt_ell, den);
  const std::string exponent = std::to_string(opt_ell) + "/" + std::to_string(den);
  if (variant == LemmaVariant::V16) {
    r.bound_text = "1/" + std::to_string(8 * u);
    r.bound_approx = 1.0 / (8.0 * static_cast<double>(u));
  } else {
    r.bound_text = "1/" + std::to_string(8 * u) + " - 2^(-" + exponent + ")";
    r.bound_approx = 1.0 / (8.0 * static_cast<double>(u)) - std::exp2(-static_cast<double>(opt_ell) / 20.0);
  }

  if (variant == LemmaVariant::V20 && leq_pow2_neg(ratio(1, 8 * u), opt_ell, 20)) {
    r.verdict = FalsifyVerdict::Vacuous;
    r.best_dist = Rational(0);
    r.note = "distance bound " + r.bound_text + " is not positive";
    return r;
  }
  if (r.size_budget == 0) {
    r.verdict = FalsifyVerdict::Vacuous;
    r.best_dist = Rational(0);
    r.note = "no DNF has size below 2^(" + exponent + ")";
    return r;
  }

  const ExactOracle oracle(inst, ell);
  const Scorer sc{&oracle.support()};
  const int vars = inst.n() * ell;
  Best best;
  switch (options.strategy) {
    case SearchStrategy::ExhaustiveSingleTerm: {
      if (pow3(vars) > options.candidate_budget) {
        throw Error(ErrorCode::BudgetExceeded, "3^" + std::to_string(vars) + " single terms exceed the budget");
      }
      best = exhaustive_single(sc, vars, options.workers, r.candidates);
      r.exhaustive = r.size_budget <= 1;
      break;
    }
    case SearchStrategy::ExhaustiveUpToK: {
      std::vector<int> window;
      for (const VarId& v : options.window) {
        if (v.block < 1 || v.block > inst.n() || v.pos < 1 || v.pos > ell) {
          throw Error(ErrorCode::OutOfRange, "window variable outside (n, ell)");
        }
        window.push_back((v.block - 1) * ell + (v.pos - 1));
      }
      if (window.empty()) {
        for (int v = 0; v < vars; ++v) window.push_back(v);
      }
      std::sort(window.begin(), window.end());
      window.erase(std::unique(window.begin(), window.end()), window.end());
      const int k = static_cast<int>(std::min<std::uint64_t>(static_cast<std::uint64_t>(std::max(0, options.max_terms)),
                                                              r.size_budget));
      best = exhaustive_up_to_k(sc, window, k, options.candidate_budget, r.candidates);
      r.exhaustive = static_cast<int>(window.size()) == vars && static_cast<std::uint64_t>(k) >= r.size_budget;
      break;
    }
    case SearchStrategy::RandomizedLocalSearch:
      best = local_search(sc, vars, r.size_budget, options.seed, options.iterations);
      r.candidates = options.iterations + 2;
      break;
  }
  r.best = to_dnf(best.dnf, ell);
  r.best_dist = sc.dist(best.key);
  if (!meets_lemma_bound(r.best_dist, variant, u, r.opt, ell)) {
    r.verdict = FalsifyVerdict::Refuted;
    r.note = "witness of size " + std::to_string(r.best.size()) + " has distance below the bound";
  } else if (r.exhaustive) {
    r.verdict = FalsifyVerdict::Confirmed;
    r.note = "every DNF within the size budget was checked";
  } else {
    r.verdict = FalsifyVerdict::BestEffort;
    r.note = "search did not cover every DNF within the size budget";
  }
  return r;
}

// --- corpus ----------------------------------------------------------------------

namespace {

Dnf block_majority(int block, int ell) {
  Dnf out;
  for (std::uint32_t m : fixed_weight_masks(ell, half_up(ell))) {
    std::vector<VarId> pos;
    for (int p : set_positions(m)) pos.push_back({block, p + 1});
    out.add(Term(std::move(pos), {}));
  }
  return out;
}

Dnf random_dnf(CounterRng& rng, int n, int ell, int max_terms, int max_literals, int negative_percent) {
  Dnf out;
  const int terms = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_terms)));
  for (int t = 0; t < terms; ++t) {
    const int lits = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_literals) + 1));
    std::vector<VarId> pos;
    std::vector<VarId> neg;
    for (int l = 0; l < lits; ++l) {
      const VarId v{1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n))),
                    1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(ell)))};
      if (std::find(pos.begin(), pos.end(), v) != pos.end() || std::find(neg.begin(), neg.end(), v) != neg.end()) {
        continue;
      }
      if (static_cast<int>(rng.below(100)) < negative_percent) {
        neg.push_back(v);
      } else {
        pos.push_back(v);
      }
    }
    out.add(Term(std::move(pos), std::move(neg)));
  }
  return out;
}

Dnf random_subset(CounterRng& rng, const Dnf& f, int keep_percent) {
  Dnf out;
  for (const auto& t : f.terms()) {
    if (static_cast<int>(rng.below(100)) < keep_percent) out.add(t);
  }
  return out;
}

}  // namespace

std::vector<Dnf> hypothesis_corpus(const SetCoverInstance& inst, int ell, std::uint64_t seed, std::size_t count) {
  require_valid_ell(ell);
  const int n = inst.n();
  const int h = half_up(ell);
  CounterRng rng(seed, 0x636f72);
  std::vector<Dnf> out;
  out.push_back(Dnf{});
  out.push_back(Dnf({Term{}}));

  const int opt = opt_exact(inst).size;
  std::vector<Dnf> juntas;
  for (SetMask c = 1; c <= inst.all_ones() && juntas.size() < 16; ++c) {
    if (popcount(c) <= opt + 1 && is_cover(inst, c)) juntas.push_back(monotone_junta_form(inst, ell, c));
  }
  for (int i = 1; i <= n; ++i) out.push_back(block_majority(i, ell));

  for (const Dnf& j : juntas) {
    out.push_back(j);
    for (int b = 0; b <= h * n; b += std::max(1, h / 2)) out.push_back(truncate_monotone(j, b, ell));
    for (int keep : {10, 30, 50, 80, 95}) out.push_back(random_subset(rng, j, keep));
    Dnf junk = j;
    junk.add(random_dnf(rng, n, ell, 1, n * ell, 10).terms().front());
    out.push_back(junk);
  }
  for (int v = 0; v < n * ell; ++v) out.push_back(Dnf({Term({{v / ell + 1, v % ell + 1}}, {})}));

  while (out.size() < count) {
    const auto kind = rng.below(4);
    if (kind == 0) {
      out.push_back(random_dnf(rng, n, ell, 6, 2 * h, 0));
    } else if (kind == 1) {
      out.push_back(random_dnf(rng, n, ell, 4, n * ell / 2 + 1, 25));
    } else if (kind == 2 && !juntas.empty()) {
      Dnf mixed = random_subset(rng, juntas[rng.below(juntas.size())], 60);
      const Dnf extra = random_dnf(rng, n, ell, 3, h, 15);
      for (const auto& t : extra.terms()) mixed.add(t);
      out.push_back(truncate_monotone(mixed, static_cast<int>(rng.below(static_cast<std::uint64_t>(h * n) + 1)), ell));
    } else {
      out.push_back(random_dnf(rng, n, ell, 2, 2, 0));
    }
  }
  return out;
}

std::vector<SuiteInstance> desk_suite() {
  auto make = [](std::string name, int n, std::vector<std::string> u) {
    return SuiteInstance{std::move(name), SetCoverInstance::from_strings(n, u)};
  };
  return {
      make("single", 1, {"0"}),
      make("pair-disjoint", 2, {"01", "10"}),
      make("pair-single", 2, {"01"}),
      make("triple-two", 3, {"110", "101"}),
      make("triple-weight2", 3, {"011", "101", "110"}),
      make("triple-weight1", 3, {"001", "010", "100"}),
  };
}

}  // namespace monolift
