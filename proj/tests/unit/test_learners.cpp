#include <algorithm>
#include <bit>
#include <set>
#include <vector>

#include "monolift/construction.hpp"
#include "monolift/learners.hpp"
#include "monolift/oracle.hpp"
#include "monolift/rng.hpp"
#include "support.hpp"

using namespace monolift;
using testing::error_of;
using testing::pt;

namespace {

SetCoverInstance inst(int n, std::vector<std::string> u) { return SetCoverInstance::from_strings(n, u); }

std::vector<Example> support_sample(const SetCoverInstance& s, int ell) {
  std::vector<Example> out;
  for (const auto& p : support_enumerate(s, ell)) out.push_back({p.point, p.cls.kind == SupportKind::Top});
  return out;
}

std::vector<Example> random_sample(CounterRng& rng, int n, int ell, int count) {
  std::set<std::uint64_t> used;
  std::vector<Example> out;
  while (static_cast<int>(out.size()) < count) {
    const auto x = rng.below(1ULL << (n * ell));
    if (!used.insert(x).second) continue;
    out.push_back({LiftedPoint::unpack(x, n, ell), rng.below(2) == 1});
  }
  return out;
}

// Fewest leaves over all trees that fit the sample: split on every variable
// that separates it and recurse. No pruning, no memo.
int brute_tree_size(const std::vector<Example>& e, int vars) {
  bool any0 = false;
  bool any1 = false;
  for (const auto& x : e) (x.label ? any1 : any0) = true;
  if (!any0 || !any1) return 1;
  int best = 1 << 30;
  for (int v = 0; v < vars; ++v) {
    std::vector<Example> lo;
    std::vector<Example> hi;
    for (const auto& x : e) ((x.point.pack() >> v) & 1u ? hi : lo).push_back(x);
    if (lo.empty() || hi.empty()) continue;
    best = std::min(best, brute_tree_size(lo, vars) + brute_tree_size(hi, vars));
  }
  return best;
}

// Least rank over all consistent trees. Rank of a leaf is 0; a node whose
// children have equal rank r has rank r+1, otherwise the larger one.
int brute_tree_rank(const std::vector<Example>& e, int vars) {
  bool any0 = false;
  bool any1 = false;
  for (const auto& x : e) (x.label ? any1 : any0) = true;
  if (!any0 || !any1) return 0;
  int best = 1 << 30;
  for (int v = 0; v < vars; ++v) {
    std::vector<Example> lo;
    std::vector<Example> hi;
    for (const auto& x : e) ((x.point.pack() >> v) & 1u ? hi : lo).push_back(x);
    if (lo.empty() || hi.empty()) continue;
    const int a = brute_tree_rank(lo, vars);
    const int b = brute_tree_rank(hi, vars);
    best = std::min(best, a == b ? a + 1 : std::max(a, b));
  }
  return best;
}

int floor_log2(int s) { return std::bit_width(static_cast<unsigned>(s)) - 1; }

// First m-subset, in lexicographic order of sorted index lists, on which no
// two examples agree but carry different labels.
std::optional<std::vector<int>> brute_junta(const std::vector<Example>& e, int vars, int m) {
  std::vector<std::vector<int>> subsets;
  for (std::uint64_t mask = 0; mask < (1ULL << vars); ++mask) {
    if (std::popcount(mask) != m) continue;
    std::vector<int> s;
    for (int v = 0; v < vars; ++v) {
      if ((mask >> v) & 1u) s.push_back(v);
    }
    subsets.push_back(s);
  }
  std::sort(subsets.begin(), subsets.end());
  for (const auto& s : subsets) {
    std::uint64_t mask = 0;
    for (int v : s) mask |= 1ULL << v;
    bool ok = true;
    for (std::size_t a = 0; a < e.size() && ok; ++a) {
      for (std::size_t b = a + 1; b < e.size() && ok; ++b) {
        ok = !((e[a].point.pack() & mask) == (e[b].point.pack() & mask) && e[a].label != e[b].label);
      }
    }
    if (ok) return s;
  }
  return std::nullopt;
}

bool fits(const Dnf& f, const std::vector<Example>& e) {
  for (const auto& x : e) {
    if (eval(f, x.point) != x.label) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("sample oracle is deterministic and labels with the lifted function") {
  const auto s = inst(2, {"01", "10"});
  SampleOracle a(s, 3, 7);
  SampleOracle b(s, 3, 7);
  const auto xs = a.draw_many(200);
  CHECK(xs == b.draw_many(200));
  CHECK(a.drawn() == 200);
  for (const auto& x : xs) CHECK(x.label == (gamma_lift(s, x.point) == 1));
  CHECK(error_of([&] { SampleOracle(s, 4, 1); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("default sample size and dedupe") {
  CHECK(default_sample_size(inst(1, {"0"}), 3) == 87);  // ceil(48 ln 6)
  const std::vector<Example> e{{pt("110"), true}, {pt("100"), false}, {pt("110"), true}};
  const auto d = dedupe(e);
  REQUIRE(d.size() == 2);
  CHECK(d[0].point == pt("110"));
  CHECK(d[1].point == pt("100"));
}

TEST_CASE("junta learner picks the first consistent subset") {
  CounterRng rng(31);
  for (int rep = 0; rep < 150; ++rep) {
    const int n = 1 + static_cast<int>(rng.below(2));
    const int ell = 3;
    const int m = static_cast<int>(rng.below(static_cast<std::uint64_t>(n * ell) + 1));
    const auto sample = random_sample(rng, n, ell, 1 + static_cast<int>(rng.below(6)));
    const auto expected = brute_junta(sample, n * ell, m);
    const JuntaEnumLearner learner(m);
    CAPTURE(rep);
    if (!expected) {
      CHECK(error_of([&] { learner.fit(sample, n, ell, 1'000'000); }) == ErrorCode::NoConsistentSubset);
      continue;
    }
    const auto out = learner.fit(sample, n, ell, 1'000'000);
    REQUIRE(out.hypothesis.has_value());
    REQUIRE(out.junta.size() == expected->size());
    for (std::size_t k = 0; k < expected->size(); ++k) {
      CHECK(out.junta[k] == VarId{(*expected)[k] / ell + 1, (*expected)[k] % ell + 1});
    }
    CHECK(out.consistent);
    CHECK(fits(*out.hypothesis, sample));
  }
}

TEST_CASE("junta learner on full support reaches distance zero") {
  const auto s = inst(2, {"01", "10"});
  const auto out = JuntaEnumLearner(6).fit(support_sample(s, 3), 2, 3, 1'000'000);
  REQUIRE(out.hypothesis.has_value());
  CHECK(dist_exact(s, 3, *out.hypothesis).dist == 0);
  // Exactly one probe: the first 6-subset is every variable.
  CHECK(out.steps_used == 1 + support_sample(s, 3).size());

  const auto mixed = support_sample(s, 3);
  CHECK(error_of([&] { JuntaEnumLearner(0).fit(mixed, 2, 3, 100); }) == ErrorCode::NoConsistentSubset);
  const auto cut = JuntaEnumLearner(5).fit(mixed, 2, 3, 1);
  CHECK(cut.aborted);
  CHECK_FALSE(cut.hypothesis.has_value());
  CHECK(cut.steps_used == 1);
}

TEST_CASE("decision tree learner succeeds exactly up to the rank bound") {
  CounterRng rng(12);
  for (int rep = 0; rep < 120; ++rep) {
    const int n = 1 + static_cast<int>(rng.below(2));
    const auto sample = random_sample(rng, n, 3, 1 + static_cast<int>(rng.below(7)));
    const int leaves = brute_tree_size(sample, n * 3);
    const int rank = brute_tree_rank(sample, n * 3);
    CAPTURE(rep);
    for (int s = 1; s <= 9; ++s) {
      CAPTURE(s);
      if (rank <= floor_log2(s)) {
        const auto out = EhDecisionTreeLearner(s).fit(sample, n, 3, 10'000'000);
        REQUIRE(out.tree.has_value());
        CHECK(out.consistent);
        CHECK(fits(*out.hypothesis, sample));
        CHECK(out.tree->size() >= leaves);
      } else {
        CHECK(leaves > s);
        CHECK(error_of([&] { EhDecisionTreeLearner(s).fit(sample, n, 3, 10'000'000); }) ==
              ErrorCode::NoConsistentTree);
      }
    }
  }
}

TEST_CASE("decision tree learner on single-block majority") {
  const auto s = inst(1, {"0"});
  const auto sample = support_sample(s, 3);
  // Six leaves are needed, but the rank is 2, so s = 4 suffices.
  CHECK(brute_tree_size(sample, 3) == 6);
  CHECK(brute_tree_rank(sample, 3) == 2);
  const auto full = EhDecisionTreeLearner(4).fit(sample, 1, 3, 1'000'000);
  REQUIRE(full.hypothesis.has_value());
  CHECK(full.consistent);
  CHECK(dist_exact(s, 3, *full.hypothesis).dist == 0);
  CHECK(error_of([&] { EhDecisionTreeLearner(3).fit(sample, 1, 3, 1'000'000); }) == ErrorCode::NoConsistentTree);

  const auto cut = EhDecisionTreeLearner(4).fit(sample, 1, 3, 2);
  CHECK(cut.aborted);
  CHECK(cut.steps_used == 2);
  CHECK(EhDecisionTreeLearner(4).fit(sample, 1, 3, 1'000'000).steps_used == full.steps_used);

  const std::vector<Example> constant{{pt("110"), true}, {pt("100"), true}};
  const auto leaf = EhDecisionTreeLearner(1).fit(constant, 1, 3, 10);
  CHECK(leaf.tree->size() == 1);
  CHECK(leaf.hypothesis->size() == 1);
}

TEST_CASE("capped greedy learner") {
  for (const auto& [name, s] : desk_suite()) {
    CAPTURE(name);
    const auto sample = support_sample(s, 3);
    const auto out = CappedGreedyLearner(1000).fit(sample, s.n(), 3, 100'000'000);
    REQUIRE(out.hypothesis.has_value());
    CHECK(out.consistent);
    for (const auto& t : out.hypothesis->terms()) CHECK(t.neg().empty());
    const auto one = CappedGreedyLearner(1).fit(sample, s.n(), 3, 100'000'000);
    CHECK(one.hypothesis->size() <= 1);
  }
  const auto s = inst(2, {"01", "10"});
  const auto none = CappedGreedyLearner(0).fit(support_sample(s, 3), 2, 3, 10);
  CHECK(none.hypothesis->size() == 0);
  CHECK(dist_exact(s, 3, *none.hypothesis).dist == testing::q(1, 2));
  CHECK(CappedGreedyLearner(5).fit(support_sample(s, 3), 2, 3, 3).aborted);
}

TEST_CASE("learn draws, dedupes and fits") {
  const auto s = inst(1, {"0"});
  SampleOracle oracle(s, 3, 5);
  const auto out = JuntaEnumLearner(3).learn(oracle, LearnerBudget{});
  CHECK(oracle.drawn() == 87);
  CHECK(out.sample_size == 6);
  REQUIRE(out.hypothesis.has_value());
  CHECK(dist_exact(s, 3, *out.hypothesis).dist == 0);
  CHECK(make_learner("greedy", 2)->name() == "greedy");
  CHECK(error_of([] { make_learner("svm", 1); }) == ErrorCode::ParseError);
}
