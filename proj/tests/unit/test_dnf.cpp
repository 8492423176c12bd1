#include <vector>

#include "monolift/construction.hpp"
#include "monolift/dnf.hpp"
#include "monolift/rng.hpp"
#include "support.hpp"

using namespace monolift;
using testing::error_of;
using testing::pt;

namespace {

Term pos(std::vector<VarId> v) { return Term(std::move(v), {}); }

// Every point of ({0,1}^ell)^n.
std::vector<LiftedPoint> all_points(int n, int ell) {
  std::vector<LiftedPoint> out;
  const std::uint64_t total = 1ULL << (n * ell);
  for (std::uint64_t x = 0; x < total; ++x) out.push_back(LiftedPoint::unpack(x, n, ell));
  return out;
}

Dnf random_dnf(CounterRng& rng, int n, int ell) {
  Dnf f;
  const auto terms = rng.below(4);
  for (std::uint64_t t = 0; t < terms; ++t) {
    std::vector<VarId> p;
    std::vector<VarId> q;
    for (int i = 1; i <= n; ++i) {
      for (int s = 1; s <= ell; ++s) {
        const auto r = rng.below(6);
        if (r == 0) p.push_back({i, s});
        if (r == 1) q.push_back({i, s});
      }
    }
    f.add(Term(p, q));
  }
  return f;
}

}  // namespace

TEST_CASE("lifted point text and packing") {
  const auto y = pt("110.011");
  CHECK(y.n() == 2);
  CHECK(y.ell() == 3);
  CHECK(y.bit(1, 1));
  CHECK(y.bit(1, 2));
  CHECK_FALSE(y.bit(1, 3));
  CHECK(y.to_string() == "110.011");
  CHECK(LiftedPoint::unpack(y.pack(), 2, 3) == y);
  CHECK(y.with_bit(2, 1, true).to_string() == "110.111");
  CHECK(error_of([&] { (void)y.bit(3, 1); }) == ErrorCode::OutOfRange);
}

TEST_CASE("majority_decode examples") {
  CHECK(majority_decode(pt("110.001")) == 1u);
  CHECK(majority_decode(pt("11100")) == 1u);
  CHECK(majority_decode(pt("000")) == 0u);
}

TEST_CASE("eval examples") {
  CHECK(eval(Dnf({pos({{1, 1}})}), pt("100")));
  CHECK_FALSE(eval(Dnf{}, pt("111")));
  CHECK(eval_term(Term{}, pt("000")));
  CHECK_FALSE(eval_term(Term({{1, 1}}, {{1, 2}}), pt("110")));
  CHECK(error_of([] { (void)eval_term(pos({{2, 1}}), pt("110")); }) == ErrorCode::OutOfRange);
}

TEST_CASE("mwidth examples") {
  const Dnf f({pos({{1, 1}, {1, 2}}), pos({{1, 1}})});
  CHECK(mwidth(f, pt("110")) == 1);
  CHECK(mwidth(f, pt("001")) == 0);
  const Dnf g({Term({}, {{1, 3}})});
  CHECK(eval(g, pt("110")));
  CHECK(mwidth(g, pt("110")) == 0);
}

TEST_CASE("mwidth is the least monotone size among satisfied terms") {
  CounterRng rng(5);
  for (int rep = 0; rep < 200; ++rep) {
    const Dnf f = random_dnf(rng, 2, 3);
    const CompiledDnf c(f, 2, 3);
    for (const auto& y : all_points(2, 3)) {
      int least = -1;
      for (const auto& t : f.terms()) {
        if (t.eval(y) && (least < 0 || t.monotone_size() < least)) least = t.monotone_size();
      }
      const int expected = least < 0 ? 0 : least;
      CHECK(mwidth(f, y) == expected);
      CHECK(c.mwidth(y.pack()) == expected);
      CHECK(c.eval(y.pack()) == eval(f, y));
    }
  }
}

TEST_CASE("truncate_monotone") {
  std::vector<VarId> seven;
  for (int i = 1; i <= 2; ++i) {
    for (int t = 1; t <= 5; ++t) {
      if (seven.size() < 7) seven.push_back({i, t});
    }
  }
  const Dnf f({pos({{1, 1}}), pos(seven)});
  const Dnf kept = truncate_monotone(f, 5, 5);
  REQUIRE(kept.size() == 1);
  CHECK(kept.terms()[0].monotone_size() == 1);

  const Dnf full({pos({{1, 1}, {1, 2}, {1, 3}})});
  CHECK(truncate_monotone(full, 3, 3).size() == 0);
  CHECK(truncate_monotone(full, 10, 3).size() == 0);

  const Dnf fine({pos({{1, 1}, {2, 2}}), Term({{1, 2}}, {{1, 3}})});
  CHECK(truncate_monotone(fine, 2, 3) == fine);
  CHECK(error_of([&] { truncate_monotone(fine, -1, 3); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("truncation only turns ones into zeros") {
  CounterRng rng(8);
  for (int rep = 0; rep < 100; ++rep) {
    const Dnf f = random_dnf(rng, 2, 3);
    const Dnf g = truncate_monotone(f, static_cast<int>(rng.below(4)), 3);
    for (const auto& y : all_points(2, 3)) {
      if (eval(g, y)) CHECK(eval(f, y));
    }
  }
}

TEST_CASE("project_term examples") {
  const Term t = pos({{1, 2}, {2, 1}});
  CHECK(project_term(t, {2, 3}) == pos({{1, 2}}));
  CHECK(project_term(t, {1, 2}).empty());
  const Term s({{1, 2}}, {{2, 3}});
  CHECK(project_term(s, {2, 3}) == s);
}

TEST_CASE("text form round trip") {
  const Dnf f = parse_dnf("+1.1 +1.2 | +2.3");
  CHECK(f.size() == 2);
  CHECK(serialize(f) == "+1.1 +1.2 | +2.3");
  CHECK(serialize(parse_dnf("+1.2   -2.1 +1.1|1")) == "+1.1 +1.2 -2.1 | 1");
  CHECK(serialize(Dnf{}) == "0");
  CHECK(parse_dnf("0").size() == 0);
  CHECK(error_of([] { parse_dnf("+1.1 -1.1"); }) == ErrorCode::ContradictoryTerm);
  CHECK(error_of([] { parse_dnf("+1.1 *2"); }) == ErrorCode::ParseError);
  CHECK(error_of([] { parse_dnf("+0.1"); }) == ErrorCode::ParseError);

  CounterRng rng(2);
  for (int rep = 0; rep < 100; ++rep) {
    const Dnf g = random_dnf(rng, 3, 5);
    CHECK(parse_dnf(serialize(g)) == g);
  }
}

TEST_CASE("decision trees") {
  const auto one = DecisionTree::leaf(true);
  const auto zero = DecisionTree::leaf(false);
  CHECK(dt_to_dnf(one).size() == 1);
  CHECK(dt_to_dnf(one).terms()[0].empty());
  CHECK(dt_to_dnf(zero).size() == 0);

  const auto t = DecisionTree::node({1, 2}, zero, DecisionTree::node({1, 1}, zero, one));
  CHECK(t.size() == 3);
  CHECK(t.depth() == 2);
  CHECK(t.to_string() == "(1.2? 0 : (1.1? 0 : 1))");
  CHECK(DecisionTree::parse(t.to_string()).to_string() == t.to_string());
  CHECK(error_of([&] { DecisionTree::node({1, 2}, t, one); }) == ErrorCode::InvalidArgument);

  const Dnf f = dt_to_dnf(t);
  CHECK(f.size() == 1);
  for (const auto& y : all_points(1, 3)) CHECK(eval(f, y) == t.eval(y));
}

TEST_CASE("junta_to_dnf of 3-bit majority matches the minimal form") {
  const std::vector<VarId> vars{{1, 1}, {1, 2}, {1, 3}};
  std::vector<bool> table(8);
  for (int r = 0; r < 8; ++r) table[static_cast<std::size_t>(r)] = std::popcount(static_cast<unsigned>(r)) >= 2;
  const Dnf rows = junta_to_dnf(vars, table);
  CHECK(rows.size() == 4);
  const auto s = SetCoverInstance::from_strings(1, std::vector<std::string>{"0"});
  const Dnf minimal = monotone_junta_form(s, 3, 1u);
  CHECK(minimal.size() == 3);
  for (const auto& y : all_points(1, 3)) CHECK(eval(rows, y) == eval(minimal, y));
}
