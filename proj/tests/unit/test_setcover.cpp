#include <algorithm>
#include <bit>
#include <cmath>
#include <vector>

#include "monolift/setcover.hpp"
#include "support.hpp"

using namespace monolift;
using testing::error_of;

namespace {

SetCoverInstance inst(int n, std::vector<std::string> u) { return SetCoverInstance::from_strings(n, u); }

// Minimum cover by trying every subset; among minimum covers, the smallest
// sorted index list in lexicographic order.
CoverSolution brute_opt(const SetCoverInstance& s) {
  CoverSolution best{s.n() + 1, 0};
  std::vector<int> best_list;
  for (SetMask c = 0; c <= s.all_ones(); ++c) {
    bool ok = true;
    for (BitVector u : s.universe()) ok = ok && (~u & c & s.all_ones()) != 0;
    if (!ok) continue;
    const int size = std::popcount(c);
    const auto list = mask_to_indices(c);
    if (size < best.size || (size == best.size && list < best_list)) {
      best = {size, c};
      best_list = list;
    }
  }
  return best;
}

}  // namespace

TEST_CASE("from_vectors deduplicates and validates") {
  const auto s = inst(3, {"110", "101", "110"});
  CHECK(s.universe_size() == 2);
  CHECK(vector_to_string(s.universe()[0], 3) == "110");
  CHECK(vector_to_string(s.universe()[1], 3) == "101");
  CHECK(s.duplicates_removed() == 1);
  CHECK(s.vertex_count() == 5);

  CHECK(inst(2, {"01"}).universe_size() == 1);
  CHECK(error_of([] { inst(2, {"11"}); }) == ErrorCode::AllOnesElement);
  CHECK(error_of([] { inst(2, {}); }) == ErrorCode::EmptyUniverse);
  CHECK(error_of([] { inst(2, {"0"}); }) == ErrorCode::ParseError);
  const std::vector<BitVector> none_n{0u};
  CHECK(error_of([&] { SetCoverInstance::from_vectors(0, none_n); }) == ErrorCode::InvalidArgument);

  const auto again = SetCoverInstance::from_vectors(s.n(), s.universe());
  CHECK(again == s);
}

TEST_CASE("vector strings put coordinate 1 on the left") {
  CHECK(vector_from_string("100") == 1u);
  CHECK(vector_from_string("001") == 4u);
  CHECK(vector_to_string(6u, 3) == "011");
}

TEST_CASE("is_cover examples") {
  const auto s = inst(3, {"110", "101"});
  const std::vector<int> c23{2, 3};
  const std::vector<int> c3{3};
  CHECK(is_cover(s, indices_to_mask(c23, 3)));
  CHECK_FALSE(is_cover(s, 0));
  CHECK_FALSE(is_cover(s, indices_to_mask(c3, 3)));
}

TEST_CASE("opt_exact examples") {
  const auto a = opt_exact(inst(3, {"110", "101"}));
  CHECK(a.size == 2);
  CHECK(mask_to_indices(a.witness) == std::vector<int>{2, 3});
  const auto b = opt_exact(inst(2, {"01", "10"}));
  CHECK(b.size == 2);
  CHECK(mask_to_indices(b.witness) == std::vector<int>{1, 2});
  const auto c = opt_exact(inst(1, {"0"}));
  CHECK(c.size == 1);
  CHECK(c.witness == 1u);
}

TEST_CASE("opt_exact agrees with subset enumeration on random instances") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const int n = 2 + static_cast<int>(seed % 7);
    const int max_m = (1 << n) - 1;
    const int m = std::min(max_m, 1 + static_cast<int>(seed * 7 % 12));
    const double density = 0.2 + 0.1 * static_cast<double>(seed % 5);
    const auto s = random_instance(n, m, density, seed);
    const auto fast = opt_exact(s);
    const auto slow = brute_opt(s);
    CAPTURE(seed);
    CHECK(fast.size == slow.size);
    CHECK(fast.witness == slow.witness);
    CHECK(is_cover(s, fast.witness));

    const SetMask g = greedy_cover(s);
    CHECK(is_cover(s, g));
    CHECK(std::popcount(g) >= fast.size);
    CHECK(std::popcount(g) <= n);
  }
}

TEST_CASE("is_cover is monotone in the chosen sets") {
  const auto s = random_instance(5, 12, 0.3, 11);
  for (SetMask c = 0; c <= s.all_ones(); ++c) {
    if (!is_cover(s, c)) continue;
    for (int i = 0; i < 5; ++i) CHECK(is_cover(s, c | (1u << i)));
  }
}

TEST_CASE("greedy_cover examples") {
  CHECK(mask_to_indices(greedy_cover(inst(3, {"110", "101"}))) == std::vector<int>{2, 3});
  CHECK(greedy_cover(inst(1, {"0"})) == 1u);
  CHECK(greedy_cover(inst(2, {"01", "00"})) == 1u);
}

TEST_CASE("gap_params_lin") {
  const auto p = gap_params_lin(65536);
  CHECK(p.k == 1);
  CHECK(p.ell == 17);
  CHECK(p.k_prime >= p.k);
  CHECK(error_of([] { gap_params_lin(15); }) == ErrorCode::InvalidArgument);
  for (double n : {16.0, 1e3, 1e6, 1e12, 1e30}) {
    const auto q = gap_params_lin(n);
    CHECK(q.ell % 2 == 1);
    CHECK(q.ell >= 3);
    CHECK(q.k >= 1);
  }
  const auto c = gap_params_conjecture(1000, 2, 0.5, 0.25);
  CHECK(c.ell == 5);
  CHECK(c.source == GapSource::Conjecture);
  CHECK(c.k_prime == doctest::Approx(0.75 * 2 * std::log(1000.0)));
}

TEST_CASE("instance generators") {
  CHECK(random_instance(3, 2, 0.5, 7) == random_instance(3, 2, 0.5, 7));
  CHECK(error_of([] { random_instance(2, 4, 0.5, 1); }) == ErrorCode::Unsatisfiable);

  const auto p = planted_instance(4, 2, 1);
  CHECK(opt_exact(p.instance).size <= 2);
  CHECK(is_cover(p.instance, p.planted_cover));
  CHECK(std::popcount(p.planted_cover) == 2);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto r = planted_instance(5, 3, seed);
    CHECK(opt_exact(r.instance).size <= 3);
    CHECK(planted_instance(5, 3, seed).instance == r.instance);
  }
}
