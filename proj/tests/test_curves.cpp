#include <doctest.h>

#include <numeric>
#include <random>
#include <stdexcept>

#include "dieudonne/curves.hpp"
#include "dieudonne/kraft.hpp"
#include "oracles.hpp"

using namespace dieudonne;

TEST_CASE("pole parsing") {
  CHECK(parse_poles("3,9").d == std::vector<std::size_t>{3, 9});
  CHECK_THROWS_AS(parse_poles("3,4"), std::invalid_argument);
  CHECK_THROWS_AS(parse_poles("3,"), std::invalid_argument);
  CHECK_THROWS_AS(parse_poles(""), std::invalid_argument);
  CHECK_THROWS_AS(hyp2_analyze({{2}}), std::invalid_argument);
}

TEST_CASE("single-pole hyperelliptic curves") {
  CHECK(hyp2_analyze({{15}}).s == 1);  // g = 7
  CHECK(hyp2_analyze({{13}}).s == 0);  // g = 6
  for (std::size_t g = 1; g <= 30; ++g) {
    const auto rep = hyp2_analyze({{2 * g + 1}});
    CHECK(rep.g == g);
    CHECK(rep.f == 0);
    CHECK(rep.s == (g % 3 == 1 ? 1u : 0u));
    CHECK(superspecial_rank(hyp2_module_oracle({{2 * g + 1}})) == rep.s);
  }
}

TEST_CASE("multi-pole example") {
  const auto rep = hyp2_analyze({{3, 9}});
  CHECK(rep.r == 1);
  CHECK(rep.c == std::vector<std::size_t>{1, 4});
  CHECK(rep.g == 6);
  CHECK(rep.f == 1);
  CHECK(rep.s == 2);
  CHECK(rep.s_bound == 2);
  CHECK(rep.e_bound <= 3);
  const auto c = decompose(hyp2_module_oracle({{3, 9}}));
  CHECK(c.at(CyclicWord("FV")) == 2);
  const auto ord = hyp2_analyze({{1, 1, 1}});
  CHECK(ord.g == 2);
  CHECK(ord.s == 0);
  CHECK(census_invariants(decompose(hyp2_module_oracle({{1, 1, 1}}))) == CensusInvariants{2, 2, 0, 0});
}

TEST_CASE("random divisors: closed form matches the oracle (property)") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    PoleDivisor d;
    std::size_t g = 0;
    const std::size_t poles = 1 + rng() % 5;
    for (std::size_t j = 0; j < poles; ++j) {
      const std::size_t c = rng() % 7;
      d.d.push_back(2 * c + 1);
      g += c + (j ? 1 : 0);
    }
    const auto rep = hyp2_analyze(d);
    const auto m = hyp2_module_oracle(d);
    // Degree identity 2g + 2 = sum (d_j + 1).
    std::size_t total = 0;
    for (auto x : d.d) total += x + 1;
    CHECK(2 * rep.g + 2 == total);
    CHECK(rep.g == g);
    CHECK(m.dim() == 2 * rep.g);
    CHECK(p_rank(m) == rep.f);
    CHECK(superspecial_rank(m) == rep.s);
    CHECK(rep.s <= rep.s_bound);
    CHECK(rep.e_bound <= 1 + 2 * rep.r);
  }
}

TEST_CASE("rank-0 hyperelliptic type") {
  CHECK(hyp2_rank0_type(4) == EOType{{0, 1, 1, 2}});
  CHECK(hyp2_rank0_type(1) == EOType{{0}});
  CHECK(hyp2_rank0_type(5) == EOType{{0, 1, 1, 2, 2}});
  CHECK(a_of(hyp2_rank0_type(5)) == 3);
}

TEST_CASE("Hermitian examples") {
  const auto a = hermitian_analyze(3, 1);
  CHECK(a.q == 3);
  CHECK(a.g == 3);
  CHECK(a.a == 3);
  CHECK(a.s == 3);
  CHECK(a.superspecial);
  CHECK(a.ekedahl_ok);
  const auto b = hermitian_analyze(2, 2);
  CHECK(b.g == 6);
  CHECK(b.a == 3);
  CHECK(b.s == 0);
  CHECK(b.e_bound == 0);
  const auto c = hermitian_analyze(2, 3);
  CHECK(c.orbits == std::vector<std::vector<std::uint64_t>>{{1, 2, 4, 8, 7, 5}, {3, 6}});
  CHECK(c.s == 1);
  CHECK(c.points_q2 == 513);
  CHECK_THROWS_AS(hermitian_analyze(4, 1), std::invalid_argument);
  CHECK_THROWS_AS(hermitian_analyze(97, 12), std::overflow_error);
}

TEST_CASE("Hermitian orbit structure for n <= 20") {
  for (unsigned n = 1; n <= 20; ++n) {
    const auto rep = hermitian_analyze(2, n);
    std::uint64_t sum = 0;
    bool pair = false;
    for (const auto& o : rep.orbits) {
      sum += o.size();
      pair = pair || o.size() == 2;
    }
    CHECK(sum == oracle::ipow(2, n));
    const bool three = (oracle::ipow(2, n) + 1) % 3 == 0;
    CHECK(three == (n % 2 == 1));
    CHECK(pair == three);
  }
  for (unsigned p : {2u, 3u, 5u, 7u}) {
    const auto rep = hermitian_analyze(p, 1);
    CHECK(rep.s == rep.g);
    CHECK(ekedahl_bound(p, rep.g));
    CHECK_FALSE(ekedahl_bound(p, rep.g + 1));
  }
}

TEST_CASE("Ekedahl bound") {
  CHECK(ekedahl_bound(2, 1));
  CHECK_FALSE(ekedahl_bound(2, 2));
  CHECK(ekedahl_bound(5, 10));
  CHECK_FALSE(ekedahl_bound(3, 4));
}
