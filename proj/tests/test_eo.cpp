#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

#include "dieudonne/constructions.hpp"
#include "dieudonne/eo.hpp"
#include "dieudonne/kraft.hpp"

using namespace dieudonne;

namespace {

EOType staircase(std::size_t g, std::size_t offset) {
  EOType t;
  for (std::size_t i = 1; i <= g; ++i) t.nu.push_back(i - offset);
  return t;
}

}  // namespace

TEST_CASE("validation and enumeration") {
  CHECK(enumerate(5).size() == 32);
  CHECK_FALSE(validate(EOType{{0, 2}}));
  CHECK_FALSE(validate(EOType{{2}}));
  CHECK_FALSE(validate(EOType{{1, 0}}));
  CHECK(validate(EOType{}));
  const auto one = enumerate(1);
  REQUIRE(one.size() == 2);
  CHECK(one[0] == EOType{{0}});
  CHECK(one[1] == EOType{{1}});
  for (std::size_t g = 0; g <= 10; ++g) {
    const auto all = enumerate(g);
    CHECK(all.size() == (std::size_t{1} << g));
    for (std::size_t i = 0; i < all.size(); ++i) {
      CHECK(validate(all[i]));
      if (i) CHECK(all[i - 1] < all[i]);
    }
  }
  CHECK_THROWS_AS(parse_nu("0,2"), std::invalid_argument);
  CHECK(parse_nu("0;1,1") == EOType{{0, 1, 1}});
  CHECK(nu_string(EOType{{0, 1, 1}}) == "0;1;1");
}

TEST_CASE("f and a from nu") {
  for (std::size_t g = 1; g <= 8; ++g) {
    CHECK(f_of(staircase(g, 1)) == 0);
    CHECK(a_of(staircase(g, 1)) == 1);
    CHECK(f_of(staircase(g, 0)) == g);
    CHECK(a_of(staircase(g, 0)) == 0);
  }
  CHECK(f_of(EOType{{0, 1, 1, 2}}) == 0);
  CHECK(a_of(EOType{{0, 1, 1, 2}}) == 2);
  CHECK(f_of(EOType{{1, 1, 2}}) == 1);
}

TEST_CASE("final extension") {
  using V = std::vector<std::size_t>;
  CHECK(extend_final(EOType{{0, 1}}) == V{0, 0, 1, 1, 2});
  CHECK(extend_final(EOType{{1}}) == V{0, 1, 1});
  CHECK(extend_final(EOType{{0, 0}}) == V{0, 0, 0, 1, 2});
  for (std::size_t g = 1; g <= 7; ++g)
    for (const auto& t : enumerate(g)) {
      const auto psi = extend_final(t);
      CHECK(psi.front() == 0);
      CHECK(psi.back() == g);
      for (std::size_t i = 1; i <= 2 * g; ++i) CHECK(psi[i] - psi[i - 1] <= 1);
      for (std::size_t i = 1; i < g; ++i) CHECK(psi[2 * g - i] == psi[i] + g - i);
    }
}

TEST_CASE("canonical module examples") {
  CHECK(decompose(canonical_module(EOType{{0}})) == WordCensus{{CyclicWord("FV"), 1}});
  CHECK(decompose(canonical_module(EOType{{1}})) == WordCensus{{CyclicWord("F"), 1}, {CyclicWord("V"), 1}});
  CHECK(decompose(canonical_module(EOType{{0, 1}})) == WordCensus{{CyclicWord("FFVV"), 1}});
  CHECK(decompose(canonical_module(EOType{{0, 0, 1}})) ==
        WordCensus{{CyclicWord("FFVV"), 1}, {CyclicWord("FV"), 1}});
  for (unsigned p : {2u, 3u}) {
    CHECK(eo_type_of(i11(p)) == EOType{{0}});
    CHECK(eo_type_of(ord1(p)) == EOType{{1}});
    CHECK(eo_type_of(j_rs(3, 3, p)) == EOType{{0, 1, 2}});
  }
  const auto empty = canonical_module(EOType{});
  CHECK(empty.dim() == 0);
  CHECK(eo_type_of(empty) == EOType{});
}

TEST_CASE("canonical modules are BT1, polarized and round-trip (exhaustive g <= 6)") {
  for (unsigned p : {2u, 3u, 5u})
    for (std::size_t g = 1; g <= 6; ++g)
      for (const auto& t : enumerate(g)) {
        const auto m = canonical_module(t, p);
        CHECK(validate_bt1(m).empty());
        CHECK(check_polarization(m));
        CHECK(eo_type_of(m) == t);
        CHECK(p_rank(m) == f_of(t));
        CHECK(a_number(m) == a_of(t));
      }
}

TEST_CASE("round trip on sampled types up to g = 10") {
  std::mt19937_64 rng(29);
  for (std::size_t g = 7; g <= 10; ++g)
    for (int k = 0; k < 40; ++k) {
      const auto t = type_at(g, rng() % (std::uint64_t{1} << g));
      const auto m = canonical_module(t, 2);
      CHECK(eo_type_of(m) == t);
      CHECK(eo_type_of(dual(m)) == t);
    }
}

TEST_CASE("canonical filtration is a flag containing V(M) and ker F") {
  for (std::size_t g = 1; g <= 5; ++g)
    for (const auto& t : enumerate(g)) {
      const auto m = canonical_matrices(t);
      const auto chain = canonical_filtration(m);
      const auto has = [&](const Subspace& s) { return std::find(chain.begin(), chain.end(), s) != chain.end(); };
      CHECK(has(image(m.V())));
      CHECK(has(kernel(m.F())));
      for (const auto& s : chain) {
        CHECK(has(s.mapped(m.V())));
        CHECK(has(preimage(m.F(), s)));
      }
    }
}

TEST_CASE("type_at matches enumeration order") {
  for (std::size_t g = 1; g <= 8; ++g) {
    const auto all = enumerate(g);
    for (std::uint64_t i = 0; i < all.size(); ++i) CHECK(type_at(g, i) == all[i]);
  }
}
