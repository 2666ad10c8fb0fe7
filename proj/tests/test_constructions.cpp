#include <doctest.h>

#include <set>
#include <tuple>

#include "dieudonne/constructions.hpp"
#include "dieudonne/eo.hpp"
#include "dieudonne/error.hpp"

using namespace dieudonne;

TEST_CASE("fixtures") {
  const PrimeField k2(2);
  const auto a = i11(2);
  CHECK(a.F() == Matrix(k2, {{0, 0}, {1, 0}}));
  CHECK(a.V() == Matrix(k2, {{0, 0}, {1, 0}}));
  CHECK(*a.form() == Matrix(k2, {{0, 1}, {1, 0}}));
  const auto b = i11(3);
  CHECK(b.V()(1, 0) == 2);
  CHECK(b.F()(1, 0) == 1);
  const auto o = ord1(2);
  CHECK(o.F() == Matrix(k2, {{1, 0}, {0, 0}}));
  CHECK(o.V() == Matrix(k2, {{0, 0}, {0, 1}}));
  for (unsigned p : {2u, 3u, 5u, 97u}) {
    CHECK(check_polarization(i11(p)));
    CHECK(check_polarization(ord1(p)));
  }
}

TEST_CASE("J_{r,s}") {
  for (unsigned p : {2u, 3u, 5u}) {
    CHECK(j_rs(1, 1, p) == i11(p).without_form());
    for (std::size_t r = 1; r <= 5; ++r)
      for (std::size_t s = 1; s <= 5; ++s) {
        const auto j = j_rs(r, s, p);
        CHECK(j.dim() == r + s);
        CHECK(validate_bt1(j).empty());
        CHECK(a_number(j) == 1);
        CHECK(p_rank(j) == 0);
      }
  }
  CHECK(eo_type_of(j_rs(3, 3, 2)) == EOType{{0, 1, 2}});
  CHECK(unpolarized_ss_rank(j_rs(2, 2, 2)) == 1);
  CHECK_THROWS_AS(j_rs(0, 2, 2), std::invalid_argument);
}

TEST_CASE("H_{r,s}") {
  for (unsigned p : {2u, 3u}) {
    const auto h11 = h_rs(1, 1, p);
    CHECK(check_polarization(h11));
    CHECK(superspecial_rank(h11) == 1);
    for (std::size_t r = 2; r <= 5; ++r)
      for (std::size_t s = 2; s <= 5; ++s) {
        const auto h = h_rs(r, s, p);
        CHECK(check_polarization(h));
        CHECK(superspecial_rank(h) == 0);
      }
  }
  const auto h22 = h_rs(2, 2, 2);
  CHECK(unpolarized_ss_rank(h22) == 1);
  CHECK(superspecial_rank(h22) == 0);
}

TEST_CASE("M11 embedding witness") {
  const auto w = m11_embedding(2, 2, 2);
  CHECK(w.valid);
  CHECK(w.y == std::vector<Elem>{0, 1, 0, 1});  // Fx + Vx
  CHECK(w.Fy == std::vector<Elem>{0, 0, 1, 0});  // F^2 x
  CHECK(m11_embedding(3, 2, 2).y == std::vector<Elem>{0, 0, 1, 0, 1});  // F^2 x + V x
  const auto w3 = m11_embedding(2, 2, 3);
  CHECK(w3.valid);
  CHECK(w3.Vy == std::vector<Elem>{0, 0, 2, 0});
  for (unsigned p : {2u, 3u, 5u})
    for (std::size_t r = 2; r <= 6; ++r)
      for (std::size_t s = 2; s <= 6; ++s) CHECK(m11_embedding(r, s, p).valid);
  CHECK_THROWS_AS(m11_embedding(1, 2, 2), std::invalid_argument);
}

TEST_CASE("feasibility examples") {
  CHECK(feasible({4, 1, 2, 1}));
  CHECK(feasible({4, 1, 3, 3}));
  CHECK_FALSE(feasible({4, 1, 3, 2}));
  CHECK(feasible({4, 4, 0, 0}));
  CHECK_FALSE(feasible({4, 1, 2, 2}));
  CHECK_FALSE(feasible({4, 5, 0, 0}));
  CHECK_FALSE(feasible({3, 0, 0, 0}));
}

TEST_CASE("realize examples") {
  const auto m = realize({4, 1, 2, 1}, 2);
  CHECK(decompose(m) == WordCensus{{CyclicWord("F"), 1}, {CyclicWord("V"), 1}, {CyclicWord("FV"), 1},
                                   {CyclicWord("FFVV"), 1}});
  const auto ss = realize({3, 0, 3, 3}, 3);
  CHECK(ss == direct_sum(direct_sum(i11(3), i11(3)), i11(3)));
  const auto c = realize({5, 0, 2, 0}, 2);
  CHECK(census_invariants(decompose(c)) == CensusInvariants{5, 0, 2, 0});
  CHECK(check_polarization(c));
  CHECK_THROWS_AS(realize({4, 1, 3, 2}, 2), InfeasibleError);
}

TEST_CASE("complement words") {
  for (std::size_t g1 = 2; g1 <= 14; ++g1)
    for (std::size_t a1 = 1; a1 < g1; ++a1) {
      WordCensus c;
      for (const auto& w : complement_words(g1, a1)) ++c[w];
      const auto inv = census_invariants(c);
      CHECK(inv.g == g1);
      CHECK(inv.f == 0);
      CHECK(inv.a == a1);
      CHECK(inv.s == 0);
      for (const auto& [w, mult] : c) CHECK(c.count(w.swapped()) == 1);
    }
  CHECK(complement_words(2, 1) == std::vector<CyclicWord>{symmetric_word(2, 1)});
  CHECK(complement_words(5, 3) == std::vector<CyclicWord>{CyclicWord("FFFVFVVVFV")});
  CHECK(complement_words(5, 2) == (std::vector<CyclicWord>{CyclicWord("FFFFV"), CyclicWord("FVVVV")}));
}

TEST_CASE("realize is exact on every feasible profile, g <= 7") {
  for (unsigned p : {2u, 3u})
    for (std::size_t g = 0; g <= 7; ++g)
      for (std::size_t f = 0; f <= g; ++f)
        for (std::size_t a = 0; a + f <= g; ++a)
          for (std::size_t s = 0; s <= a; ++s) {
            const ProfileQuery q{g, f, a, s};
            if (!feasible(q)) {
              CHECK_THROWS_AS(realize(q, p), InfeasibleError);
              continue;
            }
            const auto m = realize(q, p);
            CHECK(m.dim() == 2 * g);
            CHECK(check_polarization(m));
            CHECK(p_rank(m) == f);
            CHECK(a_number(m) == a);
            CHECK(superspecial_rank(m) == s);
          }
}

TEST_CASE("infeasible profiles are attained by no EO type, feasible ones are (g <= 7)") {
  for (std::size_t g = 1; g <= 7; ++g) {
    std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;
    for (const auto& t : enumerate(g)) {
      const auto inv = census_invariants(decompose(canonical_matrices(t)));
      seen.insert({inv.f, inv.a, inv.s});
      CHECK(feasible({g, inv.f, inv.a, inv.s}));
    }
    for (std::size_t f = 0; f <= g; ++f)
      for (std::size_t a = 0; a + f <= g; ++a)
        for (std::size_t s = 0; s <= a; ++s) CHECK(feasible({g, f, a, s}) == (seen.count({f, a, s}) == 1));
  }
}

TEST_CASE("supersingular profile") {
  for (std::size_t g = 1; g <= 8; ++g) {
    const auto all = supersingular_profile(g, g, 2);
    CHECK(all == [&] {
      DieudonneModule x = DieudonneModule::zero(PrimeField(2));
      for (std::size_t i = 0; i < g; ++i) x = direct_sum(x, i11(2));
      return x;
    }());
    for (std::size_t s = 0; s + 2 <= g; ++s) {
      const auto m = supersingular_profile(g, s, 2);
      CHECK(superspecial_rank(m) == s);
      CHECK(a_number(m) == s + 1);
      CHECK(p_rank(m) == 0);
      CHECK(check_polarization(m));
    }
    if (g >= 1) CHECK_THROWS_AS(supersingular_profile(g, g - 1, 2), InfeasibleError);
  }
  CHECK(decompose(supersingular_profile(3, 1, 2)) == WordCensus{{CyclicWord("FFVV"), 1}, {CyclicWord("FV"), 1}});
  CHECK_THROWS_AS(supersingular_profile(4, 3, 2), InfeasibleError);
  CHECK_THROWS_AS(supersingular_profile(4, 5, 2), std::invalid_argument);
}
