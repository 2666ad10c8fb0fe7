#pragma once

// Explicit modules and the (g, f, a, s) existence logic.

#include <cstddef>
#include <vector>

#include "dieudonne/kraft.hpp"
#include "dieudonne/module.hpp"

namespace dieudonne {

/// E/E(F+V) on x, Fx with Vx = -Fx, form <x, Fx> = 1.
DieudonneModule i11(unsigned p);
/// Z/p + mu_p: F fixes e_1, V fixes e_2, hyperbolic form.
DieudonneModule ord1(unsigned p);

/// E/E(F^r + V^s) on x, Fx, ..., F^r x, Vx, ..., V^{s-1} x, with
/// V^s x = -F^r x. No form.
DieudonneModule j_rs(std::size_t r, std::size_t s, unsigned p);
/// j_rs(r, r) with a found form when r = s, otherwise J_{r,s} + dual(J_{r,s})
/// with the duality pairing between the blocks.
DieudonneModule h_rs(std::size_t r, std::size_t s, unsigned p);

struct EmbeddingWitness {
  std::vector<Elem> y;   // F^{r-1} x + V^{s-1} x
  std::vector<Elem> Fy;
  std::vector<Elem> Vy;
  bool valid = false;    // Fy = -Vy != 0 and y, Fy independent
};

/// Image of the generator of I_{1,1} inside j_rs(r, s, p); needs r, s >= 2.
EmbeddingWitness m11_embedding(std::size_t r, std::size_t s, unsigned p);

struct ProfileQuery {
  std::size_t g = 0;
  std::size_t f = 0;
  std::size_t a = 0;
  std::size_t s = 0;
};

bool feasible(const ProfileQuery& q) noexcept;

/// Words of a self-dual local-local piece with rank 2*g1, a-number a1 and no
/// FV component (2 <= g1, 1 <= a1 <= g1 - 1).
std::vector<CyclicWord> complement_words(std::size_t g1, std::size_t a1);

/// Ord1^f + I11^s + B with the orthogonal-sum form. Throws InfeasibleError
/// for an infeasible query; the result is checked against the query.
DieudonneModule realize(const ProfileQuery& q, unsigned p);

/// I11^s + canonical_module([0, 1, ..., g-s-1]). Throws InfeasibleError for
/// s = g - 1 and std::invalid_argument for s > g.
DieudonneModule supersingular_profile(std::size_t g, std::size_t s, unsigned p);

}  // namespace dieudonne
