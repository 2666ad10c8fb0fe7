#include "dieudonne/constructions.hpp"

#include <stdexcept>
#include <string>

#include "dieudonne/eo.hpp"
#include "dieudonne/error.hpp"

namespace dieudonne {

DieudonneModule i11(unsigned p) {
  const PrimeField k(p);
  Matrix F(k, {{0, 0}, {1, 0}});
  Matrix V(k, {{0, 0}, {-1, 0}});
  Matrix G(k, {{0, 1}, {-1, 0}});
  return {std::move(F), std::move(V), std::move(G)};
}

DieudonneModule ord1(unsigned p) {
  const PrimeField k(p);
  Matrix F(k, {{1, 0}, {0, 0}});
  Matrix V(k, {{0, 0}, {0, 1}});
  Matrix G(k, {{0, 1}, {-1, 0}});
  return {std::move(F), std::move(V), std::move(G)};
}

DieudonneModule j_rs(std::size_t r, std::size_t s, unsigned p) {
  if (r < 1 || s < 1) throw std::invalid_argument("j_rs needs r, s >= 1");
  const PrimeField k(p);
  const std::size_t n = r + s;
  // e_0 = x, e_i = F^i x (1 <= i <= r), e_{r+j} = V^j x (1 <= j <= s-1).
  auto v_index = [&](std::size_t j) { return r + j; };
  Matrix F(k, n, n), V(k, n, n);
  for (std::size_t i = 0; i < r; ++i) F.set(i + 1, i, 1);
  for (std::size_t j = 0; j + 1 < s; ++j) V.set(v_index(j + 1), j == 0 ? 0 : v_index(j), 1);
  const std::size_t last = s == 1 ? 0 : v_index(s - 1);
  V.set(r, last, -1);
  return {std::move(F), std::move(V)};
}

DieudonneModule h_rs(std::size_t r, std::size_t s, unsigned p) {
  const DieudonneModule j = j_rs(r, s, p);
  if (r == s) {
    if (auto form = find_polarization(j)) return j.with_form(*form);
    return polarize_word_form(j);
  }
  const PrimeField& k = j.field();
  const std::size_t n = j.dim();
  const DieudonneModule sum = direct_sum(j, dual(j));
  Matrix G(k, 2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    G.set(i, n + i, 1);
    G.set(n + i, i, -1);
  }
  return sum.with_form(std::move(G));
}

EmbeddingWitness m11_embedding(std::size_t r, std::size_t s, unsigned p) {
  if (r < 2 || s < 2) throw std::invalid_argument("m11_embedding needs r, s >= 2");
  const DieudonneModule j = j_rs(r, s, p);
  const PrimeField& k = j.field();
  EmbeddingWitness w;
  w.y.assign(j.dim(), 0);
  w.y[r - 1] = 1;
  w.y[r + s - 1] = 1;
  w.Fy = j.F().apply(w.y);
  w.Vy = j.V().apply(w.y);
  bool nonzero = false, opposite = true;
  for (std::size_t i = 0; i < j.dim(); ++i) {
    nonzero = nonzero || w.Fy[i] != 0;
    opposite = opposite && w.Fy[i] == k.neg(w.Vy[i]);
  }
  Matrix span(k, 2, j.dim());
  for (std::size_t i = 0; i < j.dim(); ++i) {
    span.set(0, i, w.y[i]);
    span.set(1, i, w.Fy[i]);
  }
  w.valid = nonzero && opposite && rank(span) == 2;
  return w;
}

bool feasible(const ProfileQuery& q) noexcept {
  if (q.f > q.g) return false;
  const std::size_t rest = q.g - q.f;
  if (q.a == rest) return q.s == q.a;
  return q.s < q.a && q.a < rest;
}

std::vector<CyclicWord> complement_words(std::size_t g1, std::size_t a1) {
  if (a1 < 1 || a1 + 1 > g1) throw std::invalid_argument("complement needs 1 <= a1 <= g1 - 1");
  const std::size_t m = g1 - a1 + 1;
  std::string w(m, 'F');
  if (a1 % 2 == 1) {
    const std::size_t j = (a1 - 1) / 2;
    for (std::size_t i = 0; i < j; ++i) w += "VF";
    w.append(m, 'V');
    for (std::size_t i = 0; i < j; ++i) w += "FV";
    return {CyclicWord(w)};
  }
  w += 'V';
  for (std::size_t i = 1; i < a1 / 2; ++i) w += "FV";
  const CyclicWord v(w);
  return {v, v.swapped()};
}

namespace {

DieudonneModule power(const DieudonneModule& m, std::size_t count) {
  DieudonneModule out = DieudonneModule::zero(m.field());
  for (std::size_t i = 0; i < count; ++i) out = direct_sum(out, m);
  return out;
}

}  // namespace

DieudonneModule realize(const ProfileQuery& q, unsigned p) {
  if (!feasible(q))
    throw InfeasibleError("profile (g,f,a,s) = (" + std::to_string(q.g) + "," + std::to_string(q.f) + "," +
                          std::to_string(q.a) + "," + std::to_string(q.s) + ") is not realizable");
  const PrimeField k(p);
  DieudonneModule out = direct_sum(power(ord1(p), q.f), power(i11(p), q.s));
  const std::size_t g1 = q.g - q.f - q.s;
  if (g1 > 0) {
    DieudonneModule b = DieudonneModule::zero(k);
    for (const auto& w : complement_words(g1, q.a - q.s)) b = direct_sum(b, word_module(w, p));
    out = direct_sum(out, polarize_word_form(b));
  }
  if (p_rank(out) != q.f || a_number(out) != q.a || superspecial_rank(out) != q.s || !check_polarization(out))
    throw std::logic_error("realized module does not match the requested profile");
  return out;
}

DieudonneModule supersingular_profile(std::size_t g, std::size_t s, unsigned p) {
  if (s > g) throw std::invalid_argument("superspecial rank cannot exceed g");
  if (s + 1 == g) throw InfeasibleError("superspecial rank g - 1 is impossible");
  EOType t;
  for (std::size_t i = 0; i < g - s; ++i) t.nu.push_back(i);
  DieudonneModule out = direct_sum(power(i11(p), s), canonical_module(t, p));
  if (superspecial_rank(out) != s) throw std::logic_error("supersingular profile has the wrong superspecial rank");
  return out;
}

}  // namespace dieudonne
