// Quasipolarizations: alternating forms with <Fx, y> = <x, Vy>, i.e.
// F^T G = G V for the Gram matrix G.

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <utility>

#include "dieudonne/error.hpp"
#include "dieudonne/module.hpp"

namespace dieudonne {

namespace {

// Unknowns are the entries G[a][b] with a < b; G[b][a] = -G[a][b] and the
// diagonal is zero.
class PairIndex {
 public:
  explicit PairIndex(std::size_t n) : n_(n) {
    pairs_.reserve(n * (n > 0 ? n - 1 : 0) / 2);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b) pairs_.emplace_back(a, b);
  }
  std::size_t count() const noexcept { return pairs_.size(); }
  std::size_t index(std::size_t a, std::size_t b) const noexcept {
    return a * n_ - a * (a + 1) / 2 + (b - a - 1);
  }
  const std::pair<std::size_t, std::size_t>& pair(std::size_t v) const noexcept { return pairs_[v]; }

 private:
  std::size_t n_;
  std::vector<std::pair<std::size_t, std::size_t>> pairs_;
};

struct EntryRef {
  bool is_var = false;
  std::size_t var = 0;
  bool negated = false;
};

EntryRef entry(const PairIndex& idx, std::size_t i, std::size_t j) {
  if (i == j) return {};
  if (i < j) return {true, idx.index(i, j), false};
  return {true, idx.index(j, i), true};
}

using SparseForm = std::vector<std::pair<std::size_t, Elem>>;

struct MonomialEntry {
  bool present = false;
  std::size_t row = 0;
  Elem coeff = 0;
};

std::vector<MonomialEntry> monomial_columns(const Matrix& m) {
  std::vector<MonomialEntry> out(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (std::size_t r = 0; r < m.rows(); ++r)
      if (m(r, c) != 0) out[c] = {true, r, m(r, c)};
  return out;
}

// Weighted union-find: x_v = ratio[v] * x_parent[v].
class RatioUnionFind {
 public:
  RatioUnionFind(const PrimeField& k, std::size_t n)
      : k_(k), parent_(n), ratio_(n, 1), forced_zero_(n, false) {
    for (std::size_t i = 0; i < n; ++i) parent_[i] = i;
  }

  std::pair<std::size_t, Elem> find(std::size_t v) {
    if (parent_[v] == v) return {v, 1};
    auto [root, r] = find(parent_[v]);
    ratio_[v] = k_.mul(ratio_[v], r);
    parent_[v] = root;
    return {root, ratio_[v]};
  }

  void force_zero(std::size_t v) { forced_zero_[find(v).first] = true; }

  // Impose x_a = q * x_b.
  void relate(std::size_t a, std::size_t b, Elem q) {
    auto [ra, r1] = find(a);
    auto [rb, r2] = find(b);
    if (ra == rb) {
      if (r1 != k_.mul(q, r2)) forced_zero_[ra] = true;
      return;
    }
    parent_[ra] = rb;
    ratio_[ra] = k_.mul(k_.mul(q, r2), k_.inv(r1));
    forced_zero_[rb] = forced_zero_[rb] || forced_zero_[ra];
  }

  bool zero_root(std::size_t root) const { return forced_zero_[root]; }

 private:
  const PrimeField& k_;
  std::vector<std::size_t> parent_;
  std::vector<Elem> ratio_;
  std::vector<bool> forced_zero_;
};

// With F and V monomial every equation of F^T G = G V involves at most two
// unknowns, so the solution space is a union of independent ratio classes.
std::vector<SparseForm> monomial_solutions(const DieudonneModule& m, const PairIndex& idx) {
  const PrimeField& k = m.field();
  const std::size_t n = m.dim();
  const auto fcols = monomial_columns(m.F());
  const auto vcols = monomial_columns(m.V());
  RatioUnionFind uf(k, idx.count());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      // (F^T G)[i][j] = c * G[f(i)][j];  (G V)[i][j] = d * G[i][v(j)].
      EntryRef lhs, rhs;
      Elem alpha = 0, beta = 0;
      if (fcols[i].present) {
        lhs = entry(idx, fcols[i].row, j);
        alpha = lhs.negated ? k.neg(fcols[i].coeff) : fcols[i].coeff;
      }
      if (vcols[j].present) {
        rhs = entry(idx, i, vcols[j].row);
        beta = rhs.negated ? k.neg(vcols[j].coeff) : vcols[j].coeff;
      }
      if (lhs.is_var && rhs.is_var) {
        uf.relate(lhs.var, rhs.var, k.mul(beta, k.inv(alpha)));
      } else if (lhs.is_var) {
        uf.force_zero(lhs.var);
      } else if (rhs.is_var) {
        uf.force_zero(rhs.var);
      }
    }
  }
  std::vector<std::size_t> slot(idx.count(), SIZE_MAX);
  std::vector<SparseForm> out;
  for (std::size_t v = 0; v < idx.count(); ++v) {
    auto [root, r] = uf.find(v);
    if (uf.zero_root(root)) continue;
    if (slot[root] == SIZE_MAX) {
      slot[root] = out.size();
      out.emplace_back();
    }
    out[slot[root]].emplace_back(v, r);
  }
  return out;
}

std::vector<SparseForm> dense_solutions(const DieudonneModule& m, const PairIndex& idx) {
  const PrimeField& k = m.field();
  const std::size_t n = m.dim();
  Matrix constraints(k, n * n, idx.count());
  auto accumulate = [&](std::size_t row, const EntryRef& e, Elem coeff) {
    if (!e.is_var) return;
    const Elem c = e.negated ? k.neg(coeff) : coeff;
    constraints.set(row, e.var, k.add(constraints(row, e.var), c));
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t row = i * n + j;
      for (std::size_t t = 0; t < n; ++t) {
        if (m.F()(t, i)) accumulate(row, entry(idx, t, j), m.F()(t, i));
        if (m.V()(t, j)) accumulate(row, entry(idx, i, t), k.neg(m.V()(t, j)));
      }
    }
  }
  const Subspace sol = solve_linear_system(constraints);
  std::vector<SparseForm> out(sol.dim());
  for (std::size_t b = 0; b < sol.dim(); ++b)
    for (std::size_t v = 0; v < idx.count(); ++v)
      if (sol.basis()(b, v)) out[b].emplace_back(v, sol.basis()(b, v));
  return out;
}

std::vector<SparseForm> solution_family(const DieudonneModule& m, const PairIndex& idx) {
  if (is_monomial(m.F()) && is_monomial(m.V())) return monomial_solutions(m, idx);
  return dense_solutions(m, idx);
}

Matrix assemble(const DieudonneModule& m, const PairIndex& idx, const std::vector<SparseForm>& family,
                std::span<const Elem> coeffs) {
  const PrimeField& k = m.field();
  Matrix g(k, m.dim(), m.dim());
  for (std::size_t b = 0; b < family.size(); ++b) {
    if (coeffs[b] == 0) continue;
    for (const auto& [v, val] : family[b]) {
      const auto& [r, c] = idx.pair(v);
      const Elem x = k.add(g(r, c), k.mul(coeffs[b], val));
      g.set(r, c, x);
      g.set(c, r, k.neg(x));
    }
  }
  return g;
}

constexpr std::size_t kLexicographicBudget = 512;
constexpr std::size_t kRandomBudget = 4096;

}  // namespace

std::vector<Violation> form_violations(const DieudonneModule& m, const Matrix& form) {
  std::vector<Violation> out;
  auto add = [&](Axiom a) { out.push_back({a, axiom_name(a)}); };
  const PrimeField& k = m.field();
  const std::size_t n = m.dim();
  if (form.rows() != n || form.cols() != n) {
    add(Axiom::FormIncompatible);
    return out;
  }
  bool alternating = true;
  for (std::size_t i = 0; i < n && alternating; ++i) {
    if (form(i, i) != 0) alternating = false;
    for (std::size_t j = i + 1; j < n && alternating; ++j)
      if (form(j, i) != k.neg(form(i, j))) alternating = false;
  }
  if (!alternating) add(Axiom::FormNotAlternating);
  if (rank(form) != n) add(Axiom::FormDegenerate);
  if (!(m.F().transpose() * form == form * m.V())) add(Axiom::FormIncompatible);
  return out;
}

bool check_polarization(const DieudonneModule& m) {
  return m.form() && form_violations(m, *m.form()).empty();
}

std::vector<Matrix> compatible_forms(const DieudonneModule& m) {
  const PairIndex idx(m.dim());
  const auto family = solution_family(m, idx);
  std::vector<Matrix> out;
  std::vector<Elem> unit(family.size(), 0);
  for (std::size_t b = 0; b < family.size(); ++b) {
    unit[b] = 1;
    out.push_back(assemble(m, idx, family, unit));
    unit[b] = 0;
  }
  return out;
}

std::optional<Matrix> find_polarization(const DieudonneModule& m) {
  const std::size_t n = m.dim();
  if (n == 0) return Matrix(m.field(), 0, 0);
  if (n % 2 == 1) return std::nullopt;
  const PairIndex idx(n);
  const auto family = solution_family(m, idx);
  const std::size_t d = family.size();
  if (d == 0) return std::nullopt;
  const unsigned p = m.field().p();

  auto try_coeffs = [&](std::span<const Elem> coeffs) -> std::optional<Matrix> {
    Matrix g = assemble(m, idx, family, coeffs);
    if (rank(g) == n) return g;
    return std::nullopt;
  };

  // Lexicographic sweep, last coefficient varying fastest.
  std::vector<Elem> coeffs(d, 0);
  for (std::size_t step = 1; step < kLexicographicBudget; ++step) {
    std::size_t pos = d;
    while (pos > 0) {
      --pos;
      if (++coeffs[pos] < p) break;
      coeffs[pos] = 0;
      if (pos == 0) return std::nullopt;  // exhausted p^d - 1 nonzero vectors
    }
    if (auto g = try_coeffs(coeffs)) return g;
  }

  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
  std::uniform_int_distribution<unsigned> digit(0, p - 1);
  std::fill(coeffs.begin(), coeffs.end(), Elem{1});
  if (auto g = try_coeffs(coeffs)) return g;
  for (std::size_t attempt = 0; attempt < kRandomBudget; ++attempt) {
    for (auto& c : coeffs) c = static_cast<Elem>(digit(rng));
    if (auto g = try_coeffs(coeffs)) return g;
  }
  return std::nullopt;
}

Subspace orthogonal_complement(const DieudonneModule& m, const Subspace& n) {
  if (!m.form()) throw std::invalid_argument("orthogonal complement needs a form");
  if (n.ambient_dim() != m.dim()) throw std::invalid_argument("subspace ambient mismatch");
  if (!is_stable(m, n)) throw std::invalid_argument("subspace is not F- and V-stable");
  const Matrix& g = *m.form();
  const Matrix restricted = n.basis() * g * n.basis().transpose();
  if (rank(restricted) != n.dim())
    throw ValidationError("form restricted to the subspace is degenerate");
  const Subspace p = kernel(n.basis() * g);
  if (!is_stable(m, p)) throw ValidationError("orthogonal complement is not F- and V-stable");
  return p;
}

}  // namespace dieudonne
