#pragma once

// Mod-p Dieudonne modules of BT1 group schemes.
//
// A module is a vector space of dimension n (= 2g for the self-dual objects
// this library is about) with F and V given as n x n matrices in the
// column-action convention, and an optional Gram matrix of an alternating
// form. Structure constants live in F_p and the Frobenius twist acts
// trivially on them, so F and V are handled as linear maps.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dieudonne/ffmat.hpp"

namespace dieudonne {

class DieudonneModule {
 public:
  DieudonneModule(Matrix F, Matrix V, std::optional<Matrix> form = std::nullopt);

  /// The zero module, identity for direct_sum.
  static DieudonneModule zero(PrimeField field);

  const PrimeField& field() const noexcept { return F_.field(); }
  std::size_t dim() const noexcept { return F_.rows(); }
  /// Half-dimension; only meaningful when dim() is even.
  std::size_t g() const noexcept { return dim() / 2; }

  const Matrix& F() const noexcept { return F_; }
  const Matrix& V() const noexcept { return V_; }
  const std::optional<Matrix>& form() const noexcept { return form_; }

  DieudonneModule with_form(Matrix form) const { return {F_, V_, std::move(form)}; }
  DieudonneModule without_form() const { return {F_, V_, std::nullopt}; }

  friend bool operator==(const DieudonneModule&, const DieudonneModule&) = default;

 private:
  Matrix F_;
  Matrix V_;
  std::optional<Matrix> form_;
};

enum class Axiom {
  FV_nonzero,
  VF_nonzero,
  KerF_ne_ImV,
  KerV_ne_ImF,
  FormNotAlternating,
  FormDegenerate,
  FormIncompatible,
};

struct Violation {
  Axiom axiom;
  std::string message;
};

const char* axiom_name(Axiom a) noexcept;

/// Empty iff the module satisfies FV = VF = 0, ker F = im V, ker V = im F
/// and, when a form is attached, the polarization conditions.
std::vector<Violation> validate_bt1(const DieudonneModule& m);
/// Throws ValidationError carrying the first violation.
void require_bt1(const DieudonneModule& m);

/// dim of the stable image of F (etale part).
std::size_t etale_rank(const DieudonneModule& m);
/// dim of the stable image of V (multiplicative part).
std::size_t multiplicative_rank(const DieudonneModule& m);

std::size_t p_rank(const DieudonneModule& m);
std::size_t a_number(const DieudonneModule& m);
/// Largest u with an embedding of M_{1,1}^u, computed as dim F(ker(F+V)).
std::size_t unpolarized_ss_rank(const DieudonneModule& m);

struct InvariantBundle {
  std::size_t g = 0;
  std::size_t f = 0;
  std::size_t a = 0;
  std::size_t u = 0;

  /// 0 <= f <= g, a <= g - f, f < g implies a >= 1, u <= a.
  bool consistent() const noexcept;
  friend bool operator==(const InvariantBundle&, const InvariantBundle&) = default;
};

InvariantBundle invariants(const DieudonneModule& m);

/// Cartier dual: F' = V^T, V' = F^T, form' = form^{-1}.
DieudonneModule dual(const DieudonneModule& m);
/// Block-diagonal sum; the form is the orthogonal sum when both are present.
DieudonneModule direct_sum(const DieudonneModule& a, const DieudonneModule& b);
/// Restriction to an F- and V-stable subspace, in its echelon basis.
DieudonneModule restrict_to(const DieudonneModule& m, const Subspace& s);

bool is_stable(const DieudonneModule& m, const Subspace& s);

/// Violations of the polarization conditions for a given Gram matrix:
/// antisymmetric with zero diagonal, nondegenerate, F^T G = G V.
std::vector<Violation> form_violations(const DieudonneModule& m, const Matrix& form);
bool check_polarization(const DieudonneModule& m);

/// Basis of the space of alternating forms compatible with F and V.
/// Each entry is a Gram matrix.
std::vector<Matrix> compatible_forms(const DieudonneModule& m);
/// A nondegenerate compatible form, if one is found. The search first walks
/// coefficient vectors in lexicographic order, then falls back to a
/// fixed-seed pseudo-random sweep, so the result is deterministic.
std::optional<Matrix> find_polarization(const DieudonneModule& m);

/// Orthogonal complement of an F-, V-stable subspace on which the form is
/// nondegenerate. Throws ValidationError if the restriction is degenerate.
Subspace orthogonal_complement(const DieudonneModule& m, const Subspace& n);

struct EtaleMultSplit {
  std::size_t f;
  DieudonneModule locloc;
};

/// Splits off (Z/p + mu_p)^f; locloc is ker F^n cap ker V^n.
EtaleMultSplit split_etale_mult(const DieudonneModule& m);

Matrix matrix_power(const Matrix& m, std::size_t e);

/// Each column has at most one nonzero entry.
bool is_monomial(const Matrix& m) noexcept;

}  // namespace dieudonne
