#include "dieudonne/module.hpp"

#include <stdexcept>

#include "dieudonne/error.hpp"

namespace dieudonne {

DieudonneModule::DieudonneModule(Matrix F, Matrix V, std::optional<Matrix> form)
    : F_(std::move(F)), V_(std::move(V)), form_(std::move(form)) {
  const std::size_t n = F_.rows();
  if (F_.cols() != n || V_.rows() != n || V_.cols() != n)
    throw std::invalid_argument("F and V must be square of the same size");
  if (!(F_.field() == V_.field())) throw std::invalid_argument("F and V over different fields");
  if (form_) {
    if (form_->rows() != n || form_->cols() != n)
      throw std::invalid_argument("form must be square of the module dimension");
    if (!(form_->field() == F_.field())) throw std::invalid_argument("form over a different field");
  }
}

DieudonneModule DieudonneModule::zero(PrimeField field) {
  return {Matrix(field, 0, 0), Matrix(field, 0, 0), Matrix(field, 0, 0)};
}

const char* axiom_name(Axiom a) noexcept {
  switch (a) {
    case Axiom::FV_nonzero: return "FV != 0";
    case Axiom::VF_nonzero: return "VF != 0";
    case Axiom::KerF_ne_ImV: return "ker F != im V";
    case Axiom::KerV_ne_ImF: return "ker V != im F";
    case Axiom::FormNotAlternating: return "form not alternating";
    case Axiom::FormDegenerate: return "form degenerate";
    case Axiom::FormIncompatible: return "form incompatible with F and V";
  }
  return "unknown";
}

std::vector<Violation> validate_bt1(const DieudonneModule& m) {
  std::vector<Violation> out;
  auto add = [&](Axiom a) { out.push_back({a, axiom_name(a)}); };
  if (!(m.F() * m.V()).is_zero()) add(Axiom::FV_nonzero);
  if (!(m.V() * m.F()).is_zero()) add(Axiom::VF_nonzero);
  if (!(kernel(m.F()) == image(m.V()))) add(Axiom::KerF_ne_ImV);
  if (!(kernel(m.V()) == image(m.F()))) add(Axiom::KerV_ne_ImF);
  if (m.form()) {
    auto fv = form_violations(m, *m.form());
    out.insert(out.end(), fv.begin(), fv.end());
  }
  return out;
}

void require_bt1(const DieudonneModule& m) {
  auto v = validate_bt1(m);
  if (!v.empty()) throw ValidationError("not a BT1 Dieudonne module: " + v.front().message);
}

Matrix matrix_power(const Matrix& m, std::size_t e) {
  Matrix result = Matrix::identity(m.field(), m.rows());
  Matrix base = m;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

std::size_t etale_rank(const DieudonneModule& m) { return rank(matrix_power(m.F(), m.dim())); }

std::size_t multiplicative_rank(const DieudonneModule& m) {
  return rank(matrix_power(m.V(), m.dim()));
}

std::size_t p_rank(const DieudonneModule& m) {
  require_bt1(m);
  const std::size_t mult = multiplicative_rank(m);
  if (mult != etale_rank(m))
    throw ValidationError("etale and multiplicative ranks differ; module is not self-dual");
  return mult;
}

std::size_t a_number(const DieudonneModule& m) {
  require_bt1(m);
  return subspace_intersect(kernel(m.F()), kernel(m.V())).dim();
}

std::size_t unpolarized_ss_rank(const DieudonneModule& m) {
  require_bt1(m);
  return kernel(m.F() + m.V()).mapped(m.F()).dim();
}

bool InvariantBundle::consistent() const noexcept {
  if (f > g) return false;
  if (a > g - f) return false;
  if (f < g && a < 1) return false;
  return u <= a;
}

InvariantBundle invariants(const DieudonneModule& m) {
  InvariantBundle b;
  b.g = m.g();
  b.f = p_rank(m);
  b.a = a_number(m);
  b.u = unpolarized_ss_rank(m);
  return b;
}

DieudonneModule dual(const DieudonneModule& m) {
  std::optional<Matrix> form;
  if (m.form()) {
    form = inverse(*m.form());
    if (!form) throw ValidationError("cannot dualize a degenerate form");
  }
  return {m.V().transpose(), m.F().transpose(), std::move(form)};
}

DieudonneModule direct_sum(const DieudonneModule& a, const DieudonneModule& b) {
  if (!(a.field() == b.field())) throw std::invalid_argument("direct sum over different fields");
  std::optional<Matrix> form;
  if (a.form() && b.form()) form = block_diagonal(*a.form(), *b.form());
  return {block_diagonal(a.F(), b.F()), block_diagonal(a.V(), b.V()), std::move(form)};
}

bool is_stable(const DieudonneModule& m, const Subspace& s) {
  return contains(s, s.mapped(m.F())) && contains(s, s.mapped(m.V()));
}

DieudonneModule restrict_to(const DieudonneModule& m, const Subspace& s) {
  if (s.ambient_dim() != m.dim()) throw std::invalid_argument("subspace ambient mismatch");
  if (!is_stable(m, s)) throw std::invalid_argument("subspace is not F- and V-stable");
  const std::size_t k = s.dim();
  const Matrix& basis = s.basis();
  auto restrict_map = [&](const Matrix& op) {
    Matrix out(m.field(), k, k);
    for (std::size_t j = 0; j < k; ++j) {
      auto coords = s.coordinates(op.apply(basis.row(j)));
      for (std::size_t i = 0; i < k; ++i) out.set(i, j, coords[i]);
    }
    return out;
  };
  std::optional<Matrix> form;
  if (m.form()) form = basis * *m.form() * basis.transpose();
  return {restrict_map(m.F()), restrict_map(m.V()), std::move(form)};
}

EtaleMultSplit split_etale_mult(const DieudonneModule& m) {
  require_bt1(m);
  const std::size_t n = m.dim();
  const Matrix Fn = matrix_power(m.F(), n);
  const Matrix Vn = matrix_power(m.V(), n);
  const std::size_t f = rank(Vn);
  if (f != rank(Fn))
    throw ValidationError("etale and multiplicative ranks differ; module is not self-dual");
  const Subspace ll = kernel(vstack(Fn, Vn));
  return {f, restrict_to(m, ll)};
}

bool is_monomial(const Matrix& m) noexcept {
  for (std::size_t c = 0; c < m.cols(); ++c) {
    int nonzero = 0;
    for (std::size_t r = 0; r < m.rows(); ++r)
      if (m(r, c) != 0 && ++nonzero > 1) return false;
  }
  return true;
}

}  // namespace dieudonne
