#pragma once

// Dense exact linear algebra over a small prime field F_p (2 <= p <= 97).
//
// Matrices act on column vectors: column j of a matrix is the image of the
// j-th basis vector. Subspaces are stored as a basis in reduced row-echelon
// form, so two subspaces are equal iff their bases are identical.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace dieudonne {

using Elem = std::uint8_t;

class PrimeField {
 public:
  explicit PrimeField(unsigned p);

  unsigned p() const noexcept { return p_; }

  Elem reduce(long long v) const noexcept {
    long long r = v % static_cast<long long>(p_);
    return static_cast<Elem>(r < 0 ? r + p_ : r);
  }
  Elem add(Elem a, Elem b) const noexcept {
    unsigned s = unsigned(a) + b;
    return static_cast<Elem>(s >= p_ ? s - p_ : s);
  }
  Elem sub(Elem a, Elem b) const noexcept {
    return static_cast<Elem>(a >= b ? a - b : a + p_ - b);
  }
  Elem neg(Elem a) const noexcept { return static_cast<Elem>(a == 0 ? 0 : p_ - a); }
  Elem mul(Elem a, Elem b) const noexcept {
    return static_cast<Elem>((unsigned(a) * b) % p_);
  }
  /// Multiplicative inverse; a must be nonzero.
  Elem inv(Elem a) const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  unsigned p_;
};

bool is_prime(unsigned n) noexcept;

class Matrix {
 public:
  Matrix(PrimeField field, std::size_t rows, std::size_t cols);
  Matrix(PrimeField field, std::initializer_list<std::initializer_list<long long>> rows);
  Matrix(PrimeField field, const std::vector<std::vector<long long>>& rows, std::size_t cols);

  static Matrix identity(PrimeField field, std::size_t n);

  const PrimeField& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Elem operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, long long v) noexcept {
    data_[r * cols_ + c] = field_.reduce(v);
  }

  std::span<const Elem> row(std::size_t r) const noexcept { return {data_.data() + r * cols_, cols_}; }
  std::span<Elem> row(std::size_t r) noexcept { return {data_.data() + r * cols_, cols_}; }
  std::vector<Elem> column(std::size_t c) const;

  Matrix transpose() const;
  /// m * v for a column vector v.
  std::vector<Elem> apply(std::span<const Elem> v) const;
  Matrix scaled(Elem s) const;
  bool is_zero() const noexcept;

  /// Rows [first, first+count) as a new matrix.
  Matrix row_block(std::size_t first, std::size_t count) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  PrimeField field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Elem> data_;
};

/// Brings m into reduced row-echelon form in place; returns the pivot columns.
/// Uses a bit-packed elimination when p = 2.
std::vector<std::size_t> row_reduce(Matrix& m);

std::size_t rank(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);

Matrix block_diagonal(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& top, const Matrix& bottom);

class Subspace {
 public:
  /// Span of the rows of `generators` (any shape with cols = ambient).
  static Subspace span(const Matrix& generators);
  static Subspace zero(PrimeField field, std::size_t ambient);
  static Subspace full(PrimeField field, std::size_t ambient);
  static Subspace span_of_units(PrimeField field, std::size_t ambient,
                                std::span<const std::size_t> indices);

  const PrimeField& field() const noexcept { return basis_.field(); }
  std::size_t ambient_dim() const noexcept { return basis_.cols(); }
  std::size_t dim() const noexcept { return basis_.rows(); }
  /// Basis rows in reduced row-echelon form.
  const Matrix& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  bool contains(std::span<const Elem> v) const;
  /// Image of this subspace under m (m.cols() == ambient_dim()).
  Subspace mapped(const Matrix& m) const;
  /// Coordinates of v (assumed to lie in the subspace) in the echelon basis.
  std::vector<Elem> coordinates(std::span<const Elem> v) const;
  /// {w : w . b = 0 for every b in the subspace}.
  Subspace annihilator() const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.basis_ == b.basis_;
  }

 private:
  Subspace(Matrix basis, std::vector<std::size_t> pivots)
      : basis_(std::move(basis)), pivots_(std::move(pivots)) {}

  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

Subspace kernel(const Matrix& m);
Subspace image(const Matrix& m);
/// {v : m v in s}.
Subspace preimage(const Matrix& m, const Subspace& s);

Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersect(const Subspace& a, const Subspace& b);
/// True iff b is contained in a.
bool contains(const Subspace& a, const Subspace& b);

/// Solution space of the homogeneous system constraints * x = 0; each row is
/// one linear equation in constraints.cols() unknowns.
Subspace solve_linear_system(const Matrix& constraints);

}  // namespace dieudonne
