#include "dieudonne/ffmat.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace dieudonne {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

void require_same_field(const PrimeField& a, const PrimeField& b) {
  require(a == b, "field mismatch");
}

// Packed GF(2) elimination: each row is a run of 64-bit words.
std::vector<std::size_t> row_reduce_gf2(Matrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  const std::size_t words = (cols + 63) / 64;
  std::vector<std::uint64_t> bits(rows * words, 0);
  for (std::size_t r = 0; r < rows; ++r) {
    auto src = m.row(r);
    for (std::size_t c = 0; c < cols; ++c)
      if (src[c]) bits[r * words + c / 64] |= std::uint64_t{1} << (c % 64);
  }
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols && lead < rows; ++c) {
    const std::size_t w = c / 64;
    const std::uint64_t mask = std::uint64_t{1} << (c % 64);
    std::size_t pr = lead;
    while (pr < rows && !(bits[pr * words + w] & mask)) ++pr;
    if (pr == rows) continue;
    if (pr != lead)
      std::swap_ranges(bits.begin() + pr * words, bits.begin() + (pr + 1) * words,
                       bits.begin() + lead * words);
    const std::uint64_t* piv = bits.data() + lead * words;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == lead) continue;
      std::uint64_t* dst = bits.data() + r * words;
      if (dst[w] & mask)
        for (std::size_t k = w; k < words; ++k) dst[k] ^= piv[k];
    }
    pivots.push_back(c);
    ++lead;
  }
  for (std::size_t r = 0; r < rows; ++r) {
    auto dst = m.row(r);
    for (std::size_t c = 0; c < cols; ++c)
      dst[c] = static_cast<Elem>((bits[r * words + c / 64] >> (c % 64)) & 1u);
  }
  return pivots;
}

std::vector<std::size_t> row_reduce_generic(Matrix& m) {
  const PrimeField& k = m.field();
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols && lead < rows; ++c) {
    std::size_t pr = lead;
    while (pr < rows && m(pr, c) == 0) ++pr;
    if (pr == rows) continue;
    if (pr != lead) std::swap_ranges(m.row(pr).begin(), m.row(pr).end(), m.row(lead).begin());
    auto piv = m.row(lead);
    const Elem s = k.inv(piv[c]);
    for (std::size_t j = c; j < cols; ++j) piv[j] = k.mul(piv[j], s);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == lead) continue;
      auto dst = m.row(r);
      const Elem factor = dst[c];
      if (factor == 0) continue;
      for (std::size_t j = c; j < cols; ++j)
        if (piv[j]) dst[j] = k.sub(dst[j], k.mul(factor, piv[j]));
    }
    pivots.push_back(c);
    ++lead;
  }
  return pivots;
}

}  // namespace

bool is_prime(unsigned n) noexcept {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(unsigned p) : p_(p) {
  if (p < 2 || p > 97 || !is_prime(p))
    throw std::invalid_argument("p must be a prime in [2, 97], got " + std::to_string(p));
}

Elem PrimeField::inv(Elem a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  // Fermat: a^(p-2).
  unsigned result = 1, base = a, e = p_ - 2;
  while (e) {
    if (e & 1u) result = result * base % p_;
    base = base * base % p_;
    e >>= 1u;
  }
  return static_cast<Elem>(result);
}

Matrix::Matrix(PrimeField field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Matrix::Matrix(PrimeField field, std::initializer_list<std::initializer_list<long long>> rows)
    : field_(field), rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    require(r.size() == cols_, "ragged matrix literal");
    for (long long v : r) data_.push_back(field_.reduce(v));
  }
}

Matrix::Matrix(PrimeField field, const std::vector<std::vector<long long>>& rows, std::size_t cols)
    : field_(field), rows_(rows.size()), cols_(cols) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    require(r.size() == cols_, "ragged matrix rows");
    for (long long v : r) data_.push_back(field_.reduce(v));
  }
}

Matrix Matrix::identity(PrimeField field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1;
  return m;
}

std::vector<Elem> Matrix::column(std::size_t c) const {
  std::vector<Elem> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.data_[c * rows_ + r] = (*this)(r, c);
  return t;
}

std::vector<Elem> Matrix::apply(std::span<const Elem> v) const {
  require(v.size() == cols_, "dimension mismatch in matrix-vector product");
  std::vector<Elem> out(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    unsigned acc = 0;
    auto row_r = row(r);
    for (std::size_t c = 0; c < cols_; ++c) acc = (acc + unsigned(row_r[c]) * v[c]) % field_.p();
    out[r] = static_cast<Elem>(acc);
  }
  return out;
}

Matrix Matrix::scaled(Elem s) const {
  Matrix out = *this;
  for (auto& x : out.data_) x = field_.mul(x, s);
  return out;
}

bool Matrix::is_zero() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](Elem x) { return x == 0; });
}

Matrix Matrix::row_block(std::size_t first, std::size_t count) const {
  require(first + count <= rows_, "row block out of range");
  Matrix out(field_, count, cols_);
  std::copy(data_.begin() + first * cols_, data_.begin() + (first + count) * cols_, out.data_.begin());
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_same_field(a.field_, b.field_);
  require(a.cols_ == b.rows_, "dimension mismatch in matrix product");
  const unsigned p = a.field_.p();
  Matrix out(a.field_, a.rows_, b.cols_);
  std::vector<unsigned> acc(b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    std::fill(acc.begin(), acc.end(), 0u);
    std::size_t terms = 0;
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const unsigned x = a(i, k);
      if (x == 0) continue;
      auto brow = b.row(k);
      for (std::size_t j = 0; j < b.cols_; ++j) acc[j] += x * brow[j];
      // 65536 terms of at most 96*96 stay below 2^32.
      if (++terms == 0x10000u) {
        for (auto& v : acc) v %= p;
        terms = 0;
      }
    }
    for (std::size_t j = 0; j < b.cols_; ++j) out.data_[i * out.cols_ + j] = static_cast<Elem>(acc[j] % p);
  }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require_same_field(a.field_, b.field_);
  require(a.rows_ == b.rows_ && a.cols_ == b.cols_, "dimension mismatch in matrix sum");
  Matrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] = a.field_.add(a.data_[i], b.data_[i]);
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  require_same_field(a.field_, b.field_);
  require(a.rows_ == b.rows_ && a.cols_ == b.cols_, "dimension mismatch in matrix difference");
  Matrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] = a.field_.sub(a.data_[i], b.data_[i]);
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::vector<std::size_t> row_reduce(Matrix& m) {
  return m.field().p() == 2 ? row_reduce_gf2(m) : row_reduce_generic(m);
}

std::size_t rank(const Matrix& m) {
  Matrix copy = m;
  return row_reduce(copy).size();
}

std::optional<Matrix> inverse(const Matrix& m) {
  require(m.rows() == m.cols(), "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(m.field(), n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug.set(r, c, m(r, c));
    aug.set(r, n + r, 1);
  }
  auto pivots = row_reduce(aug);
  if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) return std::nullopt;
  Matrix out(m.field(), n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out.set(r, c, aug(r, n + c));
  return out;
}

Matrix block_diagonal(const Matrix& a, const Matrix& b) {
  require_same_field(a.field(), b.field());
  Matrix out(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out.set(r, c, a(r, c));
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) out.set(a.rows() + r, a.cols() + c, b(r, c));
  return out;
}

Matrix vstack(const Matrix& top, const Matrix& bottom) {
  require_same_field(top.field(), bottom.field());
  require(top.cols() == bottom.cols(), "dimension mismatch in vstack");
  Matrix out(top.field(), top.rows() + bottom.rows(), top.cols());
  for (std::size_t r = 0; r < top.rows(); ++r)
    std::copy(top.row(r).begin(), top.row(r).end(), out.row(r).begin());
  for (std::size_t r = 0; r < bottom.rows(); ++r)
    std::copy(bottom.row(r).begin(), bottom.row(r).end(), out.row(top.rows() + r).begin());
  return out;
}

Subspace Subspace::span(const Matrix& generators) {
  Matrix m = generators;
  auto pivots = row_reduce(m);
  Matrix basis = m.row_block(0, pivots.size());
  return Subspace(std::move(basis), std::move(pivots));
}

Subspace Subspace::zero(PrimeField field, std::size_t ambient) {
  return Subspace(Matrix(field, 0, ambient), {});
}

Subspace Subspace::full(PrimeField field, std::size_t ambient) {
  std::vector<std::size_t> pivots(ambient);
  for (std::size_t i = 0; i < ambient; ++i) pivots[i] = i;
  return Subspace(Matrix::identity(field, ambient), std::move(pivots));
}

Subspace Subspace::span_of_units(PrimeField field, std::size_t ambient,
                                 std::span<const std::size_t> indices) {
  Matrix gens(field, indices.size(), ambient);
  for (std::size_t i = 0; i < indices.size(); ++i) {
    require(indices[i] < ambient, "unit index out of range");
    gens.set(i, indices[i], 1);
  }
  return span(gens);
}

std::vector<Elem> Subspace::coordinates(std::span<const Elem> v) const {
  require(v.size() == ambient_dim(), "dimension mismatch in coordinates");
  std::vector<Elem> out(dim());
  for (std::size_t i = 0; i < dim(); ++i) out[i] = v[pivots_[i]];
  return out;
}

bool Subspace::contains(std::span<const Elem> v) const {
  require(v.size() == ambient_dim(), "dimension mismatch in membership test");
  const PrimeField& k = field();
  // Subtract the echelon combination read off the pivot coordinates.
  std::vector<Elem> rest(v.begin(), v.end());
  for (std::size_t i = 0; i < dim(); ++i) {
    const Elem c = rest[pivots_[i]];
    if (c == 0) continue;
    auto b = basis_.row(i);
    for (std::size_t j = 0; j < rest.size(); ++j)
      if (b[j]) rest[j] = k.sub(rest[j], k.mul(c, b[j]));
  }
  return std::all_of(rest.begin(), rest.end(), [](Elem x) { return x == 0; });
}

Subspace Subspace::mapped(const Matrix& m) const {
  require(m.cols() == ambient_dim(), "dimension mismatch in subspace image");
  // Rows of basis * m^T are the images m * b of the basis vectors.
  return span(basis_ * m.transpose());
}

Subspace Subspace::annihilator() const { return kernel(basis_); }

Subspace kernel(const Matrix& m) {
  Matrix r = m;
  auto pivots = row_reduce(r);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  const PrimeField& k = m.field();
  Matrix gens(k, n - pivots.size(), n);
  std::size_t g = 0;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    gens.set(g, f, 1);
    for (std::size_t i = 0; i < pivots.size(); ++i) gens.set(g, pivots[i], k.neg(r(i, f)));
    ++g;
  }
  return Subspace::span(gens);
}

Subspace image(const Matrix& m) { return Subspace::span(m.transpose()); }

Subspace preimage(const Matrix& m, const Subspace& s) {
  require(s.ambient_dim() == m.rows(), "dimension mismatch in preimage");
  // m v lies in s iff every annihilating functional of s kills m v.
  const Subspace ann = s.annihilator();
  return kernel(ann.basis() * m);
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  require(a.ambient_dim() == b.ambient_dim(), "ambient mismatch in subspace sum");
  return Subspace::span(vstack(a.basis(), b.basis()));
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
  require(a.ambient_dim() == b.ambient_dim(), "ambient mismatch in subspace intersection");
  return kernel(vstack(a.annihilator().basis(), b.annihilator().basis()));
}

bool contains(const Subspace& a, const Subspace& b) {
  require(a.ambient_dim() == b.ambient_dim(), "ambient mismatch in containment test");
  for (std::size_t i = 0; i < b.dim(); ++i)
    if (!a.contains(b.basis().row(i))) return false;
  return true;
}

Subspace solve_linear_system(const Matrix& constraints) { return kernel(constraints); }

}  // namespace dieudonne
