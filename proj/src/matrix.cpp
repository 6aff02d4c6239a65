#include "nbj/matrix.hpp"

#include <bit>
#include <stdexcept>

#include "nbj/errors.hpp"

namespace nbj {

namespace {
void require_same_dim(const Matrix& a, const Matrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("matrix dimension mismatch");
}
}  // namespace

Matrix Matrix::identity(std::size_t dim) {
  Matrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m.mut(i, i) = 1;
  return m;
}

Matrix Matrix::all_ones(std::size_t dim) {
  Matrix m(dim);
  for (auto& x : m.a_) x = 1;
  return m;
}

Matrix Matrix::diagonal(const std::vector<Rational>& d) {
  Matrix m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m.mut(i, i) = d[i];
  return m;
}

Matrix Matrix::build(std::size_t dim,
                     const std::function<Rational(std::size_t, std::size_t)>& f) {
  Matrix m(dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) m.mut(r, c) = f(r, c);
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

Rational Matrix::trace() const {
  Rational t;
  for (std::size_t i = 0; i < dim_; ++i) t += at(i, i);
  return t;
}

Matrix Matrix::transpose() const {
  Matrix m(dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) m.mut(c, r) = at(r, c);
  return m;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  require_same_dim(a, b);
  const std::size_t n = a.dim();
  Matrix out(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k < n; ++k) {
      const Rational& x = a.at(r, k);
      if (x.is_zero()) continue;
      for (std::size_t c = 0; c < n; ++c) {
        const Rational& y = b.at(k, c);
        if (!y.is_zero()) out.mut(r, c) += x * y;
      }
    }
  }
  return out;
}

Matrix hadamard(const Matrix& a, const Matrix& b) {
  require_same_dim(a, b);
  Matrix out(a.dim());
  for (std::size_t i = 0; i < out.a_.size(); ++i) out.a_[i] = a.a_[i] * b.a_[i];
  return out;
}

Matrix commutator(const Matrix& a, const Matrix& b) {
  return mat_sub(mat_mul(a, b), mat_mul(b, a));
}

Matrix anticommutator(const Matrix& a, const Matrix& b) {
  return mat_add(mat_mul(a, b), mat_mul(b, a));
}

Matrix mat_add(const Matrix& a, const Matrix& b) {
  require_same_dim(a, b);
  Matrix out(a.dim());
  for (std::size_t i = 0; i < out.a_.size(); ++i) out.a_[i] = a.a_[i] + b.a_[i];
  return out;
}

Matrix mat_sub(const Matrix& a, const Matrix& b) {
  require_same_dim(a, b);
  Matrix out(a.dim());
  for (std::size_t i = 0; i < out.a_.size(); ++i) out.a_[i] = a.a_[i] - b.a_[i];
  return out;
}

Matrix scale(const Rational& c, const Matrix& m) {
  Matrix out(m.dim());
  for (std::size_t i = 0; i < out.a_.size(); ++i) out.a_[i] = c * m.a_[i];
  return out;
}

BinaryMatrix::BinaryMatrix(std::size_t dim)
    : dim_(dim), words_((dim + 63) / 64), bits_(dim * words_, 0) {}

void BinaryMatrix::set(std::size_t r, std::size_t c) {
  bits_[r * words_ + c / 64] |= std::uint64_t{1} << (c % 64);
}

void BinaryMatrix::clear(std::size_t r, std::size_t c) {
  bits_[r * words_ + c / 64] &= ~(std::uint64_t{1} << (c % 64));
}

std::size_t BinaryMatrix::row_sum(std::size_t r) const {
  std::size_t total = 0;
  for (std::size_t w = 0; w < words_; ++w) total += std::popcount(bits_[r * words_ + w]);
  return total;
}

std::size_t BinaryMatrix::ones_count() const {
  std::size_t total = 0;
  for (std::size_t r = 0; r < dim_; ++r) total += row_sum(r);
  return total;
}

bool BinaryMatrix::is_symmetric() const {
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = r + 1; c < dim_; ++c)
      if (get(r, c) != get(c, r)) return false;
  return true;
}

bool BinaryMatrix::is_identity() const {
  for (std::size_t r = 0; r < dim_; ++r) {
    if (!get(r, r) || row_sum(r) != 1) return false;
  }
  return true;
}

std::size_t BinaryMatrix::row_dot(std::size_t r, const BinaryMatrix& other,
                                  std::size_t s) const {
  std::size_t total = 0;
  const std::uint64_t* x = &bits_[r * words_];
  const std::uint64_t* y = &other.bits_[s * words_];
  for (std::size_t w = 0; w < words_; ++w) total += std::popcount(x[w] & y[w]);
  return total;
}

Matrix BinaryMatrix::to_matrix() const {
  Matrix m(dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c)
      if (get(r, c)) m.mut(r, c) = 1;
  return m;
}

RationalLU::RationalLU(const Matrix& m) : dim_(m.dim()), lu_(m.a_), perm_(m.dim()) {
  for (std::size_t i = 0; i < dim_; ++i) perm_[i] = i;
  auto entry = [&](std::size_t r, std::size_t c) -> Rational& { return lu_[r * dim_ + c]; };
  for (std::size_t col = 0; col < dim_; ++col) {
    std::size_t pivot = col;
    while (pivot < dim_ && entry(pivot, col).is_zero()) ++pivot;
    if (pivot == dim_) throw InternalError("RationalLU: singular matrix");
    if (pivot != col) {
      for (std::size_t c = 0; c < dim_; ++c) std::swap(entry(pivot, c), entry(col, c));
      std::swap(perm_[pivot], perm_[col]);
    }
    for (std::size_t r = col + 1; r < dim_; ++r) {
      if (entry(r, col).is_zero()) continue;
      Rational factor = entry(r, col) / entry(col, col);
      entry(r, col) = factor;
      for (std::size_t c = col + 1; c < dim_; ++c)
        entry(r, c) -= factor * entry(col, c);
    }
  }
}

std::vector<Rational> RationalLU::solve(const std::vector<Rational>& rhs) const {
  if (rhs.size() != dim_) throw std::invalid_argument("RationalLU: rhs size mismatch");
  std::vector<Rational> y(dim_);
  for (std::size_t r = 0; r < dim_; ++r) {
    Rational acc = rhs[perm_[r]];
    for (std::size_t c = 0; c < r; ++c) acc -= lu_[r * dim_ + c] * y[c];
    y[r] = acc;
  }
  std::vector<Rational> x(dim_);
  for (std::size_t r = dim_; r-- > 0;) {
    Rational acc = y[r];
    for (std::size_t c = r + 1; c < dim_; ++c) acc -= lu_[r * dim_ + c] * x[c];
    x[r] = acc / lu_[r * dim_ + r];
  }
  return x;
}

}  // namespace nbj
