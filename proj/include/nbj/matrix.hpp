#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "nbj/rational.hpp"

namespace nbj {

/// Dense square matrix of exact rationals.  The dimension is fixed at
/// construction and entries are only readable afterwards; every operation
/// returns a new value, so matrices can be shared freely.
class Matrix {
 public:
  explicit Matrix(std::size_t dim) : dim_(dim), a_(dim * dim) {}

  static Matrix identity(std::size_t dim);
  static Matrix all_ones(std::size_t dim);
  static Matrix diagonal(const std::vector<Rational>& d);
  static Matrix build(std::size_t dim,
                      const std::function<Rational(std::size_t, std::size_t)>& f);

  std::size_t dim() const { return dim_; }
  const Rational& at(std::size_t r, std::size_t c) const { return a_[r * dim_ + c]; }

  bool is_zero() const;
  Rational trace() const;
  Matrix transpose() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.dim_ == b.dim_ && a.a_ == b.a_;
  }

 private:
  Rational& mut(std::size_t r, std::size_t c) { return a_[r * dim_ + c]; }

  std::size_t dim_;
  std::vector<Rational> a_;

  friend Matrix mat_mul(const Matrix&, const Matrix&);
  friend Matrix hadamard(const Matrix&, const Matrix&);
  friend Matrix mat_add(const Matrix&, const Matrix&);
  friend Matrix mat_sub(const Matrix&, const Matrix&);
  friend Matrix scale(const Rational&, const Matrix&);
  friend class BinaryMatrix;
  friend class RationalLU;
};

Matrix mat_mul(const Matrix& a, const Matrix& b);
Matrix hadamard(const Matrix& a, const Matrix& b);
/// ab - ba.
Matrix commutator(const Matrix& a, const Matrix& b);
/// ab + ba.
Matrix anticommutator(const Matrix& a, const Matrix& b);
Matrix mat_add(const Matrix& a, const Matrix& b);
Matrix mat_sub(const Matrix& a, const Matrix& b);
Matrix scale(const Rational& c, const Matrix& m);

/// Square 0/1 matrix with bit-packed rows.  Products of adjacency matrices
/// are taken over the integers (popcounts) and promoted to rationals only
/// where rational coefficients enter.
class BinaryMatrix {
 public:
  explicit BinaryMatrix(std::size_t dim);

  std::size_t dim() const { return dim_; }
  bool get(std::size_t r, std::size_t c) const {
    return (bits_[r * words_ + c / 64] >> (c % 64)) & 1u;
  }
  void set(std::size_t r, std::size_t c);
  void clear(std::size_t r, std::size_t c);

  /// Number of ones in row r.
  std::size_t row_sum(std::size_t r) const;
  std::size_t ones_count() const;
  bool is_symmetric() const;
  bool is_identity() const;

  /// <row r of *this, row s of other> = |{z : this[r][z] = other[s][z] = 1}|.
  /// For symmetric matrices this is the (r,s) entry of this*other.
  std::size_t row_dot(std::size_t r, const BinaryMatrix& other, std::size_t s) const;

  Matrix to_matrix() const;

 private:
  std::size_t dim_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

/// Exact LU factorization (first-nonzero pivoting) for solving linear
/// systems over the rationals.  Throws InternalError when singular.
class RationalLU {
 public:
  explicit RationalLU(const Matrix& m);

  std::vector<Rational> solve(const std::vector<Rational>& rhs) const;

 private:
  std::size_t dim_;
  std::vector<Rational> lu_;
  std::vector<std::size_t> perm_;
};

}  // namespace nbj
