#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "filicheck/errors.hpp"
#include "filicheck/scalar.hpp"

namespace filicheck {

using Vector = std::vector<Scalar>;

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(std::span<const Scalar> v);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Scalar& s, const Vector& v);
Vector conj(const Vector& v);
bool all_real(std::span<const Scalar> v);

/// Dense row-major matrix over Q(i).
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t n) { return Matrix(n, n); }
  /// Matrix whose columns are the given vectors.
  static Matrix from_columns(std::span<const Vector> cols, std::size_t rows);
  static Matrix from_rows(std::span<const Vector> rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector column(std::size_t c) const;
  Vector row(std::size_t r) const;
  void set_column(std::size_t c, const Vector& v);

  Matrix transpose() const;
  Matrix conj() const;
  bool is_zero() const;
  bool is_real() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& s, Matrix m);
  friend Vector operator*(const Matrix& a, const Vector& v);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Square matrix acting on an algebra's coordinate space; column j is the image of e_j.
using EndoMap = Matrix;

/// Reduced row echelon form with first-nonzero pivoting. Returns the pivot columns.
std::vector<std::size_t> rref_in_place(Matrix& m);
std::size_t rank(Matrix m);
/// Basis of {x : m x = 0}, one vector per free column (standard nullspace basis).
std::vector<Vector> kernel(const Matrix& m);
Matrix inverse(const Matrix& m);
std::optional<Vector> solve(const Matrix& a, const Vector& b);
Matrix power(const Matrix& m, unsigned k);

/// Linear subspace of an ambient coordinate space, stored in reduced echelon form.
class Subspace {
 public:
  Subspace() = default;
  /// Spans the given vectors; dependent vectors are dropped.
  Subspace(std::size_t ambient_dim, std::span<const Vector> spanning);

  static Subspace full(std::size_t n);
  static Subspace zero(std::size_t n) { return Subspace(n, {}); }
  static Subspace coordinate(std::size_t n, std::span<const std::size_t> indices);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vector>& basis() const { return basis_; }

  bool contains(const Vector& v) const;
  bool contains(const Subspace& s) const;
  Subspace operator+(const Subspace& o) const;
  bool is_real() const;
  friend bool operator==(const Subspace& a, const Subspace& b) = default;

 private:
  std::size_t ambient_ = 0;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

/// Rank of the union of the bases of a and b equals a.dim() + b.dim() == ambient dim.
bool is_direct_sum(const Subspace& a, const Subspace& b);

}  // namespace filicheck
