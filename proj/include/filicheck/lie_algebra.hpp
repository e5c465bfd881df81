#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "filicheck/linalg.hpp"

namespace filicheck {

inline constexpr std::size_t kMaxDim = 32;

/// Dense n x n x n structure-constant tensor: at(i, j, k) is the e_k coordinate of [e_i, e_j].
class StructureTensor {
 public:
  StructureTensor() = default;
  explicit StructureTensor(std::size_t n) : n_(n), data_(n * n * n) {}

  std::size_t dim() const { return n_; }
  Scalar& at(std::size_t i, std::size_t j, std::size_t k) { return data_[(i * n_ + j) * n_ + k]; }
  const Scalar& at(std::size_t i, std::size_t j, std::size_t k) const { return data_[(i * n_ + j) * n_ + k]; }
  Vector pair(std::size_t i, std::size_t j) const;
  bool is_zero() const { return filicheck::is_zero(data_); }

  friend bool operator==(const StructureTensor&, const StructureTensor&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Scalar> data_;
};

/// Finite-dimensional Lie algebra given by structure constants in a fixed basis.
///
/// Construction does not check antisymmetry or Jacobi; call `validate` (the catalog
/// parser does so by default).
class LieAlgebra {
 public:
  LieAlgebra() = default;
  LieAlgebra(Field field, StructureTensor tensor, std::vector<std::string> labels = {});

  /// Zero tensor of dimension n with default labels e1..en.
  static LieAlgebra abelian(std::size_t n, Field field = Field::Q);

  std::size_t dim() const { return tensor_.dim(); }
  Field field() const { return field_; }
  const StructureTensor& tensor() const { return tensor_; }
  const std::vector<std::string>& labels() const { return labels_; }

  /// Sets [e_i, e_j] = v and [e_j, e_i] = -v (0-based indices).
  void set_bracket(std::size_t i, std::size_t j, const Vector& v);

  friend bool operator==(const LieAlgebra&, const LieAlgebra&) = default;

 private:
  Field field_ = Field::Q;
  StructureTensor tensor_;
  std::vector<std::string> labels_;
};

struct AntisymmetryViolation {
  std::size_t i, j, k;
  friend bool operator==(const AntisymmetryViolation&, const AntisymmetryViolation&) = default;
};

struct JacobiViolation {
  std::size_t i, j, k, l;
  friend bool operator==(const JacobiViolation&, const JacobiViolation&) = default;
};

struct ValidationReport {
  std::vector<AntisymmetryViolation> antisymmetry;
  std::vector<JacobiViolation> jacobi;
  /// Entries with a nonzero imaginary part on an algebra tagged Q.
  std::vector<std::array<std::size_t, 3>> field;
  bool ok() const { return antisymmetry.empty() && jacobi.empty() && field.empty(); }
};

Vector bracket(const LieAlgebra& alg, const Vector& x, const Vector& y);
ValidationReport validate(const LieAlgebra& alg);
EndoMap adjoint(const LieAlgebra& alg, const Vector& x);
/// Algebra with tensor C'[i][j] = P^{-1} [P e_i, P e_j].
LieAlgebra change_basis(const LieAlgebra& alg, const EndoMap& p);
bool is_subalgebra(const LieAlgebra& alg, const Subspace& s);
bool is_ideal(const LieAlgebra& alg, const Subspace& s);
LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);

/// Span of all brackets [a, b] with a in `left` and b in `right`.
Subspace bracket_span(const LieAlgebra& alg, const Subspace& left, const Subspace& right);

/// The subalgebra `s` as an abstract algebra in the basis `s.basis()`.
LieAlgebra restrict_to(const LieAlgebra& alg, const Subspace& s);
/// Same, in an explicitly given basis of a subalgebra.
LieAlgebra restrict_to(const LieAlgebra& alg, const std::vector<Vector>& basis);

/// The algebra's field must admit every entry of v.
void check_vector(const LieAlgebra& alg, const Vector& v);

}  // namespace filicheck
