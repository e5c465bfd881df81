#include "filicheck/lie_algebra.hpp"

#include <utility>

namespace filicheck {

Vector StructureTensor::pair(std::size_t i, std::size_t j) const {
  Vector v(n_);
  for (std::size_t k = 0; k < n_; ++k) v[k] = at(i, j, k);
  return v;
}

LieAlgebra::LieAlgebra(Field field, StructureTensor tensor, std::vector<std::string> labels)
    : field_(field), tensor_(std::move(tensor)), labels_(std::move(labels)) {
  const std::size_t n = tensor_.dim();
  if (n == 0) throw DimensionMismatch("algebra dimension must be positive");
  if (n > kMaxDim) throw DimensionMismatch("algebra dimension exceeds " + std::to_string(kMaxDim));
  if (labels_.empty())
    for (std::size_t i = 0; i < n; ++i) labels_.push_back("e" + std::to_string(i + 1));
  if (labels_.size() != n) throw DimensionMismatch("label count does not match dimension");
}

LieAlgebra LieAlgebra::abelian(std::size_t n, Field field) { return LieAlgebra(field, StructureTensor(n)); }

void LieAlgebra::set_bracket(std::size_t i, std::size_t j, const Vector& v) {
  const std::size_t n = dim();
  if (i >= n || j >= n || v.size() != n) throw DimensionMismatch("bracket index or vector out of range");
  if (field_ == Field::Q && !all_real(v)) throw FieldMismatch("complex coefficient in a real algebra");
  for (std::size_t k = 0; k < n; ++k) {
    tensor_.at(i, j, k) = v[k];
    tensor_.at(j, i, k) = -v[k];
  }
}

void check_vector(const LieAlgebra& alg, const Vector& v) {
  if (v.size() != alg.dim()) throw DimensionMismatch("vector length does not match algebra dimension");
  if (alg.field() == Field::Q && !all_real(v)) throw FieldMismatch("complex vector for a real algebra");
}

Vector bracket(const LieAlgebra& alg, const Vector& x, const Vector& y) {
  check_vector(alg, x);
  check_vector(alg, y);
  const std::size_t n = alg.dim();
  const auto& c = alg.tensor();
  Vector out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      Scalar w = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k) add_product(out[k], w, c.at(i, j, k));
    }
  }
  return out;
}

ValidationReport validate(const LieAlgebra& alg) {
  ValidationReport rep;
  const std::size_t n = alg.dim();
  const auto& c = alg.tensor();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        if (alg.field() == Field::Q && !c.at(i, j, k).is_real()) rep.field.push_back({i, j, k});
        if (i <= j && !(c.at(i, j, k) + c.at(j, i, k)).is_zero()) rep.antisymmetry.push_back({i, j, k});
      }
  // With antisymmetry the Jacobi sum is alternating in (i, j, k), so i < j < k suffices.
  const bool alternating = rep.antisymmetry.empty();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = alternating ? i + 1 : 0; j < n; ++j)
      for (std::size_t k = alternating ? j + 1 : 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          Scalar s;
          for (std::size_t m = 0; m < n; ++m) {
            add_product(s, c.at(i, j, m), c.at(m, k, l));
            add_product(s, c.at(j, k, m), c.at(m, i, l));
            add_product(s, c.at(k, i, m), c.at(m, j, l));
          }
          if (!s.is_zero()) rep.jacobi.push_back({i, j, k, l});
        }
  return rep;
}

EndoMap adjoint(const LieAlgebra& alg, const Vector& x) {
  check_vector(alg, x);
  const std::size_t n = alg.dim();
  const auto& c = alg.tensor();
  EndoMap ad(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) add_product(ad(k, j), x[i], c.at(i, j, k));
  }
  return ad;
}

LieAlgebra change_basis(const LieAlgebra& alg, const EndoMap& p) {
  const std::size_t n = alg.dim();
  if (p.rows() != n || p.cols() != n) throw DimensionMismatch("basis change has wrong shape");
  if (alg.field() == Field::Q && !p.is_real()) throw FieldMismatch("complex basis change for a real algebra");
  const Matrix pinv = inverse(p);
  std::vector<Vector> images;
  for (std::size_t i = 0; i < n; ++i) images.push_back(p.column(i));
  StructureTensor t(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector v = pinv * bracket(alg, images[i], images[j]);
      for (std::size_t k = 0; k < n; ++k) {
        t.at(i, j, k) = v[k];
        t.at(j, i, k) = -v[k];
      }
    }
  return LieAlgebra(alg.field(), std::move(t));
}

Subspace bracket_span(const LieAlgebra& alg, const Subspace& left, const Subspace& right) {
  std::vector<Vector> out;
  for (const auto& a : left.basis())
    for (const auto& b : right.basis()) out.push_back(bracket(alg, a, b));
  return Subspace(alg.dim(), out);
}

bool is_subalgebra(const LieAlgebra& alg, const Subspace& s) {
  if (s.ambient_dim() != alg.dim()) throw DimensionMismatch("subspace ambient dimension mismatch");
  const auto& b = s.basis();
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j)
      if (!s.contains(bracket(alg, b[i], b[j]))) return false;
  return true;
}

bool is_ideal(const LieAlgebra& alg, const Subspace& s) {
  if (s.ambient_dim() != alg.dim()) throw DimensionMismatch("subspace ambient dimension mismatch");
  const std::size_t n = alg.dim();
  for (std::size_t i = 0; i < n; ++i) {
    const Vector e = unit_vector(n, i);
    for (const auto& v : s.basis())
      if (!s.contains(bracket(alg, e, v))) return false;
  }
  return true;
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  if (a.field() != b.field()) throw FieldMismatch("direct sum of algebras over different fields");
  const std::size_t na = a.dim(), nb = b.dim(), n = na + nb;
  StructureTensor t(n);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j)
      for (std::size_t k = 0; k < na; ++k) t.at(i, j, k) = a.tensor().at(i, j, k);
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = 0; j < nb; ++j)
      for (std::size_t k = 0; k < nb; ++k) t.at(na + i, na + j, na + k) = b.tensor().at(i, j, k);
  std::vector<std::string> labels = a.labels();
  labels.insert(labels.end(), b.labels().begin(), b.labels().end());
  return LieAlgebra(a.field(), std::move(t), std::move(labels));
}

LieAlgebra restrict_to(const LieAlgebra& alg, const Subspace& s) { return restrict_to(alg, s.basis()); }

LieAlgebra restrict_to(const LieAlgebra& alg, const std::vector<Vector>& basis) {
  const std::size_t m = basis.size();
  if (m == 0) throw DimensionMismatch("cannot restrict to the zero subspace");
  const Matrix cols = Matrix::from_columns(basis, alg.dim());
  if (rank(cols) != m) throw PreconditionFailed("restriction basis is linearly dependent");
  StructureTensor t(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      auto coords = solve(cols, bracket(alg, basis[i], basis[j]));
      if (!coords) throw PreconditionFailed("subspace is not closed under the bracket");
      for (std::size_t k = 0; k < m; ++k) {
        t.at(i, j, k) = (*coords)[k];
        t.at(j, i, k) = -(*coords)[k];
      }
    }
  return LieAlgebra(alg.field(), std::move(t));
}

}  // namespace filicheck
