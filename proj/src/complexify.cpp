#include "filicheck/complexify.hpp"

namespace filicheck {

LieAlgebra complexify(const LieAlgebra& alg) {
  if (alg.field() != Field::Q) throw FieldMismatch("algebra is already complex");
  return LieAlgebra(Field::Qi, alg.tensor(), alg.labels());
}

Vector sigma(const Vector& v) { return conj(v); }

Subspace sigma_subspace(const Subspace& s) {
  std::vector<Vector> b;
  for (const auto& v : s.basis()) b.push_back(sigma(v));
  return Subspace(s.ambient_dim(), b);
}

EigenSplit eigenspace_split(const LieAlgebra& alg_c, const EndoMap& j) {
  const std::size_t n = alg_c.dim();
  if (j.rows() != n || j.cols() != n) throw DimensionMismatch("J has the wrong shape");
  const Matrix id = Matrix::identity(n);
  if (!(j * j + id).is_zero()) throw PreconditionFailed("J^2 != -Id");
  const Matrix plus = j - Scalar::i() * id;
  const Matrix minus = j + Scalar::i() * id;
  return {Subspace(n, kernel(plus)), Subspace(n, kernel(minus))};
}

namespace {

void check_even_complex(const LieAlgebra& alg_c, const Subspace& s) {
  if (s.ambient_dim() != alg_c.dim()) throw DimensionMismatch("subspace ambient dimension mismatch");
  if (alg_c.dim() % 2 != 0) throw OddDimension("decomposition needs even dimension");
}

}  // namespace

bool check_subalgebra_decomposition(const LieAlgebra& alg_c, const Subspace& h) {
  check_even_complex(alg_c, h);
  if (h.dim() * 2 != alg_c.dim()) return false;
  if (!is_direct_sum(h, sigma_subspace(h))) return false;
  return is_subalgebra(alg_c, h);
}

bool check_ideal_decomposition(const LieAlgebra& alg_c, const Subspace& ideal) {
  check_even_complex(alg_c, ideal);
  if (ideal.dim() * 2 != alg_c.dim()) return false;
  const Subspace conj_ideal = sigma_subspace(ideal);
  if (!is_direct_sum(ideal, conj_ideal)) return false;
  if (!is_ideal(alg_c, ideal) || !is_ideal(alg_c, conj_ideal)) return false;
  return bracket_span(alg_c, ideal, conj_ideal).dim() == 0;
}

bool z2_grading_check(const LieAlgebra& alg, const Subspace& g0, const Subspace& g1) {
  if (g0.ambient_dim() != alg.dim() || g1.ambient_dim() != alg.dim())
    throw DimensionMismatch("subspace ambient dimension mismatch");
  if (!is_direct_sum(g0, g1)) throw PreconditionFailed("g0 + g1 is not a direct sum equal to g");
  return g0.contains(bracket_span(alg, g0, g0)) && g0.contains(bracket_span(alg, g1, g1)) &&
         g1.contains(bracket_span(alg, g0, g1));
}

}  // namespace filicheck
