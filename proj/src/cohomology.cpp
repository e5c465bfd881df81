#include "filicheck/cohomology.hpp"

#include "filicheck/complex_structures.hpp"
#include "filicheck/nilpotent.hpp"

namespace filicheck {

namespace {

void check_map(const LieAlgebra& alg, const EndoMap& t) {
  if (t.rows() != alg.dim() || t.cols() != alg.dim()) throw DimensionMismatch("map does not match algebra dimension");
}

void store(TwoCochain& b, std::size_t i, std::size_t j, Vector v) {
  for (std::size_t k = 0; k < v.size(); ++k) {
    b.at(j, i, k) = -v[k];
    b.at(i, j, k) = std::move(v[k]);
  }
}

}  // namespace

TwoCochain coboundary1(const LieAlgebra& alg, const EndoMap& t) {
  check_map(alg, t);
  const std::size_t n = alg.dim();
  TwoCochain out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vector ei = unit_vector(n, i), ti = t.column(i);
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vector ej = unit_vector(n, j);
      store(out, i, j, bracket(alg, ti, ej) + bracket(alg, ei, t.column(j)) - t * alg.tensor().pair(i, j));
    }
  }
  return out;
}

TwoCochain transported_law(const LieAlgebra& alg, const EndoMap& j) {
  check_map(alg, j);
  const std::size_t n = alg.dim();
  const EndoMap jinv = squares_to_minus_identity(j) ? Scalar(-1) * j : inverse(j);
  TwoCochain out(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) store(out, a, b, jinv * bracket(alg, j.column(a), j.column(b)));
  return out;
}

bool verify_coboundary_identity(const LieAlgebra& alg, const EndoMap& j) {
  check_map(alg, j);
  if (!squares_to_minus_identity(j)) throw PreconditionFailed("identity is stated for J^2 = -Id");
  if (!is_invariant_cs(alg, j)) throw PreconditionFailed("J is not an invariant complex structure");
  return coboundary1(alg, j) == transported_law(alg, j);
}

Corollary2Report corollary2_scan(const LieAlgebra& alg, const std::vector<EndoMap>& candidates) {
  if (!is_filiform(alg)) throw PreconditionFailed("corollary scan needs a filiform algebra");
  Corollary2Report rep;
  for (const auto& j : candidates) {
    ++rep.candidates;
    check_map(alg, j);
    if (!squares_to_minus_identity(j)) {
      ++rep.rejected_precondition;
      continue;
    }
    const TwoCochain law = transported_law(alg, j);
    const bool identity = coboundary1(alg, j) == law;
    const LieAlgebra transported(alg.field(), law);
    // J is an isomorphism from (g, mu_J) onto (g, mu) exactly when J mu_J(x, y) = mu(Jx, Jy).
    const bool law_ok = validate(transported).ok() && change_basis(alg, j).tensor() == law;
    if (!identity) ++rep.identity_fails;
    if (!law_ok) ++rep.law_fails;
    if (identity && law_ok) ++rep.contradictions;
  }
  return rep;
}

}  // namespace filicheck
