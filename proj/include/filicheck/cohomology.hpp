#pragma once

#include <cstddef>
#include <vector>

#include "filicheck/lie_algebra.hpp"

namespace filicheck {

/// Algebra-valued alternating bilinear map, stored like a structure tensor.
using TwoCochain = StructureTensor;

/// (dT)(x, y) = [Tx, y] + [x, Ty] - T[x, y] on basis pairs.
TwoCochain coboundary1(const LieAlgebra& alg, const EndoMap& t);

/// mu_J(x, y) = J^{-1}[Jx, Jy]; uses J^{-1} = -J exactly when J^2 = -Id. Throws SingularMatrix.
TwoCochain transported_law(const LieAlgebra& alg, const EndoMap& j);

/// dJ == mu_J tensor-exactly. Throws PreconditionFailed unless J is an invariant complex structure.
bool verify_coboundary_identity(const LieAlgebra& alg, const EndoMap& j);

struct Corollary2Report {
  std::size_t candidates = 0;
  std::size_t rejected_precondition = 0;  // J^2 != -Id
  std::size_t identity_fails = 0;         // dJ != mu_J
  std::size_t law_fails = 0;              // mu_J not a Lie law isomorphic to mu via J
  std::size_t contradictions = 0;         // passes everything; would contradict the nonexistence theorem
};

/// For each candidate with J^2 = -Id, checks that dJ = mu_J fails on the filiform algebra.
Corollary2Report corollary2_scan(const LieAlgebra& alg, const std::vector<EndoMap>& candidates);

}  // namespace filicheck
