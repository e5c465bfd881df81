#pragma once

#include <utility>

#include "filicheck/lie_algebra.hpp"

namespace filicheck {

/// The real tensor reinterpreted over Q(i), keeping the real basis. Throws if already complex.
LieAlgebra complexify(const LieAlgebra& alg);

/// Componentwise conjugation in the real basis: X + iY -> X - iY.
Vector sigma(const Vector& v);
Subspace sigma_subspace(const Subspace& s);

struct EigenSplit {
  Subspace h;     // ker(J - i)
  Subspace hbar;  // ker(J + i)
};

/// The +i and -i eigenspaces of J on the complexified space. Throws PreconditionFailed
/// unless J^2 = -Id.
EigenSplit eigenspace_split(const LieAlgebra& alg_c, const EndoMap& j);

/// h is a subalgebra of half the dimension and h + sigma(h) is everything.
bool check_subalgebra_decomposition(const LieAlgebra& alg_c, const Subspace& h);

/// I and sigma(I) are complementary ideals; also confirms [I, sigma(I)] = 0.
bool check_ideal_decomposition(const LieAlgebra& alg_c, const Subspace& ideal);

/// [g0,g0] in g0, [g1,g1] in g0, [g0,g1] in g1. Throws PreconditionFailed unless g = g0 + g1 directly.
bool z2_grading_check(const LieAlgebra& alg, const Subspace& g0, const Subspace& g1);

}  // namespace filicheck
