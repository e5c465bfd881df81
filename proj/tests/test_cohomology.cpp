#include <doctest.h>

#include <random>

#include "filicheck/catalog.hpp"
#include "filicheck/cohomology.hpp"
#include "filicheck/complex_structures.hpp"
#include "filicheck/errors.hpp"
#include "testkit.hpp"

using namespace filicheck;

namespace {

TwoCochain combine(const TwoCochain& a, const TwoCochain& b, const Scalar& s) {
  const std::size_t n = a.dim();
  TwoCochain out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) out.at(i, j, k) = a.at(i, j, k) + s * b.at(i, j, k);
  return out;
}

}  // namespace

TEST_CASE("coboundary_is_linear") {
  std::mt19937_64 rng(73);
  const LieAlgebra g = builtin_algebra("g6_2");
  const Matrix a = testkit::random_invertible(6, rng), b = testkit::random_invertible(6, rng);
  const Scalar s = Scalar::rational(-3, 2);
  CHECK(coboundary1(g, a + s * b) == combine(coboundary1(g, a), coboundary1(g, b), s));
}

TEST_CASE("coboundary_vanishes_exactly_on_derivations") {
  const LieAlgebra l5 = builtin_algebra("L5");
  // Grading derivation X1 -> X1, Xi -> (i-1) Xi for i >= 2.
  EndoMap d(5, 5);
  d(0, 0) = Scalar(1);
  for (std::size_t i = 1; i < 5; ++i) d(i, i) = Scalar(static_cast<long>(i));
  CHECK(coboundary1(l5, d).is_zero());
  CHECK(coboundary1(l5, Matrix::identity(5)) == l5.tensor());
  // ad x is always a derivation.
  CHECK(coboundary1(l5, adjoint(l5, testkit::int_vector({1, 2, -1, 0, 3}))).is_zero());
}

TEST_CASE("transported_law_of_identity_is_the_law") {
  const LieAlgebra g = builtin_algebra("g8_3");
  CHECK(transported_law(g, Matrix::identity(8)) == g.tensor());
  Matrix sing = Matrix::identity(8);
  sing(0, 0) = Scalar(0);
  CHECK_THROWS_AS(transported_law(g, sing), SingularMatrix);
}

TEST_CASE("coboundary_identity_holds_for_certified_structures") {
  for (const char* key : {"r4_2", "g6_2", "g8_3", "abelian4"}) {
    const LieAlgebra alg = builtin_algebra(key);
    const auto v = solve_bi_invariant(alg);
    REQUIRE(v.witness.has_value());
    CHECK_MESSAGE(verify_coboundary_identity(alg, *v.witness), key);
  }
}

TEST_CASE("coboundary_identity_preconditions") {
  std::mt19937_64 rng(79);
  const LieAlgebra g = builtin_algebra("g6_2");
  CHECK_THROWS_AS(verify_coboundary_identity(g, Matrix::identity(6)), PreconditionFailed);
  EndoMap j;
  do j = testkit::random_complex_structure(6, rng);
  while (is_invariant_cs(g, j));
  CHECK_THROWS_AS(verify_coboundary_identity(g, j), PreconditionFailed);
}

TEST_CASE("corollary_scan_counts") {
  std::mt19937_64 rng(83);
  const LieAlgebra l4 = builtin_algebra("L4");
  std::vector<EndoMap> cands{Matrix::identity(4)};
  for (int t = 0; t < 10; ++t) cands.push_back(testkit::random_complex_structure(4, rng));
  const auto rep = corollary2_scan(l4, cands);
  CHECK(rep.candidates == 11);
  CHECK(rep.rejected_precondition == 1);
  CHECK(rep.contradictions == 0);
  CHECK(rep.identity_fails == 10);
  CHECK_THROWS_AS(corollary2_scan(builtin_algebra("g6_2"), cands), PreconditionFailed);
}
