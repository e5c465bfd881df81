#include <doctest.h>

#include <random>

#include "filicheck/catalog.hpp"
#include "filicheck/complex_structures.hpp"
#include "filicheck/complexify.hpp"
#include "filicheck/errors.hpp"
#include "testkit.hpp"

using namespace filicheck;

namespace {

// J on r4^2: X1 -> aX1 + bX2, X2 -> -bX1 + aX2 and, with `flip`, X3 -> aX3 - bX4, X4 -> bX3 + aX4.
EndoMap r4_family(const Scalar& a, const Scalar& b, bool flip = true) {
  EndoMap j(4, 4);
  for (std::size_t k : {0u, 2u}) {
    const Scalar bb = flip && k == 2 ? -b : b;
    j(k, k) = a;
    j(k + 1, k) = bb;
    j(k, k + 1) = -bb;
    j(k + 1, k + 1) = a;
  }
  return j;
}

}  // namespace

TEST_CASE("nijenhuis_vanishes_on_abelian_and_for_certified_witness") {
  const LieAlgebra a4 = LieAlgebra::abelian(4);
  CHECK(nijenhuis_residual(a4, testkit::block_j(4)).is_zero());
  CHECK(is_invariant_cs(a4, testkit::block_j(4)));
  CHECK(is_bi_invariant_cs(a4, testkit::block_j(4)));
  const LieAlgebra r = builtin_algebra("r4_2");
  CHECK(is_bi_invariant_cs(r, r4_family(Scalar(0), Scalar(1))));
  CHECK(nijenhuis_residual(r, r4_family(Scalar(0), Scalar(-1))).is_zero());
}

TEST_CASE("r4_2_rotation_with_equal_orientation_is_only_integrable") {
  // J[X1, X3] = J X3 = X4 but [J X1, X3] = [X2, X3] = -X4.
  const LieAlgebra r = builtin_algebra("r4_2");
  for (long b : {1L, -1L}) {
    const EndoMap j = r4_family(Scalar(0), Scalar(b), false);
    CHECK(squares_to_minus_identity(j));
    CHECK(is_invariant_cs(r, j));
    CHECK_FALSE(is_bi_invariant_cs(r, j));
  }
}

TEST_CASE("complex_structure_checks_reject_bad_input") {
  CHECK_THROWS_AS(is_invariant_cs(builtin_algebra("h3"), Matrix::identity(3)), OddDimension);
  CHECK_THROWS_AS(is_bi_invariant_cs(builtin_algebra("h3"), Matrix::identity(3)), OddDimension);
  CHECK_FALSE(squares_to_minus_identity(Matrix::identity(4)));
  CHECK_FALSE(is_invariant_cs(LieAlgebra::abelian(4), Matrix::identity(4)));
  // a^2 - b^2 = -1 with ab != 0 does not square to -Id.
  CHECK_FALSE(is_bi_invariant_cs(builtin_algebra("r4_2"), r4_family(Scalar::rational(3, 4), Scalar::rational(5, 4))));
}

TEST_CASE("bi_invariance_implies_integrability") {
  std::mt19937_64 rng(43);
  const LieAlgebra r = builtin_algebra("r4_2");
  const EndoMap j = r4_family(Scalar(0), Scalar(1));
  CHECK(is_bi_invariant_cs(r, j));
  CHECK(is_invariant_cs(r, j));
  const Matrix p = testkit::random_invertible(4, rng);
  const LieAlgebra moved = change_basis(r, p);
  const EndoMap jm = inverse(p) * j * p;
  CHECK(is_bi_invariant_cs(moved, jm));
  CHECK(is_invariant_cs(moved, jm));
}

TEST_CASE("nijenhuis_residual_is_equivariant") {
  std::mt19937_64 rng(47);
  const LieAlgebra g = builtin_algebra("g6_2");
  const EndoMap j = testkit::random_complex_structure(6, rng);
  const Matrix p = testkit::random_invertible(6, rng);
  const LieAlgebra moved = change_basis(g, p);
  const EndoMap jm = inverse(p) * j * p;
  // N'(x, y) = P^{-1} N(Px, Py) in the moved basis.
  const auto n0 = nijenhuis_residual(g, j);
  const auto n1 = nijenhuis_residual(moved, jm);
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b) {
      Vector lhs(6), rhs_in(6);
      for (std::size_t k = 0; k < 6; ++k) lhs[k] = n1.at(a, b, k);
      for (std::size_t u = 0; u < 6; ++u)
        for (std::size_t v = 0; v < 6; ++v) {
          const Scalar w = p(u, a) * p(v, b);
          if (w.is_zero()) continue;
          for (std::size_t k = 0; k < 6; ++k) rhs_in[k] += w * n0.at(u, v, k);
        }
      CHECK(lhs == inverse(p) * rhs_in);
    }
}

TEST_CASE("commutant_contains_identity_first") {
  for (const char* key : {"g6_2", "r4_2", "h3+h3", "L6"}) {
    const auto c = commutant(builtin_algebra(key));
    REQUIRE_FALSE(c.empty());
    CHECK(c.front() == Matrix::identity(builtin_algebra(key).dim()));
  }
  CHECK(commutant(LieAlgebra::abelian(3)).size() == 9);
  CHECK(commutant(builtin_algebra("r2_2")).size() == 1);
  // Each element commutes with every ad(e_i).
  const LieAlgebra g = builtin_algebra("g8_4");
  for (const auto& t : commutant(g))
    for (std::size_t i = 0; i < 8; ++i) {
      const EndoMap ad = adjoint(g, unit_vector(8, i));
      CHECK(t * ad == ad * t);
    }
}

TEST_CASE("obstructions") {
  const auto l4 = bi_invariant_pairing_obstruction(builtin_algebra("L4"));
  CHECK(l4.status == Status::NotExists);
  CHECK(l4.certificate == Certificate::PairingObstruction);
  CHECK(bi_invariant_pairing_obstruction(builtin_algebra("g6_2")).status == Status::Unknown);
  const auto l6 = filiform_obstruction(builtin_algebra("L6"));
  CHECK(l6.status == Status::NotExists);
  CHECK(l6.certificate == Certificate::FiliformTheorem);
  CHECK(filiform_obstruction(builtin_algebra("g6_2")).status == Status::Unknown);
}

TEST_CASE("bi_invariant_solver_through_the_commutant") {
  BiInvariantOptions opts;
  opts.probe_block_structure = false;
  for (const char* key : {"abelian2", "abelian4", "g6_2", "g8_2", "g8_3", "g8_4", "r4_2"}) {
    const LieAlgebra alg = builtin_algebra(key);
    const auto v = solve_bi_invariant(alg, opts);
    CHECK_MESSAGE(v.status == Status::Exists, key);
    REQUIRE(v.witness.has_value());
    CHECK(is_bi_invariant_cs(alg, *v.witness));
  }
  for (const char* key : {"h3+h3", "r2_2+r2_2"}) {
    const auto v = solve_bi_invariant(builtin_algebra(key), opts);
    CHECK_MESSAGE(v.status == Status::NotExists, key);
    CHECK(v.certificate == Certificate::CommutantExhausted);
  }
}

TEST_CASE("bi_invariant_verdict_is_basis_independent") {
  std::mt19937_64 rng(53);
  BiInvariantOptions opts;
  opts.probe_block_structure = false;
  for (const char* key : {"g6_2", "h3+h3", "r4_2", "r2_2+r2_2", "L4"}) {
    const LieAlgebra alg = builtin_algebra(key);
    const LieAlgebra moved = change_basis(alg, testkit::random_invertible(alg.dim(), rng));
    const auto a = solve_bi_invariant(alg, opts), b = solve_bi_invariant(moved, opts);
    CHECK_MESSAGE(a.status == b.status, key);
    if (b.witness) CHECK(is_bi_invariant_cs(moved, *b.witness));
  }
}

TEST_CASE("bi_invariant_solver_preconditions") {
  CHECK_THROWS_AS(solve_bi_invariant(builtin_algebra("h3")), OddDimension);
  CHECK_THROWS_AS(solve_bi_invariant(complexify(builtin_algebra("g6_2"))), FieldMismatch);
}

TEST_CASE("eigenspace_subalgebra_iff_integrable") {
  std::mt19937_64 rng(59);
  for (const char* key : {"g6_2", "r4_2", "h3+h3"}) {
    const LieAlgebra alg = builtin_algebra(key);
    const LieAlgebra ac = complexify(alg);
    for (int t = 0; t < 4; ++t) {
      const EndoMap j = testkit::random_complex_structure(alg.dim(), rng);
      const auto split = eigenspace_split(ac, j);
      CHECK(is_invariant_cs(alg, j) == is_subalgebra(ac, split.h));
    }
  }
}

TEST_CASE("split_sampling_is_seeded") {
  const auto a = sample_split_pairs(6, 20, 99), b = sample_split_pairs(6, 20, 99), c = sample_split_pairs(6, 20, 100);
  CHECK(a == b);
  CHECK(a != c);
  for (const auto& [g1, g2] : a) {
    CHECK(g1.dim() == 3);
    CHECK(g2.dim() == 3);
  }
}

TEST_CASE("split_scan_serial_and_parallel_agree") {
  const LieAlgebra l6c = complexify(model_filiform(6));
  const auto par = scan_filiform_splits(l6c, 60, 5);
  const auto ser = scan_filiform_splits_serial(l6c, 60, 5);
  CHECK(par.pairs == ser.pairs);
  CHECK(par.direct_sums == ser.direct_sums);
  CHECK(par.both_subalgebras == ser.both_subalgebras);
  CHECK(par.counterexamples == ser.counterexamples);
  CHECK(par.counterexamples == 0);
}

TEST_CASE("split_check_on_l4_abelian_halves") {
  const LieAlgebra l4c = complexify(model_filiform(4));
  const Subspace g1 = Subspace::coordinate(4, std::vector<std::size_t>{0, 3});
  const Subspace g2 = Subspace::coordinate(4, std::vector<std::size_t>{1, 2});
  const auto rep = filiform_split_check(l4c, g1, g2);
  CHECK(rep.direct_sum);
  CHECK(rep.g1_subalgebra);
  CHECK(rep.g2_subalgebra);
  CHECK_FALSE(rep.g1_filiform);
  CHECK_FALSE(rep.g2_filiform);
  CHECK_FALSE(rep.conjunction());
  CHECK(restrict_to(l4c, g1).tensor().is_zero());
  CHECK(restrict_to(l4c, g2).tensor().is_zero());
  CHECK_THROWS_AS(filiform_split_check(model_filiform(4), g1, g2), FieldMismatch);
}
