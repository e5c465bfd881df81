#include <doctest.h>

#include <random>

#include "filicheck/catalog.hpp"
#include "filicheck/errors.hpp"
#include "filicheck/lie_algebra.hpp"
#include "testkit.hpp"

using namespace filicheck;
using testkit::int_vector;

namespace {

Vector random_vector(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> dist(-3, 3);
  Vector v;
  for (std::size_t i = 0; i < n; ++i) v.emplace_back(dist(rng));
  return v;
}

}  // namespace

TEST_CASE("heisenberg_bracket_and_antisymmetry") {
  const LieAlgebra h = builtin_algebra("h3");
  const Vector e1 = unit_vector(3, 0), e2 = unit_vector(3, 1), e3 = unit_vector(3, 2);
  CHECK(bracket(h, e1, e2) == e3);
  CHECK(bracket(h, e2, e1) == Scalar(-1) * e3);
  CHECK(is_zero(bracket(h, e1, e3)));
  CHECK(validate(h).ok());
}

TEST_CASE("jacobi_violation_is_reported") {
  // [e1,e2] = e3, [e1,e3] = e1: J(e1,e2,e3) = -e3.
  LieAlgebra bad = LieAlgebra::abelian(3);
  bad.set_bracket(0, 1, unit_vector(3, 2));
  bad.set_bracket(0, 2, unit_vector(3, 0));
  const auto rep = validate(bad);
  CHECK(rep.antisymmetry.empty());
  REQUIRE(rep.jacobi.size() == 1);
  CHECK(rep.jacobi[0] == JacobiViolation{0, 1, 2, 2});
  const Vector e1 = unit_vector(3, 0), e2 = unit_vector(3, 1), e3 = unit_vector(3, 2);
  const Vector cyc = bracket(bad, bracket(bad, e1, e2), e3) + bracket(bad, bracket(bad, e2, e3), e1) +
                     bracket(bad, bracket(bad, e3, e1), e2);
  CHECK(cyc == Scalar(-1) * e3);
}

TEST_CASE("solvable_example_with_two_brackets_is_jacobi_valid") {
  LieAlgebra alg = LieAlgebra::abelian(3);
  alg.set_bracket(0, 1, unit_vector(3, 0));
  alg.set_bracket(1, 2, unit_vector(3, 2));
  CHECK(validate(alg).ok());
}

TEST_CASE("antisymmetry_and_field_violations_are_reported") {
  StructureTensor t(2);
  t.at(0, 1, 0) = Scalar(1);
  const auto rep = validate(LieAlgebra(Field::Q, t));
  CHECK_FALSE(rep.ok());
  CHECK(rep.antisymmetry.size() == 1);

  StructureTensor c(2);
  c.at(0, 1, 0) = Scalar::i();
  c.at(1, 0, 0) = -Scalar::i();
  CHECK(validate(LieAlgebra(Field::Q, c)).field.size() == 2);
  CHECK(validate(LieAlgebra(Field::Qi, c)).ok());
}

TEST_CASE("validate_agrees_with_jacobi_on_random_triples") {
  std::mt19937_64 rng(3);
  for (const char* key : {"g6_2", "g8_3", "g8_4", "r4_2", "L7"}) {
    const LieAlgebra alg = builtin_algebra(key);
    REQUIRE(validate(alg).ok());
    for (int t = 0; t < 10; ++t) {
      const Vector x = random_vector(alg.dim(), rng), y = random_vector(alg.dim(), rng),
                   z = random_vector(alg.dim(), rng);
      const Vector cyc = bracket(alg, bracket(alg, x, y), z) + bracket(alg, bracket(alg, y, z), x) +
                         bracket(alg, bracket(alg, z, x), y);
      CHECK(is_zero(cyc));
    }
  }
}

TEST_CASE("adjoint_matches_bracket") {
  std::mt19937_64 rng(5);
  const LieAlgebra alg = builtin_algebra("g8_3");
  for (int t = 0; t < 10; ++t) {
    const Vector x = random_vector(8, rng), y = random_vector(8, rng);
    CHECK(adjoint(alg, x) * y == bracket(alg, x, y));
  }
}

TEST_CASE("change_basis_round_trip_and_equivariance") {
  std::mt19937_64 rng(9);
  for (const char* key : {"g6_2", "L6", "r4_2", "h3+h3"}) {
    const LieAlgebra alg = builtin_algebra(key);
    const std::size_t n = alg.dim();
    const Matrix p = testkit::random_invertible(n, rng);
    const LieAlgebra moved = change_basis(alg, p);
    CHECK(validate(moved).ok());
    CHECK(change_basis(moved, inverse(p)).tensor() == alg.tensor());
    const Vector x = random_vector(n, rng), y = random_vector(n, rng);
    CHECK(p * bracket(moved, x, y) == bracket(alg, p * x, p * y));
  }
}

TEST_CASE("subalgebras_and_ideals_in_heisenberg") {
  const LieAlgebra h = builtin_algebra("h3");
  const Subspace center = Subspace::coordinate(3, std::vector<std::size_t>{2});
  const Subspace line = Subspace::coordinate(3, std::vector<std::size_t>{0});
  const Subspace plane = Subspace::coordinate(3, std::vector<std::size_t>{0, 1});
  CHECK(is_ideal(h, center));
  CHECK(is_subalgebra(h, line));
  CHECK_FALSE(is_ideal(h, line));
  CHECK_FALSE(is_subalgebra(h, plane));
  CHECK(bracket_span(h, Subspace::full(3), Subspace::full(3)) == center);
}

TEST_CASE("direct_sum_and_restriction") {
  const LieAlgebra h = builtin_algebra("h3");
  const LieAlgebra hh = direct_sum(h, h);
  CHECK(hh.dim() == 6);
  CHECK(validate(hh).ok());
  CHECK(bracket(hh, unit_vector(6, 3), unit_vector(6, 4)) == unit_vector(6, 5));
  CHECK(is_zero(bracket(hh, unit_vector(6, 0), unit_vector(6, 4))));
  const Subspace second = Subspace::coordinate(6, std::vector<std::size_t>{3, 4, 5});
  REQUIRE(is_ideal(hh, second));
  CHECK(restrict_to(hh, second).tensor() == h.tensor());
  CHECK_THROWS_AS(restrict_to(hh, Subspace::coordinate(6, std::vector<std::size_t>{0, 1})), PreconditionFailed);
}

TEST_CASE("complex_vector_rejected_on_real_algebra") {
  const LieAlgebra h = builtin_algebra("h3");
  const Vector v{Scalar::i(), Scalar(0), Scalar(0)};
  CHECK_THROWS_AS(check_vector(h, v), FieldMismatch);
  CHECK_THROWS_AS(check_vector(h, int_vector({1, 2})), DimensionMismatch);
}
