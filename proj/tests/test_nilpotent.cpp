#include <doctest.h>

#include <random>

#include "filicheck/catalog.hpp"
#include "filicheck/errors.hpp"
#include "filicheck/nilpotent.hpp"
#include "testkit.hpp"

using namespace filicheck;

TEST_CASE("lower_central_series_dimensions") {
  CHECK(lower_central_series(builtin_algebra("L6")).dims == std::vector<std::size_t>{6, 4, 3, 2, 1, 0});
  CHECK(lower_central_series(builtin_algebra("g6_2")).dims == std::vector<std::size_t>{6, 2, 0});
  CHECK(lower_central_series(builtin_algebra("abelian4")).dims == std::vector<std::size_t>{4, 0});
  // Solvable, not nilpotent: the series stabilizes.
  const auto r = lower_central_series(builtin_algebra("r4_2"));
  CHECK(r.dims == std::vector<std::size_t>{4, 2});
  CHECK_FALSE(r.nilpotent());
  CHECK_FALSE(is_nilpotent(builtin_algebra("r2_2")));
}

TEST_CASE("filiform_detection") {
  for (std::size_t n = 3; n <= 10; ++n) CHECK(is_filiform(model_filiform(n)));
  for (const char* key : {"g6_2", "g8_2", "g8_3", "g8_4", "h3+h3", "abelian4", "r4_2"})
    CHECK_MESSAGE(!is_filiform(builtin_algebra(key)), key);
  CHECK_FALSE(is_filiform(LieAlgebra::abelian(2)));
}

TEST_CASE("jordan_profile_of_shift_blocks") {
  // Blocks of sizes 3 and 1.
  Matrix s(4, 4);
  s(1, 0) = Scalar(1);
  s(2, 1) = Scalar(1);
  CHECK(jordan_profile(s).parts == std::vector<std::size_t>{3, 1});
  CHECK(jordan_profile(Matrix::zero(3)).parts == std::vector<std::size_t>{1, 1, 1});
  CHECK_THROWS_AS(jordan_profile(Matrix::identity(2)), NotNilpotent);
}

TEST_CASE("jordan_profile_is_conjugation_invariant") {
  std::mt19937_64 rng(17);
  Matrix s(6, 6);
  s(1, 0) = Scalar(1);
  s(2, 1) = Scalar(1);
  s(4, 3) = Scalar(1);
  const auto base = jordan_profile(s);
  for (int t = 0; t < 5; ++t) {
    const Matrix p = testkit::random_invertible(6, rng);
    CHECK(jordan_profile(p * s * inverse(p)) == base);
  }
}

TEST_CASE("characteristic_sequence_matches_brute_force_oracle") {
  for (const char* key : {"h3", "L4", "L5", "L6", "g6_2", "h3+h3", "abelian4", "L7", "g8_3", "g8_4", "g8_2", "L8"}) {
    const LieAlgebra alg = builtin_algebra(key);
    const auto got = characteristic_sequence(alg);
    CHECK_MESSAGE(got.sequence == testkit::brute_force_char_sequence(alg), key);
    CHECK(got.sequence.total() == alg.dim());
    CHECK(is_characteristic_vector(alg, got.witness));
  }
}

TEST_CASE("characteristic_sequence_is_basis_independent") {
  std::mt19937_64 rng(23);
  for (const char* key : {"L6", "g6_2"}) {
    const LieAlgebra alg = builtin_algebra(key);
    const LieAlgebra moved = change_basis(alg, testkit::random_invertible(alg.dim(), rng));
    CHECK(characteristic_sequence(moved).sequence == characteristic_sequence(alg).sequence);
  }
}

TEST_CASE("characteristic_sequence_serial_and_parallel_agree") {
  for (const char* key : {"L8", "g8_3", "g6_2", "abelian6"}) {
    const LieAlgebra alg = builtin_algebra(key);
    const auto par = characteristic_sequence(alg);
    const auto ser = characteristic_sequence_serial(alg);
    CHECK(par.sequence == ser.sequence);
    CHECK(par.witness == ser.witness);
  }
}

TEST_CASE("characteristic_vector_search") {
  const LieAlgebra alg = builtin_algebra("L6");
  const Vector x = find_characteristic_vector(alg);
  CHECK(is_characteristic_vector(alg, x));
  // X6 lies in [g,g]; X2 gives ad with profile (2,1,1,1,1).
  CHECK_FALSE(is_characteristic_vector(alg, unit_vector(6, 5)));
  CHECK_FALSE(is_characteristic_vector(alg, unit_vector(6, 1)));
  CHECK(is_characteristic_vector(alg, unit_vector(6, 0)));
}

TEST_CASE("pairing_pattern") {
  CHECK(pairing_pattern_holds(CharSequence{{2, 2, 1, 1}}));
  CHECK(pairing_pattern_holds(CharSequence{{3, 3, 1, 1}}));
  CHECK(pairing_pattern_holds(CharSequence{{1, 1, 1, 1}}));
  CHECK_FALSE(pairing_pattern_holds(CharSequence{{3, 1}}));
  CHECK_FALSE(pairing_pattern_holds(CharSequence{{2, 1, 1}}));
  CHECK_FALSE(pairing_pattern_holds(CharSequence{{2, 2, 2, 1, 1}}));
  CHECK(CharSequence{{5, 1}}.str() == "(5,1)");
  CHECK(CharSequence{{3, 1}} > CharSequence{{2, 2}});
}
