#include <doctest.h>

#include <cmath>
#include <random>

#include "filicheck/catalog.hpp"
#include "filicheck/numeric_search.hpp"
#include "testkit.hpp"

using namespace filicheck;

namespace {

RealMatrix to_real(const EndoMap& m) {
  RealMatrix out;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out.push_back(m(r, c).re_double());
  return out;
}

EndoMap random_rational(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-4, 4), den(1, 3);
  EndoMap m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = Scalar::rational(num(rng), den(rng));
  return m;
}

}  // namespace

TEST_CASE("residual_matches_exact_oracle") {
  std::mt19937_64 rng(61);
  for (const char* key : {"L4", "g6_2", "r4_2", "h3+h3"}) {
    const LieAlgebra alg = builtin_algebra(key);
    for (int t = 0; t < 3; ++t) {
      const EndoMap j = random_rational(alg.dim(), rng);
      const double exact = std::sqrt(testkit::exact_residual_squared(alg, j).get_d());
      CHECK(invariant_residual(alg, to_real(j)) == doctest::Approx(exact).epsilon(1e-12));
    }
  }
}

TEST_CASE("jacobian_matches_central_differences") {
  std::mt19937_64 rng(67);
  std::normal_distribution<double> normal;
  for (const char* key : {"L4", "g6_2", "r4_2"}) {
    const LieAlgebra alg = builtin_algebra(key);
    const std::size_t n = alg.dim(), p = n * n;
    RealMatrix x(p);
    for (auto& v : x) v = normal(rng);
    const auto jac = invariant_jacobian(alg, x);
    const std::size_t rows = invariant_residual_vector(alg, x).size();
    REQUIRE(jac.size() == rows * p);
    const double h = 1e-6;
    double worst = 0;
    for (std::size_t c = 0; c < p; ++c) {
      RealMatrix xp = x, xm = x;
      xp[c] += h;
      xm[c] -= h;
      const auto fp = invariant_residual_vector(alg, xp), fm = invariant_residual_vector(alg, xm);
      for (std::size_t r = 0; r < rows; ++r)
        worst = std::max(worst, std::abs((fp[r] - fm[r]) / (2 * h) - jac[r * p + c]));
    }
    CHECK_MESSAGE(worst < 1e-6, key);
  }
}

TEST_CASE("residual_is_zero_at_exact_structures") {
  CHECK(invariant_residual(LieAlgebra::abelian(4), to_real(testkit::block_j(4))) == 0.0);
  const LieAlgebra r = builtin_algebra("r4_2");
  const auto v = numeric_invariant_search(r, {.restarts = 20});
  REQUIRE(v.witness.has_value());
  CHECK(invariant_residual(r, to_real(*v.witness)) < 1e-12);
}

TEST_CASE("restart_seeds_are_distinct_and_stable") {
  CHECK(restart_seed(1, 0) != restart_seed(1, 1));
  CHECK(restart_seed(1, 0) != restart_seed(2, 0));
  CHECK(restart_seed(kDefaultSeed, 5) == restart_seed(kDefaultSeed, 5));
}

TEST_CASE("rational_reconstruction") {
  CHECK(rational_reconstruct(0.5, 64) == mpq_class(1, 2));
  CHECK(rational_reconstruct(1.0 / 3.0 + 1e-13, 64) == mpq_class(1, 3));
  CHECK(rational_reconstruct(-1.9999999999, 64) == -2);
  CHECK(rational_reconstruct(3.14159265358979, 7) == mpq_class(22, 7));
  CHECK(rational_reconstruct(-0.25, 4) == mpq_class(-1, 4));
  CHECK(rational_reconstruct(0.0, 4) == 0);
}

TEST_CASE("certify_recovers_perturbed_witness") {
  const LieAlgebra r = builtin_algebra("r4_2");
  RealMatrix near = to_real(testkit::block_j(4));
  std::mt19937_64 rng(71);
  std::uniform_real_distribution<double> eps(-1e-11, 1e-11);
  for (auto& v : near) v += eps(rng);
  // Block structure on r4^2 pairs X1 with X2 and X3 with X4.
  REQUIRE(is_invariant_cs(r, testkit::block_j(4)));
  const auto cert = certify_candidate(r, near, {});
  REQUIRE(cert.has_value());
  CHECK(is_invariant_cs(r, *cert));
  RealMatrix junk(16, 0.3);
  CHECK_FALSE(certify_candidate(r, junk, {}).has_value());
}

TEST_CASE("numeric_search_certifies_where_structures_exist") {
  for (const char* key : {"abelian4", "r4_2", "r2_2+r2_2"}) {
    const LieAlgebra alg = builtin_algebra(key);
    const auto v = numeric_invariant_search(alg, {.restarts = 30});
    CHECK_MESSAGE(v.status == Status::Exists, key);
    CHECK(v.certificate == Certificate::ExplicitWitness);
    REQUIRE(v.witness.has_value());
    CHECK(is_invariant_cs(alg, *v.witness));
  }
}

TEST_CASE("numeric_search_reports_floor_on_filiform") {
  const auto v = numeric_invariant_search(builtin_algebra("L4"), {.restarts = 20});
  CHECK(v.status == Status::Unknown);
  CHECK(v.certificate == Certificate::ResidualFloor);
  REQUIRE(v.evidence.has_value());
  CHECK(v.evidence->restarts == 20);
  CHECK(v.evidence->min_residual > 1e-9);
  CHECK_FALSE(v.witness.has_value());
}

TEST_CASE("restarts_serial_and_parallel_agree") {
  for (const char* key : {"L6", "g6_2"}) {
    const LieAlgebra alg = builtin_algebra(key);
    NumericSearchOptions opts{.restarts = 12, .seed = 12345};
    const auto par = run_restarts(alg, opts);
    const auto ser = run_restarts_serial(alg, opts);
    REQUIRE(par.size() == ser.size());
    for (std::size_t i = 0; i < par.size(); ++i) {
      CHECK(par[i].index == i);
      CHECK(par[i].index == ser[i].index);
      CHECK(par[i].residual == ser[i].residual);
      CHECK(par[i].j == ser[i].j);
    }
    const auto vp = numeric_invariant_search(alg, opts), vs = numeric_invariant_search_serial(alg, opts);
    CHECK(vp.status == vs.status);
    CHECK(vp.witness == vs.witness);
  }
}

TEST_CASE("numeric_search_is_seed_deterministic") {
  const LieAlgebra l6 = builtin_algebra("L6");
  const auto a = numeric_invariant_search(l6, {.restarts = 8, .seed = 1});
  const auto b = numeric_invariant_search(l6, {.restarts = 8, .seed = 1});
  const auto c = numeric_invariant_search(l6, {.restarts = 8, .seed = 2});
  REQUIRE(a.evidence.has_value());
  CHECK(a.evidence->min_residual == b.evidence->min_residual);
  CHECK(a.evidence->best_restart == b.evidence->best_restart);
  CHECK(a.evidence->min_residual != c.evidence->min_residual);
}
