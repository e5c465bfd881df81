#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "filicheck/complex_structures.hpp"

namespace filicheck {

inline constexpr std::uint64_t kDefaultSeed = 20240917;

struct NumericSearchOptions {
  std::size_t restarts = 50;
  /// Threshold on the Frobenius norm sqrt(|J^2+I|^2 + |N(J)|^2).
  double tol = 1e-9;
  std::uint64_t seed = kDefaultSeed;
  std::size_t max_iterations = 400;
};

/// Row-major n x n candidate for J in double precision.
using RealMatrix = std::vector<double>;

struct RestartOutcome {
  std::size_t index = 0;
  double residual = 0;
  RealMatrix j;
};

/// sqrt(|J^2 + I|_F^2 + |N(J)|_F^2) evaluated in floating point.
double invariant_residual(const LieAlgebra& alg, const RealMatrix& j);

/// The residual components: J^2 + I entries, then sqrt(2) N(e_i, e_j) for i < j.
std::vector<double> invariant_residual_vector(const LieAlgebra& alg, const RealMatrix& j);
/// Analytic Jacobian of the residual vector, row-major (rows x n^2).
std::vector<double> invariant_jacobian(const LieAlgebra& alg, const RealMatrix& j);

/// Independent seed for each restart, so results do not depend on scheduling.
std::uint64_t restart_seed(std::uint64_t seed, std::size_t index);

/// Levenberg-Marquardt minimization from every seeded start. The parallel version spreads
/// restarts over OpenMP threads; both return outcomes ordered by restart index.
std::vector<RestartOutcome> run_restarts(const LieAlgebra& alg, const NumericSearchOptions& opts);
std::vector<RestartOutcome> run_restarts_serial(const LieAlgebra& alg, const NumericSearchOptions& opts);

/// Nearest rational with denominator <= max_den, from the continued-fraction convergents.
mpq_class rational_reconstruct(double x, long max_den);

/// Rounds a near-solution to an exact invariant structure: first plain rounding of every
/// entry, then entry-by-entry snapping to small rationals with re-optimization of the rest.
std::optional<EndoMap> certify_candidate(const LieAlgebra& alg, const RealMatrix& j, const NumericSearchOptions& opts);

/// Exists only with an exactly verified witness; otherwise Unknown, with ResidualFloor
/// evidence when no restart got below tol.
Verdict numeric_invariant_search(const LieAlgebra& alg, const NumericSearchOptions& opts = {});
Verdict numeric_invariant_search_serial(const LieAlgebra& alg, const NumericSearchOptions& opts = {});

}  // namespace filicheck
