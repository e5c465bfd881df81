#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "filicheck/lie_algebra.hpp"

namespace filicheck {

enum class Status { Exists, NotExists, Unknown };

enum class Certificate {
  None,
  FiliformTheorem,     // no invariant structure on a real filiform algebra
  PairingObstruction,  // characteristic sequence is not of paired type
  CommutantExhausted,  // J^2 = -Id has no real solution in the commutant
  ExplicitWitness,     // witness re-verified exactly
  ResidualFloor,       // numeric search stayed above tolerance
};

std::string to_string(Status s);
std::string to_string(Certificate c);

struct SearchEvidence {
  double min_residual = 0;
  std::size_t restarts = 0;
  std::size_t best_restart = 0;
};

struct Verdict {
  Status status = Status::Unknown;
  Certificate certificate = Certificate::None;
  std::optional<EndoMap> witness;
  std::optional<SearchEvidence> evidence;
  std::string detail;

  static Verdict exists(EndoMap witness, std::string detail = {});
  static Verdict not_exists(Certificate c, std::string detail = {});
  static Verdict unknown(std::string detail = {});
};

/// T(i, j) = [Je_i, Je_j] - [e_i, e_j] - J[Je_i, e_j] - J[e_i, Je_j], as a tensor indexed (i, j, k).
using NijenhuisResidual = StructureTensor;

NijenhuisResidual nijenhuis_residual(const LieAlgebra& alg, const EndoMap& j);
bool squares_to_minus_identity(const EndoMap& j);
/// J^2 = -Id and the Nijenhuis residual vanishes. Throws OddDimension.
bool is_invariant_cs(const LieAlgebra& alg, const EndoMap& j);
/// J^2 = -Id and J ad(e_i) = ad(e_i) J for every basis vector. Throws OddDimension.
bool is_bi_invariant_cs(const LieAlgebra& alg, const EndoMap& j);

/// Basis of {T : T ad(e_i) = ad(e_i) T for all i}; the identity comes first.
std::vector<EndoMap> commutant(const LieAlgebra& alg);

/// Partial verdicts: NotExists when the obstruction fires, Unknown otherwise.
Verdict bi_invariant_pairing_obstruction(const LieAlgebra& alg);
Verdict filiform_obstruction(const LieAlgebra& alg);

struct BiInvariantOptions {
  std::size_t node_budget = 20000;
  /// Try the block map e(2k) -> e(2k+1) before solving in the commutant.
  bool probe_block_structure = true;
};

/// Decides existence of a bi-invariant complex structure on a real algebra.
///
/// Nilpotent inputs first go through the pairing and filiform obstructions. Otherwise J^2 = -Id
/// is solved inside the commutant algebra A: the radical of A (kernel of the trace form) is
/// factored out, the quadratic system is eliminated on A/rad, and a solution is lifted back by
/// Newton steps J <- J + J(J^2 + 1)/2, which terminate because J^2 + 1 is nilpotent.
Verdict solve_bi_invariant(const LieAlgebra& alg, const BiInvariantOptions& opts = {});

struct SplitReport {
  bool direct_sum = false;
  bool g1_subalgebra = false;
  bool g2_subalgebra = false;
  bool g1_filiform = false;
  bool g2_filiform = false;
  /// All five hold; must never be true for a filiform algebra of dimension >= 6.
  bool conjunction() const { return direct_sum && g1_subalgebra && g2_subalgebra && g1_filiform && g2_filiform; }
};

/// Checks whether g1 + g2 realizes the complex filiform algebra as a sum of two filiform subalgebras.
SplitReport filiform_split_check(const LieAlgebra& alg_c, const Subspace& g1, const Subspace& g2);

struct SplitScan {
  std::size_t pairs = 0;
  std::size_t direct_sums = 0;
  std::size_t both_subalgebras = 0;
  std::size_t counterexamples = 0;
};

/// Seeded half-dimensional pairs: coordinate splits and random Gaussian-integer subspaces
/// together with a random complement.
std::vector<std::pair<Subspace, Subspace>> sample_split_pairs(std::size_t dim, std::size_t count,
                                                              std::uint64_t seed);
SplitScan scan_filiform_splits(const LieAlgebra& alg_c, std::size_t count, std::uint64_t seed);
SplitScan scan_filiform_splits_serial(const LieAlgebra& alg_c, std::size_t count, std::uint64_t seed);

}  // namespace filicheck
