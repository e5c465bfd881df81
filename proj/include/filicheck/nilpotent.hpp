#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "filicheck/lie_algebra.hpp"

namespace filicheck {

/// Non-increasing partition of the dimension; compared lexicographically.
struct CharSequence {
  std::vector<std::size_t> parts;

  std::size_t total() const;
  std::string str() const;  // "(5,1)"
  friend auto operator<=>(const CharSequence&, const CharSequence&) = default;
};

struct SeriesProfile {
  std::vector<Subspace> terms;  // C^0 g = g, C^1 g, ...
  std::vector<std::size_t> dims;
  bool nilpotent() const { return !dims.empty() && dims.back() == 0; }
};

/// C^1 = [g,g], C^{i+1} = [g, C^i]; stops at {0} or when the dimension stabilizes.
SeriesProfile lower_central_series(const LieAlgebra& alg);
bool is_nilpotent(const LieAlgebra& alg);
/// Maximal class: dim C^1 = n-2 and dim C^i = n-i-1 for 2 <= i <= n-1. False below dimension 3.
bool is_filiform(const LieAlgebra& alg);

/// Jordan block sizes of a nilpotent map, from the ranks of its powers. Throws NotNilpotent.
CharSequence jordan_profile(const EndoMap& n);

struct CharacteristicResult {
  CharSequence sequence;
  Vector witness;
};

/// The deterministic sample of elements outside [g,g] over which c(g) is maximized:
/// basis vectors, then pairwise sums e_i + e_j, then three seeded integer vectors in [-3,3]^n.
std::vector<Vector> characteristic_sample(const LieAlgebra& alg);

/// Lexicographic maximum of jordan_profile(ad x) over the sample. Profiles are evaluated in
/// parallel; the first sample index attaining the maximum is the witness.
CharacteristicResult characteristic_sequence(const LieAlgebra& alg);
/// Single-threaded reference for characteristic_sequence.
CharacteristicResult characteristic_sequence_serial(const LieAlgebra& alg);

bool is_characteristic_vector(const LieAlgebra& alg, const Vector& x);
Vector find_characteristic_vector(const LieAlgebra& alg);

/// The parts split entirely into equal adjacent pairs: (c1,c1,c2,c2,...,1,1).
bool pairing_pattern_holds(const CharSequence& c);

}  // namespace filicheck
