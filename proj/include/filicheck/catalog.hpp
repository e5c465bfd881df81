#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "filicheck/lie_algebra.hpp"

namespace filicheck {

struct CatalogEntry {
  std::string key;
  LieAlgebra algebra;
  std::string provenance;
  /// Property name -> expected value in report form, e.g. "char_sequence" -> "(5,1)".
  std::map<std::string, std::string> expected;
};

/// Keys: abelian<n>, L<n>, h3, h3+h3, g2_1, g4_1, g6_1, g6_2, g8_1..g8_4, r2_2, r2_2+r2_2, r4_1, r4_2.
CatalogEntry builtin(std::string_view key);
LieAlgebra builtin_algebra(std::string_view key);

/// The model filiform algebra [X1, Xi] = X(i+1), i = 2..n-1.
LieAlgebra model_filiform(std::size_t n);

/// Every entry that verify-catalog recomputes, in a fixed order.
std::vector<CatalogEntry> catalog_entries();

struct ParseOptions {
  bool check_jacobi = true;
};

/// Line-oriented text format:
///   dim <n>
///   field Q|Qi
///   labels <name_1> ... <name_n>            (optional)
///   bracket <i> <j> : <coef> e<k> [<coef> e<k> ...]
/// Indices are 1-based, '#' starts a comment, unspecified brackets are zero and [j,i] is
/// completed from [i,j]. Coefficients are `p`, `p/q`, or with field Qi `p/q+r/si`.
LieAlgebra parse_algebra(std::string_view text, const ParseOptions& opts = {});
std::string serialize_algebra(const LieAlgebra& alg);

}  // namespace filicheck
