#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "filicheck/catalog.hpp"

namespace filicheck::cli {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolVersion = "0.1.0";

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kInputError = 2,
  kInvalidAlgebra = 3,
  kUnknownVerdict = 4,
  kOddDimension = 5,
};

/// Runs one invocation; args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Recomputes every expected property; `all_passed` is set in the returned report.
nlohmann::ordered_json verify_catalog_report(const std::vector<CatalogEntry>& entries, std::uint64_t seed);

}  // namespace filicheck::cli
