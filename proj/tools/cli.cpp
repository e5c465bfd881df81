#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "filicheck/cohomology.hpp"
#include "filicheck/complex_structures.hpp"
#include "filicheck/nilpotent.hpp"
#include "filicheck/numeric_search.hpp"

namespace filicheck::cli {

using nlohmann::ordered_json;

namespace {

struct Source {
  std::string builtin;
  std::string file;
};

struct Loaded {
  LieAlgebra algebra;
  ordered_json identity;
};

/// Exit-status carrying failure raised while handling a command.
struct CommandFailure {
  int code;
  std::string message;
};

Loaded load(const Source& src) {
  if (src.builtin.empty() == src.file.empty()) throw CommandFailure{kUsage, "give exactly one of --builtin or --file"};
  try {
    if (!src.builtin.empty()) return {builtin_algebra(src.builtin), {{"builtin", src.builtin}}};
    std::ifstream in(src.file, std::ios::binary);
    if (!in) throw CommandFailure{kInputError, "cannot read " + src.file};
    std::stringstream buf;
    buf << in.rdbuf();
    return {parse_algebra(buf.str()), {{"file", src.file}}};
  } catch (const JacobiFailure& e) {
    throw CommandFailure{kInvalidAlgebra, std::string("invalid algebra: ") + e.what()};
  } catch (const ParseError& e) {
    throw CommandFailure{kInputError, std::string("parse error: ") + e.what()};
  } catch (const Error& e) {
    throw CommandFailure{kInputError, e.what()};
  }
}

void require_valid(const LieAlgebra& alg) {
  const auto rep = validate(alg);
  if (!rep.ok()) throw CommandFailure{kInvalidAlgebra, "invalid algebra: antisymmetry or Jacobi violated"};
}

ordered_json header(const std::string& command, const ordered_json& input, std::uint64_t seed) {
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["tool"] = "filicheck";
  j["version"] = kToolVersion;
  j["command"] = command;
  if (!input.is_null()) j["input"] = input;
  j["seed"] = seed;
  return j;
}

ordered_json sizes(const std::vector<std::size_t>& v) {
  ordered_json a = ordered_json::array();
  for (auto x : v) a.push_back(x);
  return a;
}

ordered_json vector_json(const Vector& v) {
  ordered_json a = ordered_json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

ordered_json matrix_json(const EndoMap& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(vector_json(m.row(r)));
  return rows;
}

ordered_json verdict_json(const Verdict& v) {
  ordered_json j;
  j["status"] = to_string(v.status);
  j["certificate"] = to_string(v.certificate);
  if (v.witness) j["witness"] = matrix_json(*v.witness);
  if (v.evidence) {
    j["evidence"] = {{"min_residual", v.evidence->min_residual},
                     {"restarts", v.evidence->restarts},
                     {"best_restart", v.evidence->best_restart}};
  }
  if (!v.detail.empty()) j["detail"] = v.detail;
  return j;
}

void write_text(std::ostream& out, const ordered_json& j, const std::string& prefix = "") {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
    if (it->is_object()) {
      write_text(out, *it, key);
    } else if (it->is_string()) {
      out << key << ": " << it->get<std::string>() << "\n";
    } else {
      out << key << ": " << it->dump() << "\n";
    }
  }
}

void emit(std::ostream& out, const ordered_json& j, bool json) {
  if (json) {
    out << j.dump(2) << "\n";
  } else {
    write_text(out, j);
  }
}

ordered_json analyze(const LieAlgebra& alg) {
  ordered_json j;
  j["dim"] = alg.dim();
  j["field"] = to_string(alg.field());
  const auto rep = validate(alg);
  j["validation"] = {{"ok", rep.ok()},
                     {"antisymmetry_violations", rep.antisymmetry.size()},
                     {"jacobi_violations", rep.jacobi.size()}};
  const auto series = lower_central_series(alg);
  j["central_series"] = sizes(series.dims);
  j["nilpotent"] = series.nilpotent();
  j["filiform"] = is_filiform(alg);
  if (series.nilpotent()) {
    const auto cs = characteristic_sequence(alg);
    j["char_sequence"] = sizes(cs.sequence.parts);
    j["char_witness"] = vector_json(cs.witness);
    j["paired"] = pairing_pattern_holds(cs.sequence);
  }
  return j;
}

std::string dims_string(const std::vector<std::size_t>& d) {
  CharSequence c{d};
  return c.str();
}

std::map<std::string, std::string> recompute(const CatalogEntry& e) {
  std::map<std::string, std::string> got;
  const auto& alg = e.algebra;
  const auto series = lower_central_series(alg);
  for (const auto& [prop, want] : e.expected) {
    try {
      if (prop == "nilpotent") {
        got[prop] = series.nilpotent() ? "true" : "false";
      } else if (prop == "filiform") {
        got[prop] = is_filiform(alg) ? "true" : "false";
      } else if (prop == "central_series") {
        got[prop] = dims_string(series.dims);
      } else if (prop == "char_sequence") {
        got[prop] = characteristic_sequence(alg).sequence.str();
      } else if (prop == "bi_invariant") {
        got[prop] = to_string(solve_bi_invariant(alg).status);
      } else if (prop == "invariant") {
        got[prop] = to_string(filiform_obstruction(alg).status);
      } else {
        got[prop] = "unsupported property";
      }
    } catch (const std::exception& ex) {
      got[prop] = std::string("error: ") + ex.what();
    }
  }
  return got;
}

std::uint64_t resolve_seed(const CLI::Option* flag, std::uint64_t flag_value) {
  if (flag->count() > 0) return flag_value;
  if (const char* env = std::getenv("FILICHECK_SEED"); env && *env) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw CommandFailure{kUsage, "FILICHECK_SEED is not an unsigned integer"};
    }
  }
  return kDefaultSeed;
}

}  // namespace

ordered_json verify_catalog_report(const std::vector<CatalogEntry>& entries, std::uint64_t seed) {
  ordered_json j = header("verify-catalog", nullptr, seed);
  ordered_json list = ordered_json::array();
  bool all = true;
  for (const auto& e : entries) {
    const auto got = recompute(e);
    ordered_json item;
    item["key"] = e.key;
    item["provenance"] = e.provenance;
    ordered_json props = ordered_json::object();
    ordered_json diff = ordered_json::array();
    for (const auto& [prop, want] : e.expected) {
      props[prop] = got.at(prop);
      if (got.at(prop) != want) diff.push_back({{"property", prop}, {"expected", want}, {"actual", got.at(prop)}});
    }
    item["ok"] = diff.empty();
    item["properties"] = props;
    if (!diff.empty()) item["mismatches"] = diff;
    all = all && diff.empty();
    list.push_back(item);
  }
  j["entries"] = list;
  j["all_passed"] = all;
  return j;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Invariant and bi-invariant complex structures on Lie algebras"};
  app.require_subcommand(1);

  Source src;
  bool json = false;
  std::uint64_t seed_flag = 0;
  std::string mode = "bi";
  std::size_t restarts = 50;
  double tol = 1e-9;

  auto add_common = [&](CLI::App* sub) {
    auto* grp = sub->add_option_group("source");
    grp->add_option("--builtin", src.builtin, "builtin algebra key");
    grp->add_option("--file", src.file, "algebra text file");
    sub->add_flag("--json", json, "structured output");
    return sub->add_option("--seed", seed_flag, "random seed (overrides FILICHECK_SEED)");
  };

  auto* analyze_cmd = app.add_subcommand("analyze", "central series, filiform test, characteristic sequence");
  auto* analyze_seed = add_common(analyze_cmd);
  auto* search_cmd = app.add_subcommand("search", "decide existence of (bi-)invariant complex structures");
  auto* search_seed = add_common(search_cmd);
  search_cmd->add_option("--mode", mode, "bi | invariant")->check(CLI::IsMember({"bi", "invariant"}));
  search_cmd->add_option("--restarts", restarts, "numeric search restarts")->check(CLI::PositiveNumber);
  search_cmd->add_option("--tol", tol, "residual tolerance");
  auto* verify_cmd = app.add_subcommand("verify-catalog", "recompute every builtin's expected properties");
  verify_cmd->add_flag("--json", json, "structured output");
  auto* verify_seed = verify_cmd->add_option("--seed", seed_flag, "random seed (overrides FILICHECK_SEED)");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kUsage;
  }

  try {
    if (analyze_cmd->parsed()) {
      const std::uint64_t seed = resolve_seed(analyze_seed, seed_flag);
      const auto loaded = load(src);
      require_valid(loaded.algebra);
      ordered_json j = header("analyze", loaded.identity, seed);
      j["results"] = analyze(loaded.algebra);
      emit(out, j, json);
      return kOk;
    }
    if (search_cmd->parsed()) {
      const std::uint64_t seed = resolve_seed(search_seed, seed_flag);
      if (!(tol > 0)) throw CommandFailure{kUsage, "--tol must be positive"};
      const auto loaded = load(src);
      require_valid(loaded.algebra);
      const auto& alg = loaded.algebra;
      if (alg.dim() % 2 != 0) throw CommandFailure{kOddDimension, "complex structures need even dimension"};
      if (alg.field() != Field::Q) throw CommandFailure{kInputError, "search runs on real (field Q) algebras"};
      ordered_json j = header("search", loaded.identity, seed);
      j["mode"] = mode;
      Verdict verdict;
      if (mode == "bi") {
        verdict = solve_bi_invariant(alg);
      } else {
        verdict = filiform_obstruction(alg);
        if (verdict.status != Status::NotExists) {
          NumericSearchOptions opts;
          opts.restarts = restarts;
          opts.tol = tol;
          opts.seed = seed;
          verdict = numeric_invariant_search(alg, opts);
        }
      }
      j["verdict"] = verdict_json(verdict);
      if (verdict.witness && verdict.status == Status::Exists && mode == "invariant")
        j["verdict"]["coboundary_identity"] = verify_coboundary_identity(alg, *verdict.witness);
      emit(out, j, json);
      return verdict.status == Status::Unknown ? kUnknownVerdict : kOk;
    }
    if (verify_cmd->parsed()) {
      const std::uint64_t seed = resolve_seed(verify_seed, seed_flag);
      const ordered_json j = verify_catalog_report(catalog_entries(), seed);
      emit(out, j, json);
      return j["all_passed"].get<bool>() ? kOk : kInvalidAlgebra;
    }
  } catch (const CommandFailure& f) {
    err << f.message << "\n";
    return f.code;
  } catch (const OddDimension& e) {
    err << e.what() << "\n";
    return kOddDimension;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kUsage;
}

}  // namespace filicheck::cli
