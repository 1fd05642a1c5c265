#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "hardylab/verifier.hpp"

namespace hardylab {

using json = nlohmann::ordered_json;

/// Thrown for malformed scenario files and infeasible configurations; the
/// message names the offending field.  Maps to exit code 2 at the CLI.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

struct FamilySpec {
  enum class Kind { kPartition, kInnerChain, kExplicit };
  Kind kind = Kind::kPartition;
  std::vector<std::vector<MultiIndex>> partition;
  InnerSeq chain;                      // increasing, validated at build time
  std::vector<Matrix> explicit_cols;   // generating columns per member
};

struct Thm41Spec {
  InnerSeq z1_chain, rest_chain;
  InnerSeq z1_chain_tilde, rest_chain_tilde;
  std::optional<InnerFunction1D> eta;
  int max_m = 3;
};

/// Parsed scenario file.  Unknown fields are rejected on parse.
struct ScenarioSpec {
  int schema_version = 1;
  std::string name;
  int n = 2;
  std::vector<int> caps;
  std::optional<InnerSeq> seq;
  int seq_vars = 1;
  std::optional<FamilySpec> family;
  int family_vars = 0;  // derived: n - seq_vars when a seq is present, else n
  std::vector<std::string> checks;
  ToleranceSet tol;
  std::optional<std::vector<int>> margins_full;
  std::optional<std::vector<int>> margins_family;
  std::optional<InnerSeq> candidate_phis;
  std::map<std::string, bool> expected;
  std::optional<std::uint64_t> seed;
  std::optional<Thm41Spec> thm41;
};

ScenarioSpec parse_scenario(const json& doc);
ScenarioSpec load_scenario_file(const std::string& path);

json inner1d_to_json(const InnerFunction1D& f);
json prod_to_json(const InnerFunctionProd& f);
InnerFunction1D parse_inner1d(const json& doc, const std::string& where);
InnerFunctionProd parse_inner_prod(const json& doc, int vars, const std::string& where);

struct RunResult {
  json report;
  int exit_code = 0;  // 0 consistent, 1 inconsistency (defect), 2 config error
};

struct RunOptions {
  std::optional<double> tol_override;
  std::optional<std::vector<int>> margin_override;
  bool include_timing = false;  // off by default: reports are byte-reproducible
};

/// Executes the listed checks and assembles the deterministic report.
RunResult run_scenario(const json& scenario_doc, const RunOptions& opts = {});

json verdict_to_json(const Verdict& v);

}  // namespace hardylab
