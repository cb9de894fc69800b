#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "phenyl/checked.hpp"
#include "phenyl/squeeze.hpp"

namespace phenyl::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kInputError = 2,
  kOverflow = 3,
  kVerificationFailure = 4,
};

using Json = nlohmann::ordered_json;

struct ComputeOptions {
  bool with_oracle = false;
  Int oracle_edge_bound = 200;
  std::string dump_pairs_path;  // empty: no dump
};

/// Full pipeline on one spec. Throws SqueezeError, OverflowError or
/// IdentityViolation.
Json compute_report(const SqueezeSpec& spec, const ComputeOptions& opts);

/// The report without its timing block, for determinism checks.
Json strip_timings(Json report);

/// Values a verification run compares against the oracles.
struct CutValues {
  Int w_e_hat = 0;
  Int w_e = 0;
  Int ww_e = 0;
};

struct VerifyOptions {
  int max_n = 6;
  std::uint64_t seed = 1;
  int random_count = 50;
  /// Test hook applied to the cut-method values before comparison.
  std::function<void(const SqueezeSpec&, CutValues&)> fault;
};

struct VerifyOutcome {
  bool passed = true;
  int instances = 0;
  std::string failure;
  std::optional<SqueezeSpec> counterexample;
};

/// Cut method against oracles on one spec: hat-W_e, W_e, WW_e, Theta-classes
/// versus Theta*, and the partial-cube check. Returns the first mismatch.
std::optional<std::string> verify_instance(const SqueezeSpec& spec, const VerifyOptions& opts = {});

VerifyOutcome run_verification(const VerifyOptions& opts);

struct BenchOptions {
  Int oracle_edge_bound = 200;
  Int hyper_edge_bound = 5000;
  int repeats = 3;
};

struct BenchRow {
  int n = 0;
  Int edges = 0;
  double cut_seconds = 0;
  std::optional<double> hyper_seconds;
  std::optional<double> oracle_seconds;
};

/// Times edge_wiener_cut (best of `repeats`), the hyper-Wiener pair sum and
/// the line-graph oracle on PH_n for each n.
std::vector<BenchRow> run_bench(const std::vector<int>& ns, const BenchOptions& opts);

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows);

/// Least-squares slope of log(y) against log(x).
double log_log_slope(const std::vector<double>& xs, const std::vector<double>& ys);

// Subcommands. Each returns a process exit code and reports problems on err.
int cmd_generate(const std::string& kind, int n, std::ostream& out, std::ostream& err);
int cmd_compute(const std::string& input_path, const ComputeOptions& opts, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyOptions& opts, bool json, std::ostream& out, std::ostream& err);
int cmd_bench(const std::vector<int>& ns, const BenchOptions& opts, bool json, std::ostream& out, std::ostream& err);
int cmd_export(const std::string& input_path, std::ostream& out, std::ostream& err);
int cmd_oracle(const std::string& edges_path, std::ostream& out, std::ostream& err);

}  // namespace phenyl::cli
