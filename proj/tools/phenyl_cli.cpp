#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "phenyl/cli.hpp"

int main(int argc, char** argv) {
  using namespace phenyl::cli;

  CLI::App app{"Edge-Wiener and edge-hyper-Wiener indices of phenylenes by the cut method"};
  app.require_subcommand(1);

  auto* generate = app.add_subcommand("generate", "Emit a squeeze spec for a phenylene family");
  std::string kind;
  int gen_n = 0;
  generate->add_option("kind", kind, "Family (linear)")->required();
  generate->add_option("n", gen_n, "Number of hexagons")->required();

  auto* compute = app.add_subcommand("compute", "Compute the index report for a squeeze spec");
  std::string input;
  ComputeOptions copts;
  compute->add_option("--input,input", input, "Spec file")->required();
  compute->add_flag("--with-oracle", copts.with_oracle, "Include brute-force oracle values");
  compute->add_option("--oracle-edge-bound", copts.oracle_edge_bound, "Skip oracles above this edge count");
  compute->add_option("--dump-pairs", copts.dump_pairs_path, "Write per-pair Theta-class counts as CSV");
  bool compute_json = true;
  compute->add_flag("--json", compute_json, "JSON output (the default)");

  auto* verify = app.add_subcommand("verify", "Check the cut method against the oracles");
  VerifyOptions vopts;
  bool verify_json = false;
  verify->add_option("--max-n", vopts.max_n, "Largest hexagon count")->check(CLI::PositiveNumber);
  verify->add_option("--seed", vopts.seed, "Seed for random branched specs");
  verify->add_option("--random", vopts.random_count, "Number of random branched specs")->check(CLI::NonNegativeNumber);
  verify->add_flag("--json", verify_json, "JSON summary");

  auto* bench = app.add_subcommand("bench", "Time the cut method on linear phenylenes");
  std::vector<int> sizes;
  BenchOptions bopts;
  bool bench_json = false;
  bench->add_option("n", sizes, "Hexagon counts")->required();
  bench->add_option("--oracle-edge-bound", bopts.oracle_edge_bound, "Time the oracle up to this edge count");
  bench->add_option("--hyper-edge-bound", bopts.hyper_edge_bound, "Time the pair sum up to this edge count");
  bench->add_option("--repeat", bopts.repeats, "Repetitions per timing (best is kept)");
  bench->add_flag("--json", bench_json, "JSON rows instead of CSV");

  auto* exporter = app.add_subcommand("export", "Print the phenylene edge list 'u v class'");
  std::string export_input;
  exporter->add_option("--input,input", export_input, "Spec file")->required();

  auto* oracle = app.add_subcommand("oracle", "Brute-force indices of an edge-list graph");
  std::string edges_path;
  oracle->add_option("--edges,edges", edges_path, "Edge list file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  if (*generate) return cmd_generate(kind, gen_n, std::cout, std::cerr);
  if (*compute) return cmd_compute(input, copts, std::cout, std::cerr);
  if (*verify) return cmd_verify(vopts, verify_json, std::cout, std::cerr);
  if (*bench) return cmd_bench(sizes, bopts, bench_json, std::cout, std::cerr);
  if (*exporter) return cmd_export(export_input, std::cout, std::cerr);
  if (*oracle) return cmd_oracle(edges_path, std::cout, std::cerr);
  return kUsage;
}
