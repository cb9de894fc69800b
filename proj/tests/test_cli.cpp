#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "phenyl/cli.hpp"
#include "support.hpp"

using namespace phenyl;
using namespace phenyl::cli;
namespace t = phenyl::testing;
namespace fs = std::filesystem;

namespace {

struct TempFile {
  fs::path path;
  explicit TempFile(std::string_view content, std::string_view name = "spec.txt") {
    path = fs::temp_directory_path() / (std::to_string(::getpid()) + "_" + std::string(name));
    std::ofstream(path) << content;
  }
  ~TempFile() { fs::remove(path); }
};

struct CmdResult {
  int code;
  std::string out;
  std::string err;
};

template <typename F>
CmdResult capture(F&& f) {
  std::ostringstream out, err;
  const int code = f(out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Generate, Linear) {
  CmdResult r = capture([](auto& o, auto& e) { return cmd_generate("linear", 3, o, e); });
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, format_squeeze_spec(generate_linear_spec(3)));
  EXPECT_EQ(parse_squeeze_spec(r.out), generate_linear_spec(3));

  r = capture([](auto& o, auto& e) { return cmd_generate("linear", 1, o, e); });
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(parse_squeeze_spec(r.out), (SqueezeSpec{1, {}}));

  r = capture([](auto& o, auto& e) { return cmd_generate("linear", 0, o, e); });
  EXPECT_EQ(r.code, kUsage);
  EXPECT_TRUE(r.out.empty());
  r = capture([](auto& o, auto& e) { return cmd_generate("spiral", 3, o, e); });
  EXPECT_EQ(r.code, kUsage);
}

TEST(Compute, SingleHexagonReport) {
  const Json j = compute_report(generate_linear_spec(1), {});
  EXPECT_EQ(j["schema"], "phenyl.index-report.v1");
  EXPECT_EQ(j["indices"]["w_e"], 27);
  EXPECT_EQ(j["indices"]["ww_e"], 42);
  EXPECT_EQ(j["indices"]["w_e_hat"], 12);
  EXPECT_EQ(j["methods"]["w_e"], "cut");
  EXPECT_EQ(j["input"]["vertices"], 6);
  EXPECT_EQ(j["input"]["theta_class_count"], 3);
  EXPECT_TRUE(j["formula"]["agrees"].get<bool>());
}

TEST(Compute, OracleAgreesFieldByField) {
  ComputeOptions opts;
  opts.with_oracle = true;
  const Json j = compute_report(generate_linear_spec(2), opts);
  ASSERT_TRUE(j.contains("oracle"));
  EXPECT_TRUE(j["oracle"]["agrees"].get<bool>());
  for (const char* key : {"w_e_hat", "w_e", "ww_e"}) EXPECT_EQ(j["oracle"][key], j["indices"][key]) << key;
  EXPECT_EQ(j["indices"]["w_v"], 180);
  EXPECT_EQ(j["indices"]["w_ve"], 324);
  EXPECT_EQ(j["indices"]["ww"], 396);
  EXPECT_EQ(j["methods"]["w_v"], "oracle");
}

TEST(Compute, OracleSkippedAboveBound) {
  ComputeOptions opts;
  opts.with_oracle = true;
  opts.oracle_edge_bound = 10;
  const Json j = compute_report(generate_linear_spec(2), opts);
  EXPECT_TRUE(j["oracle"].contains("skipped"));
  EXPECT_FALSE(j["indices"].contains("w_v"));
}

TEST(Compute, DeterministicApartFromTimings) {
  const SqueezeSpec s = parse_squeeze_spec(t::kBranched4);
  ComputeOptions opts;
  opts.with_oracle = true;
  const Json a = compute_report(s, opts);
  const Json b = compute_report(s, opts);
  EXPECT_EQ(strip_timings(a).dump(2), strip_timings(b).dump(2));
  EXPECT_FALSE(strip_timings(a).contains("timing_us"));
  EXPECT_FALSE(a.contains("formula"));
}

TEST(Compute, FileErrorsAndExitCodes) {
  const TempFile coil(t::kCoil6, "coil.txt");
  CmdResult r = capture([&](auto& o, auto& e) { return cmd_compute(coil.path.string(), {}, o, e); });
  EXPECT_EQ(r.code, kInputError);
  EXPECT_NE(r.err.find("hexagons"), std::string::npos) << r.err;

  r = capture([](auto& o, auto& e) { return cmd_compute("/nonexistent/spec.txt", {}, o, e); });
  EXPECT_EQ(r.code, kInputError);

  const TempFile bad("phenylene v1\n2\n2 1 9\n", "bad.txt");
  r = capture([&](auto& o, auto& e) { return cmd_compute(bad.path.string(), {}, o, e); });
  EXPECT_EQ(r.code, kInputError);
  EXPECT_NE(r.err.find("line 3"), std::string::npos) << r.err;

  const TempFile good("phenylene v1\n1\n", "good.txt");
  r = capture([&](auto& o, auto& e) { return cmd_compute(good.path.string(), {}, o, e); });
  EXPECT_EQ(r.code, kOk);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["indices"]["w_e"], 27);
}

TEST(Compute, DumpPairsCsv) {
  const TempFile dump("", "pairs.csv");
  ComputeOptions opts;
  opts.dump_pairs_path = dump.path.string();
  compute_report(generate_linear_spec(2), opts);
  std::ifstream in(dump.path);
  std::string header, line;
  std::getline(in, header);
  EXPECT_EQ(header, "i,j,m00,m01,m10,m11,f");
  int rows = 0;
  Int total = 0;
  while (std::getline(in, line)) {
    ++rows;
    total += std::stoll(line.substr(line.rfind(',') + 1));
  }
  EXPECT_EQ(rows, 6 * 5 / 2);
  EXPECT_EQ(total, 106);
}

TEST(Verify, PassesOnSmallRuns) {
  VerifyOptions opts;
  opts.max_n = 1;
  opts.random_count = 0;
  const VerifyOutcome one = run_verification(opts);
  EXPECT_TRUE(one.passed) << one.failure;
  EXPECT_EQ(one.instances, 1);

  opts.max_n = 6;
  opts.seed = 7;
  opts.random_count = 20;
  const VerifyOutcome six = run_verification(opts);
  EXPECT_TRUE(six.passed) << six.failure;
  EXPECT_EQ(six.instances, 26);
}

TEST(Verify, InjectedFaultIsCaughtWithCounterexample) {
  VerifyOptions opts;
  opts.max_n = 4;
  opts.random_count = 5;
  opts.fault = [](const SqueezeSpec& s, CutValues& v) {
    if (s.hexagon_count == 3) v.w_e += 1;
  };
  const VerifyOutcome o = run_verification(opts);
  EXPECT_FALSE(o.passed);
  ASSERT_TRUE(o.counterexample.has_value());
  EXPECT_EQ(o.counterexample->hexagon_count, 3);

  CmdResult r = capture([&](auto& out, auto& err) { return cmd_verify(opts, false, out, err); });
  EXPECT_EQ(r.code, kVerificationFailure);
  EXPECT_NE((r.out + r.err).find("phenylene v1"), std::string::npos);
}

TEST(Bench, RowsAndCsv) {
  BenchOptions opts;
  opts.repeats = 1;
  const auto rows = run_bench({1}, opts);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].edges, 6);
  EXPECT_TRUE(rows[0].oracle_seconds.has_value());

  const auto big = run_bench({1024, 4096, 16384}, opts);
  ASSERT_EQ(big.size(), 3u);
  EXPECT_LT(big[0].cut_seconds, big[2].cut_seconds);
  EXPECT_FALSE(big[2].oracle_seconds.has_value());

  std::ostringstream csv;
  write_bench_csv(csv, rows);
  EXPECT_EQ(csv.str().substr(0, csv.str().find('\n')), "n,edges,cut_us,hyper_us,oracle_us");
}

TEST(Bench, Slope) {
  EXPECT_NEAR(log_log_slope({1, 2, 4, 8}, {3, 6, 12, 24}), 1.0, 1e-12);
  EXPECT_NEAR(log_log_slope({1, 2, 4}, {1, 4, 16}), 2.0, 1e-12);
}

TEST(Export, EdgeListAndOracleRoundTrip) {
  const TempFile spec("phenylene v1\n2\n2 1 0\n", "two.txt");
  CmdResult r = capture([&](auto& o, auto& e) { return cmd_export(spec.path.string(), o, e); });
  ASSERT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, export_edge_list(t::linear(2)));
  const TempFile edges(r.out, "two.edges");
  r = capture([&](auto& o, auto& e) { return cmd_oracle(edges.path.string(), o, e); });
  ASSERT_EQ(r.code, kOk);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["w_e"], 232);
}

TEST(Binary, RunsEndToEnd) {
  const TempFile spec("phenylene v1\n1\n", "bin.txt");
  const std::string cmd = std::string(PHENYL_CLI_PATH) + " compute --input " + spec.path.string();
  FILE* pipe = ::popen(cmd.c_str(), "r");
  ASSERT_NE(pipe, nullptr);
  std::string out;
  char buf[4096];
  while (std::size_t k = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, k);
  EXPECT_EQ(::pclose(pipe), 0);
  EXPECT_NE(out.find("\"w_e\": 27"), std::string::npos) << out;
}
