#include "phenyl/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "phenyl/closed_forms.hpp"
#include "phenyl/cut_index.hpp"
#include "phenyl/cuts.hpp"
#include "phenyl/hyper.hpp"
#include "phenyl/oracle.hpp"
#include "phenyl/phenylene.hpp"

namespace phenyl::cli {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Int micros(double seconds) { return static_cast<Int>(std::llround(seconds * 1e6)); }

template <typename F>
double best_of(int repeats, F&& f) {
  double best = 0;
  for (int r = 0; r < std::max(repeats, 1); ++r) {
    const auto start = Clock::now();
    f();
    const double t = seconds_since(start);
    if (r == 0 || t < best) best = t;
  }
  return best;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SqueezeError(SqueezeError::Kind::Parse, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::vector<std::size_t>> sorted_classes(std::vector<std::vector<std::size_t>> classes) {
  for (auto& c : classes) std::sort(c.begin(), c.end());
  std::sort(classes.begin(), classes.end());
  return classes;
}

}  // namespace

Json compute_report(const SqueezeSpec& spec, const ComputeOptions& opts) {
  Json timing = Json::object();
  auto phase = [&](const char* name, auto&& f) {
    const auto start = Clock::now();
    auto result = f();
    timing[name] = micros(seconds_since(start));
    return result;
  };

  const Squeeze squeeze = phase("validate", [&] { return validate_squeeze(spec); });
  const Phenylene g = phase("build", [&] { return build_phenylene(squeeze); });
  const EdgeWienerResult ew = phase("edge_wiener_cut", [&] { return edge_wiener_cut(g); });
  const std::vector<ThetaClass> classes = phase("theta_classes", [&] { return theta_classes(g); });

  std::ofstream pairs_out;
  if (!opts.dump_pairs_path.empty()) {
    pairs_out.open(opts.dump_pairs_path);
    if (!pairs_out) throw SqueezeError(SqueezeError::Kind::Parse, "cannot write '" + opts.dump_pairs_path + "'");
    pairs_out << "i,j,m00,m01,m10,m11,f\n";
  }
  const Int star = phase("wwe_star", [&] {
    Int sum = 0;
    for_each_pair(g, classes, [&](const PairCounts& pc) {
      const Int f = pair_contribution(pc);
      sum = checked::add(sum, f, "WW_e*");
      if (pairs_out.is_open())
        pairs_out << pc.i << ',' << pc.j << ',' << pc.m00 << ',' << pc.m01 << ',' << pc.m10 << ',' << pc.m11 << ','
                  << f << '\n';
    });
    return sum;
  });
  const Int ww_e = edge_hyper_wiener(ew.w_e, star, ew.edge_count);

  check_edge_identity(ew);
  if (ww_e != checked::sub(checked::add(checked::mul(2, ew.w_e), star), checked::pairs(ew.edge_count)))
    throw IdentityViolation("WW_e != 2 W_e + WW_e* - binom(|E|, 2)");

  Json report;
  report["schema"] = "phenyl.index-report.v1";

  Json input;
  input["spec_hash"] = spec_hash(spec);
  input["hexagons"] = spec.hexagon_count;
  input["vertices"] = g.vertex_count;
  input["edges"] = g.edge_count();
  input["theta_class_count"] = classes.size();
  Json sizes = Json::array();
  for (const auto& c : classes) sizes.push_back(c.edge_ids.size());
  input["theta_class_sizes"] = sizes;
  Json parts = Json::array();
  for (const auto& p : direction_partition(g)) parts.push_back(p.size());
  input["direction_class_sizes"] = parts;
  report["input"] = input;

  Json indices;
  Json methods;
  indices["w_e_hat"] = ew.w_e_hat;
  methods["w_e_hat"] = "cut";
  indices["w_e"] = ew.w_e;
  methods["w_e"] = "cut";
  indices["wwe_star"] = star;
  methods["wwe_star"] = "cut";
  indices["ww_e"] = ww_e;
  methods["ww_e"] = "cut";

  Json per_tree = Json::array();
  for (std::size_t i = 0; i < ew.per_tree.size(); ++i) {
    Json t;
    t["tree"] = i + 1;
    t["w_e_hat"] = ew.per_tree[i].w_e_hat;
    t["w_v"] = ew.per_tree[i].w_v;
    t["w_ve"] = ew.per_tree[i].w_ve;
    per_tree.push_back(t);
  }

  Json oracle_block;
  if (opts.with_oracle) {
    if (static_cast<Int>(g.edge_count()) > opts.oracle_edge_bound) {
      oracle_block["skipped"] = "edge count " + std::to_string(g.edge_count()) + " exceeds bound " +
                                std::to_string(opts.oracle_edge_bound);
    } else {
      const auto start = Clock::now();
      const oracle::GenericGraph og = oracle::from_phenylene(g);
      oracle_block["w_e_hat"] = oracle::edge_wiener_hat_oracle(og);
      oracle_block["w_e"] = oracle::edge_wiener_oracle(og);
      oracle_block["ww_e"] = oracle::edge_hyper_wiener_oracle(og);
      oracle_block["w_v"] = oracle::wiener_v_oracle(og);
      oracle_block["w_ve"] = oracle::vertex_edge_wiener_oracle(og);
      oracle_block["ww"] = oracle::hyper_wiener_oracle(og);
      oracle_block["agrees"] = oracle_block["w_e_hat"] == ew.w_e_hat && oracle_block["w_e"] == ew.w_e &&
                               oracle_block["ww_e"] == ww_e;
      timing["oracle"] = micros(seconds_since(start));

      for (const char* key : {"w_v", "w_ve", "ww"}) {
        indices[key] = oracle_block[key];
        methods[key] = "oracle";
      }
    }
  }

  report["indices"] = indices;
  report["methods"] = methods;
  report["per_tree"] = per_tree;
  if (opts.with_oracle) report["oracle"] = oracle_block;

  if (spec == generate_linear_spec(spec.hexagon_count)) {
    const LinearFormulaReport lf = linear_formulas(spec.hexagon_count);
    Json formula;
    formula["w_e_hat"] = lf.w_e_hat;
    formula["w_e"] = lf.w_e;
    formula["wwe_star"] = lf.wwe_star;
    formula["ww_e"] = lf.ww_e;
    formula["agrees"] = lf.w_e_hat == ew.w_e_hat && lf.w_e == ew.w_e && lf.wwe_star == star && lf.ww_e == ww_e;
    report["formula"] = formula;
  }

  report["timing_us"] = timing;
  return report;
}

Json strip_timings(Json report) {
  report.erase("timing_us");
  return report;
}

std::optional<std::string> verify_instance(const SqueezeSpec& spec, const VerifyOptions& opts) {
  const Phenylene g = build_phenylene(validate_squeeze(spec));
  const EdgeWienerResult ew = edge_wiener_cut(g);
  const std::vector<ThetaClass> classes = theta_classes(g);
  CutValues cut{ew.w_e_hat, ew.w_e, edge_hyper_wiener(ew.w_e, wwe_star(g, classes), ew.edge_count)};
  if (opts.fault) opts.fault(spec, cut);

  const oracle::GenericGraph og = oracle::from_phenylene(g);
  auto mismatch = [](const char* what, Int got, Int want) {
    return std::string(what) + ": cut method " + std::to_string(got) + ", oracle " + std::to_string(want);
  };
  if (const Int o = oracle::edge_wiener_hat_oracle(og); o != cut.w_e_hat) return mismatch("hat W_e", cut.w_e_hat, o);
  if (const Int o = oracle::edge_wiener_oracle(og); o != cut.w_e) return mismatch("W_e", cut.w_e, o);
  if (const Int o = oracle::edge_hyper_wiener_oracle(og); o != cut.ww_e) return mismatch("WW_e", cut.ww_e, o);

  std::vector<std::vector<std::size_t>> traced;
  for (const auto& c : classes) traced.push_back(c.edge_ids);
  if (sorted_classes(traced) != sorted_classes(oracle::theta_star_classes(og)))
    return std::string("face-traced Theta-classes differ from Theta*");

  if (const auto pc = oracle::is_partial_cube_check(og); !pc.is_partial_cube)
    return "partial cube check failed: " + pc.witness;
  return std::nullopt;
}

VerifyOutcome run_verification(const VerifyOptions& opts) {
  VerifyOutcome outcome;
  auto check = [&](const SqueezeSpec& spec) {
    ++outcome.instances;
    if (auto failure = verify_instance(spec, opts)) {
      outcome.passed = false;
      outcome.failure = *failure;
      outcome.counterexample = spec;
      return false;
    }
    return true;
  };

  for (int n = 1; n <= opts.max_n; ++n)
    if (!check(generate_linear_spec(n))) return outcome;

  std::mt19937_64 rng(opts.seed);
  for (int k = 0; k < opts.random_count && opts.max_n >= 1; ++k) {
    const int n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(opts.max_n));
    if (!check(random_valid_spec(n, rng))) return outcome;
  }
  return outcome;
}

std::vector<BenchRow> run_bench(const std::vector<int>& ns, const BenchOptions& opts) {
  std::vector<BenchRow> rows;
  for (const int n : ns) {
    if (n < 1) throw std::invalid_argument("bench sizes must be positive");
    const Phenylene g = build_phenylene(validate_squeeze(generate_linear_spec(n)));
    BenchRow row;
    row.n = n;
    row.edges = static_cast<Int>(g.edge_count());
    Int sink = 0;
    row.cut_seconds = best_of(opts.repeats, [&] { sink += edge_wiener_cut(g).w_e; });
    if (row.edges <= opts.hyper_edge_bound)
      row.hyper_seconds = best_of(opts.repeats, [&] { sink += wwe_star(g, theta_classes(g)); });
    if (row.edges <= opts.oracle_edge_bound) {
      const oracle::GenericGraph og = oracle::from_phenylene(g);
      row.oracle_seconds = best_of(1, [&] { sink += oracle::edge_wiener_oracle(og); });
    }
    if (sink < 0) throw std::logic_error("negative index");
    rows.push_back(row);
  }
  return rows;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
  auto cell = [&](const std::optional<double>& s) {
    if (s)
      out << std::fixed << std::setprecision(1) << *s * 1e6;
    else
      out << '-';
  };
  out << "n,edges,cut_us,hyper_us,oracle_us\n";
  for (const auto& r : rows) {
    out << r.n << ',' << r.edges << ',';
    cell(r.cut_seconds);
    out << ',';
    cell(r.hyper_seconds);
    out << ',';
    cell(r.oracle_seconds);
    out << '\n';
  }
}

double log_log_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
  if (xs.size() != ys.size() || xs.size() < 2) throw std::invalid_argument("slope needs two or more points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double k = static_cast<double>(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double x = std::log(xs[i]);
    const double y = std::log(ys[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (k * sxy - sx * sy) / (k * sxx - sx * sx);
}

int cmd_generate(const std::string& kind, int n, std::ostream& out, std::ostream& err) {
  if (kind != "linear") {
    err << "error: unknown family '" << kind << "' (supported: linear)\n";
    return kUsage;
  }
  if (n < 1) {
    err << "error: hexagon count must be at least 1\n";
    return kUsage;
  }
  out << format_squeeze_spec(generate_linear_spec(n));
  return kOk;
}

int cmd_compute(const std::string& input_path, const ComputeOptions& opts, std::ostream& out, std::ostream& err) {
  try {
    const SqueezeSpec spec = parse_squeeze_spec(read_file(input_path));
    out << compute_report(spec, opts).dump(2) << '\n';
    return kOk;
  } catch (const SqueezeError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const OverflowError& e) {
    err << "error: " << e.what() << '\n';
    return kOverflow;
  } catch (const IdentityViolation& e) {
    err << "error: " << e.what() << '\n';
    return kVerificationFailure;
  }
}

int cmd_verify(const VerifyOptions& opts, bool json, std::ostream& out, std::ostream& err) {
  try {
    const VerifyOutcome v = run_verification(opts);
    if (json) {
      Json j;
      j["passed"] = v.passed;
      j["instances"] = v.instances;
      j["max_n"] = opts.max_n;
      j["seed"] = opts.seed;
      if (!v.passed) {
        j["failure"] = v.failure;
        j["counterexample"] = format_squeeze_spec(*v.counterexample);
      }
      out << j.dump(2) << '\n';
    } else {
      out << (v.passed ? "pass" : "FAIL") << ": " << v.instances << " instances (max_n " << opts.max_n << ", seed "
          << opts.seed << ")\n";
    }
    if (!v.passed) {
      err << "mismatch: " << v.failure << "\ncounterexample:\n" << format_squeeze_spec(*v.counterexample);
      return kVerificationFailure;
    }
    return kOk;
  } catch (const OverflowError& e) {
    err << "error: " << e.what() << '\n';
    return kOverflow;
  }
}

int cmd_bench(const std::vector<int>& ns, const BenchOptions& opts, bool json, std::ostream& out, std::ostream& err) {
  try {
    const auto rows = run_bench(ns, opts);
    if (json) {
      Json j = Json::array();
      for (const auto& r : rows) {
        Json row;
        row["n"] = r.n;
        row["edges"] = r.edges;
        row["cut_us"] = r.cut_seconds * 1e6;
        row["hyper_us"] = r.hyper_seconds ? Json(*r.hyper_seconds * 1e6) : Json(nullptr);
        row["oracle_us"] = r.oracle_seconds ? Json(*r.oracle_seconds * 1e6) : Json(nullptr);
        j.push_back(row);
      }
      out << j.dump(2) << '\n';
    } else {
      write_bench_csv(out, rows);
    }
    return kOk;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const OverflowError& e) {
    err << "error: " << e.what() << '\n';
    return kOverflow;
  }
}

int cmd_export(const std::string& input_path, std::ostream& out, std::ostream& err) {
  try {
    out << export_edge_list(build_phenylene(validate_squeeze(parse_squeeze_spec(read_file(input_path)))));
    return kOk;
  } catch (const SqueezeError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

int cmd_oracle(const std::string& edges_path, std::ostream& out, std::ostream& err) {
  try {
    std::ifstream in(edges_path, std::ios::binary);
    if (!in) {
      err << "error: cannot read '" << edges_path << "'\n";
      return kInputError;
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    const oracle::GenericGraph g = oracle::parse_edge_list(ss.str());
    Json j;
    j["vertices"] = g.vertex_count;
    j["edges"] = g.edge_count();
    j["w_v"] = oracle::wiener_v_oracle(g);
    j["w_e"] = oracle::edge_wiener_oracle(g);
    j["w_e_hat"] = oracle::edge_wiener_hat_oracle(g);
    j["w_ve"] = oracle::vertex_edge_wiener_oracle(g);
    j["ww"] = oracle::hyper_wiener_oracle(g);
    j["ww_e"] = oracle::edge_hyper_wiener_oracle(g);
    const auto pc = oracle::is_partial_cube_check(g);
    j["partial_cube"] = pc.is_partial_cube;
    if (!pc.is_partial_cube) j["witness"] = pc.witness;
    out << j.dump(2) << '\n';
    return kOk;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const OverflowError& e) {
    err << "error: " << e.what() << '\n';
    return kOverflow;
  }
}

}  // namespace phenyl::cli
